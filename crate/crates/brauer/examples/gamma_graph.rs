//! Build the component graph on the maximal avoiding subgroups of the Sylow
//! p-subgroup and read the predicted primitive quotient off its component
//! count. Prints the graph in DOT format at the end.
//!
//! ```bash
//! cargo run -p brauer --example gamma_graph
//! ```

use brauer::gamma::{gamma_outcome, EdgePolicy};
use brauer::qe::{realize, KType, QeParams};

fn main() {
    // dihedral K of order 16, A of order 16 acting with j = 3, k = 1
    let params = QeParams {
        p: 2,
        q: 17,
        k_type: KType::Dihedral,
        n: 3,
        m: 4,
        j: 3,
        k: Some(1),
        r: None,
    };
    let real = realize(&params).expect("valid parameters");
    println!(
        "{} realized: |G| = {}, |P| = {}",
        params.label(),
        real.group.order(),
        real.p_subgroup.order()
    );

    let outcome = gamma_outcome(&real, EdgePolicy::default()).expect("enumerable");
    let graph = outcome.graph.as_ref().expect("K is non-trivial");
    println!(
        "applicability: {:?}; {} vertices, {} edges, {} components",
        outcome.applicability,
        graph.vertices.len(),
        graph.edges.len(),
        graph.component_count
    );
    for (i, vertex) in graph.vertices.iter().enumerate() {
        println!(
            "  vertex {i}: order {} subgroup in component {}",
            vertex.order(),
            graph.component_of[i]
        );
    }
    if let Some(predicted) = &outcome.predicted {
        println!("predicted primitive quotient: {predicted}");
    }
    println!();
    print!("{}", graph.to_dot());
}
