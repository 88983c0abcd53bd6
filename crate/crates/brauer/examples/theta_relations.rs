//! Möbius-weighted pair relations: pick two maximal avoiding subgroups from
//! distinct graph components, build their alternating relation, and verify
//! it is a Brauer relation that survives in the primitive quotient.
//!
//! ```bash
//! cargo run -p brauer --example theta_relations
//! ```

use brauer::burnside::theta;
use brauer::gamma::{build_gamma, enumerate_hm, EdgePolicy};
use brauer::groups::subgroup_classes;
use brauer::qe::{realize, KType, QeParams};
use brauer::relations::{brauer_kernel, imprimitive_sublattice};

fn main() {
    let params = QeParams {
        p: 2,
        q: 5,
        k_type: KType::Cyclic,
        n: 2,
        m: 2,
        j: 1,
        k: None,
        r: None,
    };
    let real = realize(&params).expect("valid parameters");
    println!("{}: |G| = {}", params.label(), real.group.order());

    let z = real.z.as_ref().expect("K is non-trivial");
    let (avoiding, vertices) = enumerate_hm(&real.group, &real.p_subgroup, z).expect("enumerable");
    println!(
        "{} subgroups avoid the central subgroup; {} of maximal order {}",
        avoiding.len(),
        vertices.len(),
        vertices[0].order()
    );

    let graph = build_gamma(
        &real.group,
        &real.p_subgroup,
        vertices.clone(),
        params.p,
        EdgePolicy::default(),
    );
    println!("graph components: {}", graph.component_count);
    let reps = graph.component_representatives();

    let classes = subgroup_classes(&real.group).expect("enumerable");
    let kernel = brauer_kernel(&real.group, &classes);
    let imprimitive = imprimitive_sublattice(&real.group, &classes).expect("enumerable");

    let elt = theta(
        &real,
        &classes,
        &vertices,
        &graph.vertices[reps[0]],
        &graph.vertices[reps[1]],
    )
    .expect("both endpoints are vertices");
    println!("pair relation across components {:?}:", &reps[..2]);
    for entry in elt.entries(&classes) {
        println!(
            "  {:+} [G/H] with |H| = {} (class {})",
            entry.coefficient, entry.subgroup_order, entry.class_index
        );
    }
    println!("lies in the relation lattice: {}", kernel.contains(&elt));
    println!(
        "vanishes in the primitive quotient: {}",
        imprimitive.contains(elt.coeffs())
    );

    // the same construction on one vertex twice is identically zero
    let zero = theta(
        &real,
        &classes,
        &vertices,
        &graph.vertices[0],
        &graph.vertices[0],
    )
    .unwrap();
    println!("theta(H, H) = 0: {}", zero.is_zero());
}
