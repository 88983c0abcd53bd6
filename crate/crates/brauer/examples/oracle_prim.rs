//! The exact oracle end to end: realize a group, enumerate its subgroup
//! classes, take the kernel of the marks matrix, assemble the imprimitive
//! sublattice, and compute the quotient invariants.
//!
//! ```bash
//! cargo run -p brauer --example oracle_prim
//! ```

use brauer::groups::subgroup_classes;
use brauer::qe::{realize, KType, QeParams};
use brauer::relations::{brauer_kernel, imprimitive_sublattice, prim};

fn main() {
    let params = QeParams {
        p: 3,
        q: 7,
        k_type: KType::Cyclic,
        n: 1,
        m: 1,
        j: 1,
        k: None,
        r: None,
    };
    let real = realize(&params).expect("valid parameters");
    println!("{}: |G| = {}", params.label(), real.group.order());

    let classes = subgroup_classes(&real.group).expect("within the enumeration bound");
    println!(
        "{} subgroup classes over {} subgroups; {} cyclic classes",
        classes.len(),
        classes.subgroup_count(),
        classes.cyclic_class_ids().len()
    );
    for (i, class) in classes.classes().iter().enumerate() {
        println!(
            "  class {i}: order {}, {} conjugates{}",
            class.order(),
            class.conjugates.len(),
            if class.is_cyclic { ", cyclic" } else { "" }
        );
    }

    let kernel = brauer_kernel(&real.group, &classes);
    println!("relation lattice rank: {}", kernel.rank());
    for elt in kernel.basis_elements() {
        let entries: Vec<String> = elt
            .entries(&classes)
            .iter()
            .map(|e| format!("{:+} [G/H_{}]", e.coefficient, e.class_index))
            .collect();
        println!("  relation: {}", entries.join(" "));
    }

    let imprimitive = imprimitive_sublattice(&real.group, &classes).expect("enumerable");
    println!("imprimitive sublattice rank: {}", imprimitive.rank());

    let structure = prim(&real.group, &classes).expect("enumerable");
    println!("primitive quotient: {}", structure.invariants);
}
