//! Enumerate the subgroups of a realized group, grouped into conjugacy
//! classes, and locate the structurally distinguished ones.
//!
//! ```bash
//! cargo run -p brauer --example subgroup_classes
//! ```

use brauer::groups::{is_normal, subgroup_classes};
use brauer::qe::{realize, KType, QeParams};

fn main() {
    // C_3 extended by the quaternion group of order 8 and a C_2 on top
    let params = QeParams {
        p: 2,
        q: 3,
        k_type: KType::Quaternion,
        n: 2,
        m: 1,
        j: 1,
        k: Some(0),
        r: None,
    };
    let real = realize(&params).expect("valid parameters");
    let g = &real.group;
    println!("{}: |G| = {}", params.label(), g.order());

    let classes = subgroup_classes(g).expect("within the enumeration bound");
    println!(
        "{} conjugacy classes, {} subgroups total",
        classes.len(),
        classes.subgroup_count()
    );
    for (i, class) in classes.classes().iter().enumerate() {
        let rep = &class.representative;
        println!(
            "  class {i:2}: order {:3}, {} conjugate(s){}{}",
            class.order(),
            class.conjugates.len(),
            if class.is_cyclic { ", cyclic" } else { "" },
            if is_normal(g, rep) { ", normal" } else { "" },
        );
    }

    let maximal = classes.maximal_class_ids();
    println!(
        "maximal subgroup classes: {:?} (orders {:?})",
        maximal,
        maximal
            .iter()
            .map(|&i| classes.classes()[i].order())
            .collect::<Vec<_>>()
    );
    let minimal_normal = classes.minimal_normal_class_ids();
    println!(
        "minimal normal subgroup classes: {:?} (orders {:?})",
        minimal_normal,
        minimal_normal
            .iter()
            .map(|&i| classes.classes()[i].order())
            .collect::<Vec<_>>()
    );

    // the distinguished subgroups of the realization are all catalogued
    for (name, sub) in [
        ("C", &real.c_subgroup),
        ("K", &real.k_subgroup),
        ("P", &real.p_subgroup),
        ("A", &real.a_subgroup),
        ("Z", real.z.as_ref().unwrap()),
    ] {
        let class = classes.class_index_of(sub.members()).expect("catalogued");
        println!("distinguished {name}: order {}, class {class}", sub.order());
    }
}
