//! Realize a group from its parameter tuple and inspect the normal-form
//! arithmetic: generators, distinguished subgroups, the hypothesis flags,
//! and the text fixture format.
//!
//! ```bash
//! cargo run -p brauer --example group_realization
//! ```

use brauer::qe::{realize, validate, KType, QeParams};

fn main() {
    let params = QeParams {
        p: 2,
        q: 5,
        k_type: KType::Semidihedral,
        n: 3,
        m: 2,
        j: 1,
        k: Some(0),
        r: None,
    };
    assert!(validate(&params).is_empty());
    let real = realize(&params).expect("valid parameters");
    let g = &real.group;

    println!("{}: |G| = {}", params.label(), g.order());
    println!(
        "generators: t = {}, c = {}, x = {:?}, h = {} (resolved r = {})",
        real.t, real.c, real.x, real.h, real.r
    );
    println!(
        "orders: |t| = {}, |c| = {}, |x| = {}, |h| = {}",
        g.element_order(real.t),
        g.element_order(real.c),
        real.x.map_or(0, |x| g.element_order(x)),
        g.element_order(real.h)
    );
    for (name, sub) in [
        ("C", &real.c_subgroup),
        ("K", &real.k_subgroup),
        ("P", &real.p_subgroup),
        ("A", &real.a_subgroup),
        ("C_K", &real.c_k),
        ("C*C_K", &real.cbar),
    ] {
        println!("|{name}| = {}", sub.order());
    }
    println!("flags: {:?}", real.hypothesis_flags());

    // the semidihedral relation x c x^-1 = c^(2^(n-1) - 1) in action
    let x = real.x.unwrap();
    let conj = g.conj(x, real.c);
    let expected = g.pow(real.c, 3);
    println!("x c x^-1 = c^3 holds: {}", conj == expected);

    // a small group as a text fixture
    let tiny = realize(&QeParams {
        p: 2,
        q: 3,
        k_type: KType::Cyclic,
        n: 0,
        m: 1,
        j: 1,
        k: None,
        r: None,
    })
    .unwrap();
    println!("\norder-6 fixture:\n{}", tiny.group.to_table_string());
}
