//! Shared fixtures for the integration suites: a corpus of realizable
//! parameter tuples covering every K family at oracle-friendly orders.

use brauer::qe::{KType, QeParams};

pub fn tuple(p: u64, q: u64, k_type: KType, n: u32, m: u32, j: i64, k: Option<i64>) -> QeParams {
    QeParams {
        p,
        q,
        k_type,
        n,
        m,
        j,
        k,
        r: None,
    }
}

/// Valid tuples with group order at most 600, touching every family, both
/// parities of k, trivial K, and both hypothesis outcomes.
pub fn corpus() -> Vec<QeParams> {
    vec![
        // trivial K
        tuple(2, 3, KType::Cyclic, 0, 1, 1, None),
        tuple(2, 5, KType::Cyclic, 0, 2, 1, None),
        tuple(3, 7, KType::Cyclic, 0, 1, 1, None),
        // cyclic K, odd p
        tuple(3, 7, KType::Cyclic, 1, 1, 1, None),
        tuple(3, 7, KType::Cyclic, 2, 1, 1, None),
        tuple(3, 7, KType::Cyclic, 2, 1, 4, None),
        tuple(3, 13, KType::Cyclic, 1, 1, 1, None),
        // cyclic K, p = 2
        tuple(2, 5, KType::Cyclic, 1, 2, 1, None),
        tuple(2, 5, KType::Cyclic, 2, 2, 1, None),
        tuple(2, 5, KType::Cyclic, 2, 2, 3, None),
        tuple(2, 5, KType::Cyclic, 3, 2, 3, None),
        tuple(2, 5, KType::Cyclic, 2, 1, 3, None), // hypothesis fails
        tuple(2, 13, KType::Cyclic, 3, 2, 5, None),
        // dihedral K
        tuple(2, 3, KType::Dihedral, 2, 1, 1, Some(0)),
        tuple(2, 3, KType::Dihedral, 3, 1, 1, Some(4)),
        tuple(2, 5, KType::Dihedral, 2, 2, 1, Some(0)),
        tuple(2, 5, KType::Dihedral, 2, 2, 3, Some(1)),
        tuple(2, 5, KType::Dihedral, 2, 2, 3, Some(2)),
        tuple(2, 5, KType::Dihedral, 3, 2, 3, Some(1)),
        tuple(2, 5, KType::Dihedral, 3, 2, 3, Some(0)),
        tuple(2, 5, KType::Dihedral, 3, 2, 3, Some(4)),
        tuple(2, 5, KType::Dihedral, 3, 2, 5, Some(0)),
        // quaternion K
        tuple(2, 3, KType::Quaternion, 2, 1, 1, Some(0)),
        tuple(2, 5, KType::Quaternion, 2, 2, 1, Some(1)),
        tuple(2, 5, KType::Quaternion, 2, 2, 3, Some(0)),
        tuple(2, 5, KType::Quaternion, 3, 2, 3, Some(2)),
        // semidihedral K
        tuple(2, 5, KType::Semidihedral, 3, 2, 1, Some(0)),
        tuple(2, 5, KType::Semidihedral, 3, 2, 3, Some(2)),
        tuple(2, 3, KType::Semidihedral, 3, 1, 1, Some(0)),
    ]
}
