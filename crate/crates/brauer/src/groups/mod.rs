//! Generic finite-group machinery: dense-index groups with multiplication
//! tables, subgroups as bitsets, subgroup-class enumeration, quotients and
//! recognition of the small families the rest of the crate cares about.

mod bitset;
mod classes;
mod family;
mod finite;
mod subgroup;

pub use bitset::BitSet;
pub use classes::{
    subgroup_classes, subgroup_classes_restricted, subgroup_classes_with_bound,
    subgroup_classes_within, SubgroupClass, SubgroupClassTable, DEFAULT_ORDER_BOUND,
};
pub use family::{family_test, GroupFamily};
pub use finite::{FiniteGroup, GroupError};
pub use subgroup::{
    centralizer_of_element, centre, closure, closure_with_limit, extend, is_normal, is_normal_in,
    normalizer_in, quotient, quotient_in, Quotient, Subgroup,
};

/// Hand-built groups for unit tests across the crate.
#[cfg(test)]
pub(crate) mod testgroups {
    use super::FiniteGroup;

    pub fn cyclic(n: usize) -> FiniteGroup {
        FiniteGroup::from_fn(n, |i, j| (i + j) % n).unwrap()
    }

    pub fn klein_four() -> FiniteGroup {
        FiniteGroup::from_fn(4, |i, j| i ^ j).unwrap()
    }

    /// Dihedral group of order `n = 2m`: indices `0..m` rotations r^i,
    /// `m..2m` reflections r^i s.
    pub fn dihedral(n: usize) -> FiniteGroup {
        let m = n / 2;
        FiniteGroup::from_fn(n, move |a, b| {
            let (i, s) = (a % m, a >= m);
            let (j, t) = (b % m, b >= m);
            // (r^i s^s)(r^j s^t): s r^j = r^{-j} s
            let rot = if s { (i + m - j % m) % m } else { (i + j) % m };
            rot + if s ^ t { m } else { 0 }
        })
        .unwrap()
    }

    /// Generalized quaternion group of order `2^t`, t >= 3: indices `0..n/2`
    /// are c^i, the rest c^i x with x^2 = c^(n/4), x c x^-1 = c^-1.
    pub fn generalized_quaternion(n: usize) -> FiniteGroup {
        let m = n / 2;
        FiniteGroup::from_fn(n, move |a, b| {
            let (i, s) = (a % m, a >= m);
            let (j, t) = (b % m, b >= m);
            let mut rot = if s { (i + m - j % m) % m } else { (i + j) % m };
            if s && t {
                rot = (rot + m / 2) % m; // x^2 = c^(m/2)
            }
            rot + if s ^ t { m } else { 0 }
        })
        .unwrap()
    }

    pub fn quaternion8() -> FiniteGroup {
        generalized_quaternion(8)
    }

    pub fn quaternion16() -> FiniteGroup {
        generalized_quaternion(16)
    }

    /// Semidihedral group of order 16: c of order 8, x^2 = 1,
    /// x c x^-1 = c^3.
    pub fn semidihedral16() -> FiniteGroup {
        FiniteGroup::from_fn(16, |a, b| {
            let (i, s) = (a % 8, a >= 8);
            let (j, t) = (b % 8, b >= 8);
            let rot = if s { (i + 3 * j) % 8 } else { (i + j) % 8 };
            rot + if s ^ t { 8 } else { 0 }
        })
        .unwrap()
    }

    /// Symmetric group on 3 letters as C_3 with an inverting involution.
    pub fn symmetric3() -> FiniteGroup {
        dihedral(6)
    }

    /// Heisenberg group of order p^3: triples (a, b, c) with
    /// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
    pub fn heisenberg(p: usize) -> FiniteGroup {
        FiniteGroup::from_fn(p * p * p, move |u, v| {
            let (a, b, c) = (u / (p * p), (u / p) % p, u % p);
            let (a2, b2, c2) = (v / (p * p), (v / p) % p, v % p);
            let (a3, b3, c3) = ((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
            a3 * p * p + b3 * p + c3
        })
        .unwrap()
    }
}
