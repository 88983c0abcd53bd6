//! Subgroups as membership bitsets with cached element lists, plus the basic
//! constructions on them: generated subgroups, conjugation, normality,
//! centralizers, normalizers and quotient groups.

use super::bitset::BitSet;
use super::finite::{FiniteGroup, GroupError};

/// A subgroup given by its membership set over the parent group's indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: BitSet,
    elems: Vec<u32>,
}

impl Subgroup {
    /// Wraps a membership set that is already known to be closed. Lagrange
    /// and closure are debug-checked.
    pub fn from_bitset(g: &FiniteGroup, members: BitSet) -> Self {
        let elems: Vec<u32> = members.iter().map(|i| i as u32).collect();
        debug_assert!(!elems.is_empty() && members.contains(g.identity()));
        debug_assert_eq!(g.order() % elems.len(), 0, "Lagrange violation");
        debug_assert!(
            elems.iter().all(|&a| elems
                .iter()
                .all(|&b| members.contains(g.mul(a as usize, b as usize)))),
            "membership set is not closed under multiplication"
        );
        Subgroup { members, elems }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        let mut members = BitSet::new(g.order());
        members.insert(g.identity());
        Subgroup::from_bitset(g, members)
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        let mut members = BitSet::new(g.order());
        for i in 0..g.order() {
            members.insert(i);
        }
        Subgroup::from_bitset(g, members)
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, g: &FiniteGroup, other: &Subgroup) -> Subgroup {
        Subgroup::from_bitset(g, self.members.intersection(&other.members))
    }

    /// True if some element of the group realizes `self` as a cyclic group.
    pub fn is_cyclic(&self, g: &FiniteGroup) -> bool {
        self.elems
            .iter()
            .any(|&e| g.element_order(e as usize) == self.order())
    }

    /// `g S g^-1` as a new subgroup.
    pub fn conjugate_by(&self, g: &FiniteGroup, by: usize) -> Subgroup {
        let mut members = BitSet::new(g.order());
        for &e in &self.elems {
            members.insert(g.conj(by, e as usize));
        }
        Subgroup::from_bitset(g, members)
    }

    /// Index of this subgroup in an ambient subgroup.
    pub fn index_in(&self, ambient: &Subgroup) -> usize {
        ambient.order() / self.order()
    }
}

/// Smallest subgroup containing `gens`, by breadth-first closure over the
/// multiplication table.
pub fn closure(g: &FiniteGroup, gens: &[usize]) -> Subgroup {
    closure_with_limit(g, gens, usize::MAX).expect("unlimited closure")
}

/// Closure that abandons early once more than `limit` elements accumulate;
/// callers that only need to know "generates more than half the carrier"
/// use this to cut off hopeless joins.
pub fn closure_with_limit(g: &FiniteGroup, gens: &[usize], limit: usize) -> Option<Subgroup> {
    let mut members = BitSet::new(g.order());
    let mut elems: Vec<u32> = Vec::with_capacity(gens.len() + 1);
    let mut queue: Vec<u32> = Vec::new();
    members.insert(g.identity());
    elems.push(g.identity() as u32);
    for &x in gens {
        if !members.contains(x) {
            members.insert(x);
            elems.push(x as u32);
            queue.push(x as u32);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head] as usize;
        head += 1;
        // products with everything known so far, both orders
        let mut k = 0;
        while k < elems.len() {
            let v = elems[k] as usize;
            k += 1;
            for w in [g.mul(u, v), g.mul(v, u)] {
                if !members.contains(w) {
                    members.insert(w);
                    elems.push(w as u32);
                    queue.push(w as u32);
                    if elems.len() > limit {
                        return None;
                    }
                }
            }
        }
    }
    elems.sort_unstable();
    Some(Subgroup::from_bitset(g, members))
}

/// Join of a subgroup with extra generators.
pub fn extend(g: &FiniteGroup, base: &Subgroup, extra: &[usize]) -> Subgroup {
    let mut gens: Vec<usize> = base.elems().iter().map(|&e| e as usize).collect();
    gens.extend_from_slice(extra);
    closure(g, &gens)
}

/// True iff `u s u^-1 = s` setwise for every `u` in `ambient`.
pub fn is_normal_in(g: &FiniteGroup, s: &Subgroup, ambient: &Subgroup) -> bool {
    ambient.elems().iter().all(|&u| {
        s.elems()
            .iter()
            .all(|&e| s.contains(g.conj(u as usize, e as usize)))
    })
}

pub fn is_normal(g: &FiniteGroup, s: &Subgroup) -> bool {
    is_normal_in(g, s, &Subgroup::whole(g))
}

/// Centralizer of a single element inside `ambient`.
pub fn centralizer_of_element(g: &FiniteGroup, x: usize, ambient: &Subgroup) -> Subgroup {
    let mut members = BitSet::new(g.order());
    for &u in ambient.elems() {
        if g.mul(u as usize, x) == g.mul(x, u as usize) {
            members.insert(u as usize);
        }
    }
    Subgroup::from_bitset(g, members)
}

/// Centre of a subgroup: elements commuting with all of it.
pub fn centre(g: &FiniteGroup, ambient: &Subgroup) -> Subgroup {
    let mut members = BitSet::new(g.order());
    for &u in ambient.elems() {
        if ambient
            .elems()
            .iter()
            .all(|&v| g.mul(u as usize, v as usize) == g.mul(v as usize, u as usize))
        {
            members.insert(u as usize);
        }
    }
    Subgroup::from_bitset(g, members)
}

/// Normalizer of `s` inside `ambient`.
pub fn normalizer_in(g: &FiniteGroup, s: &Subgroup, ambient: &Subgroup) -> Subgroup {
    let mut members = BitSet::new(g.order());
    for &u in ambient.elems() {
        let u = u as usize;
        if s.elems().iter().all(|&e| s.contains(g.conj(u, e as usize))) {
            members.insert(u);
        }
    }
    Subgroup::from_bitset(g, members)
}

/// A quotient group together with the projection from parent indices to
/// coset indices.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// parent element index -> coset index (total on the carrier; elements
    /// outside the carrier map to u32::MAX)
    pub projection: Vec<u32>,
    /// coset index -> a representative parent element
    pub representatives: Vec<u32>,
}

impl Quotient {
    /// Full preimage of a subgroup of the quotient, as a subgroup of the
    /// parent (restricted to the carrier the quotient was formed in).
    pub fn preimage(&self, g: &FiniteGroup, carrier: &Subgroup, s: &Subgroup) -> Subgroup {
        let mut members = BitSet::new(g.order());
        for &u in carrier.elems() {
            if s.contains(self.projection[u as usize] as usize) {
                members.insert(u as usize);
            }
        }
        Subgroup::from_bitset(g, members)
    }
}

/// Quotient of a subgroup `carrier` by a subgroup `n` normal in it. Cosets
/// are numbered by their least representative, in increasing order.
pub fn quotient_in(
    g: &FiniteGroup,
    carrier: &Subgroup,
    n: &Subgroup,
) -> Result<Quotient, GroupError> {
    if !n.is_subset_of(carrier) || !is_normal_in(g, n, carrier) {
        return Err(GroupError::NotNormal);
    }
    let mut projection = vec![u32::MAX; g.order()];
    let mut representatives: Vec<u32> = Vec::with_capacity(carrier.order() / n.order());
    for &u in carrier.elems() {
        if projection[u as usize] != u32::MAX {
            continue;
        }
        let coset = representatives.len() as u32;
        representatives.push(u);
        for &v in n.elems() {
            projection[g.mul(u as usize, v as usize)] = coset;
        }
    }
    let count = representatives.len();
    let table_fn = |i: usize, j: usize| {
        let p = g.mul(representatives[i] as usize, representatives[j] as usize);
        projection[p] as usize
    };
    let group = FiniteGroup::from_fn(count, table_fn)?;
    Ok(Quotient {
        group,
        projection,
        representatives,
    })
}

/// Quotient of the whole group by a normal subgroup.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<Quotient, GroupError> {
    quotient_in(g, &Subgroup::whole(g), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::testgroups;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn closure_of_nothing_is_trivial() {
        let g = testgroups::cyclic(12);
        let s = closure(&g, &[]);
        assert_eq!(s.order(), 1);
        assert!(s.contains(g.identity()));
    }

    #[test]
    fn closure_of_everything_is_whole() {
        let g = testgroups::dihedral(8);
        let all: Vec<usize> = (0..g.order()).collect();
        assert_eq!(closure(&g, &all).order(), 8);
        assert_eq!(extend(&g, &Subgroup::trivial(&g), &all).order(), 8);
    }

    #[test]
    fn closure_limit_abandons_large_joins() {
        let g = testgroups::cyclic(30);
        assert!(closure_with_limit(&g, &[1], 10).is_none());
        assert!(closure_with_limit(&g, &[2], 15).is_some());
    }

    #[test]
    fn normality_in_dihedral_16() {
        // D_16 with rotation subgroup normal, a reflection not
        let g = testgroups::dihedral(16);
        let rot = closure(&g, &[1]);
        assert_eq!(rot.order(), 8);
        assert!(is_normal(&g, &rot));
        let refl = closure(&g, &[8]);
        assert_eq!(refl.order(), 2);
        assert!(!is_normal(&g, &refl));
        assert!(is_normal(&g, &Subgroup::trivial(&g)));
        assert!(is_normal(&g, &Subgroup::whole(&g)));
    }

    #[test]
    fn quotient_by_whole_and_trivial() {
        let g = testgroups::quaternion8();
        let q = quotient(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(q.group.order(), 1);
        let q = quotient(&g, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(q.group.order(), 8);
    }

    #[test]
    fn quaternion_mod_centre_is_klein_four() {
        let g = testgroups::quaternion8();
        let z = centre(&g, &Subgroup::whole(&g));
        assert_eq!(z.order(), 2);
        let q = quotient(&g, &z).unwrap();
        assert_eq!(q.group.order(), 4);
        assert_eq!(q.group.exponent(), 2);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let g = testgroups::dihedral(16);
        let refl = closure(&g, &[8]);
        assert!(matches!(quotient(&g, &refl), Err(GroupError::NotNormal)));
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let g = testgroups::dihedral(24);
        let n = closure(&g, &[3]); // rotations of order 4 -> normal
        assert!(is_normal(&g, &n));
        let q = quotient(&g, &n).unwrap();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..10_000 {
            let a = rng.gen_range(0..g.order());
            let b = rng.gen_range(0..g.order());
            let lhs = q.projection[g.mul(a, b)];
            let rhs = q
                .group
                .mul(q.projection[a] as usize, q.projection[b] as usize);
            assert_eq!(lhs as usize, rhs);
        }
    }
}
