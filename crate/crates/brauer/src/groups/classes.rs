//! Enumeration of all subgroups of a (solvable) finite group, organized into
//! conjugacy classes.
//!
//! The enumeration seeds with the trivial subgroup and repeatedly extends a
//! known subgroup `S` by an element `y` of its normalizer whose image in
//! `N(S)/S` has prime order `l`; the extension is then the union of the `l`
//! cosets `S y^t` and needs no closure pass. Every subgroup of a solvable
//! group sits on top of such a prime-index chain, so iterating this to a
//! fixpoint finds everything. Conjugate subgroups are catalogued as whole
//! orbits so only one representative per class goes through the extension
//! step.

use std::collections::HashMap;

use super::bitset::BitSet;
use super::finite::{FiniteGroup, GroupError};
use super::subgroup::{closure, normalizer_in, Subgroup};

/// Default cap on the carrier order for subgroup enumeration.
pub const DEFAULT_ORDER_BOUND: usize = 1200;

/// One conjugacy class of subgroups: the lexicographically least member as
/// representative, plus the full orbit.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    pub representative: Subgroup,
    pub conjugates: Vec<Subgroup>,
    pub is_cyclic: bool,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.order()
    }
}

/// All subgroups of a carrier, partitioned into conjugacy classes under the
/// carrier's own conjugation action. Classes are sorted by (order, lex) of
/// their representative, so indices are deterministic across runs.
#[derive(Debug, Clone)]
pub struct SubgroupClassTable {
    carrier: Subgroup,
    classes: Vec<SubgroupClass>,
    class_of: HashMap<Vec<u64>, usize>,
}

impl SubgroupClassTable {
    pub fn carrier(&self) -> &Subgroup {
        &self.carrier
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_index_of(&self, members: &BitSet) -> Option<usize> {
        self.class_of.get(members.words()).copied()
    }

    /// Class indices whose representative is cyclic, in class order. These
    /// index the columns of the marks matrix.
    pub fn cyclic_class_ids(&self) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&i| self.classes[i].is_cyclic)
            .collect()
    }

    pub fn subgroup_count(&self) -> usize {
        self.classes.iter().map(|c| c.conjugates.len()).sum()
    }

    pub fn all_subgroups(&self) -> impl Iterator<Item = &Subgroup> {
        self.classes.iter().flat_map(|c| c.conjugates.iter())
    }

    /// Index of the class of the whole carrier.
    pub fn whole_class_id(&self) -> usize {
        self.class_of
            .get(self.carrier.members().words())
            .copied()
            .expect("carrier is always catalogued")
    }

    /// Class indices of the maximal proper subgroups.
    pub fn maximal_class_ids(&self) -> Vec<usize> {
        let carrier_order = self.carrier.order();
        (0..self.classes.len())
            .filter(|&i| {
                let s = &self.classes[i].representative;
                s.order() < carrier_order
                    && !self.all_subgroups().any(|t| {
                        t.order() > s.order() && t.order() < carrier_order && s.is_subset_of(t)
                    })
            })
            .collect()
    }

    /// Class indices of subgroups normal in the carrier (orbit size one).
    pub fn normal_class_ids(&self) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&i| self.classes[i].conjugates.len() == 1)
            .collect()
    }

    /// Class indices of the minimal non-trivial normal subgroups.
    pub fn minimal_normal_class_ids(&self) -> Vec<usize> {
        let normals = self.normal_class_ids();
        normals
            .iter()
            .copied()
            .filter(|&i| {
                let n = &self.classes[i].representative;
                n.order() > 1
                    && !normals.iter().any(|&j| {
                        let m = &self.classes[j].representative;
                        m.order() > 1 && m.order() < n.order() && m.is_subset_of(n)
                    })
            })
            .collect()
    }
}

fn commutator_subgroup(g: &FiniteGroup, s: &Subgroup) -> Subgroup {
    let mut gens = Vec::new();
    for &u in s.elems() {
        for &v in s.elems() {
            let uv = g.mul(u as usize, v as usize);
            let vu = g.mul(v as usize, u as usize);
            let c = g.mul(uv, g.inv(vu));
            if c != g.identity() {
                gens.push(c);
            }
        }
    }
    closure(g, &gens)
}

fn is_solvable(g: &FiniteGroup, carrier: &Subgroup) -> bool {
    let mut current = carrier.clone();
    loop {
        let derived = commutator_subgroup(g, &current);
        if derived.order() == 1 {
            return true;
        }
        if derived.order() == current.order() {
            return false;
        }
        current = derived;
    }
}

/// Enumerate all subgroups of `carrier` grouped into carrier-conjugacy
/// classes. Errors if the carrier order exceeds `bound` or the carrier is
/// not solvable (the prime-extension enumeration would silently miss perfect
/// subgroups there).
pub fn subgroup_classes_within(
    g: &FiniteGroup,
    carrier: &Subgroup,
    bound: usize,
) -> Result<SubgroupClassTable, GroupError> {
    if carrier.order() > bound {
        return Err(GroupError::OrderBoundExceeded {
            order: carrier.order(),
            bound,
        });
    }
    assert!(
        is_solvable(g, carrier),
        "subgroup enumeration requires a solvable carrier"
    );

    let mut class_of: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut classes: Vec<SubgroupClass> = Vec::new();
    let mut worklist: Vec<usize> = Vec::new();

    let add_orbit = |s: Subgroup,
                     classes: &mut Vec<SubgroupClass>,
                     class_of: &mut HashMap<Vec<u64>, usize>,
                     worklist: &mut Vec<usize>| {
        let mut orbit: Vec<Subgroup> = Vec::new();
        let mut seen: HashMap<Vec<u64>, ()> = HashMap::new();
        for &u in carrier.elems() {
            let t = s.conjugate_by(g, u as usize);
            if seen.insert(t.members().words().to_vec(), ()).is_none() {
                orbit.push(t);
            }
        }
        let rep = orbit
            .iter()
            .min_by(|a, b| {
                if a.members().lex_precedes(b.members()) {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                }
            })
            .expect("orbit nonempty")
            .clone();
        let id = classes.len();
        for t in &orbit {
            class_of.insert(t.members().words().to_vec(), id);
        }
        let is_cyclic = rep.is_cyclic(g);
        classes.push(SubgroupClass {
            representative: rep,
            conjugates: orbit,
            is_cyclic,
        });
        worklist.push(id);
    };

    add_orbit(
        Subgroup::trivial(g),
        &mut classes,
        &mut class_of,
        &mut worklist,
    );

    while let Some(ci) = worklist.pop() {
        let s = classes[ci].representative.clone();
        let normalizer = normalizer_in(g, &s, carrier);
        // Scan the cosets of s in its normalizer; one representative each.
        let mut covered = s.members().clone();
        for &u in normalizer.elems() {
            let u = u as usize;
            if covered.contains(u) {
                continue;
            }
            for &e in s.elems() {
                covered.insert(g.mul(e as usize, u));
            }
            // order of the coset of u in N/s
            let mut d = 1usize;
            let mut acc = u;
            while !s.contains(acc) {
                acc = g.mul(acc, u);
                d += 1;
            }
            if !crate::numtheory::is_prime(d as u64) {
                // A prime-order coset generating the same extension is
                // visited elsewhere in this scan.
                continue;
            }
            // extension: union of the d cosets s * u^t
            let mut members = s.members().clone();
            let mut power = u;
            for _ in 1..d {
                for &e in s.elems() {
                    members.insert(g.mul(e as usize, power));
                }
                power = g.mul(power, u);
            }
            if !class_of.contains_key(members.words()) {
                let h = Subgroup::from_bitset(g, members);
                add_orbit(h, &mut classes, &mut class_of, &mut worklist);
            }
        }
    }

    let mut table = SubgroupClassTable {
        carrier: carrier.clone(),
        classes,
        class_of,
    };
    canonical_sort(&mut table);
    Ok(table)
}

/// Classes of all subgroups of the whole group, at the default bound.
pub fn subgroup_classes(g: &FiniteGroup) -> Result<SubgroupClassTable, GroupError> {
    subgroup_classes_with_bound(g, DEFAULT_ORDER_BOUND)
}

pub fn subgroup_classes_with_bound(
    g: &FiniteGroup,
    bound: usize,
) -> Result<SubgroupClassTable, GroupError> {
    subgroup_classes_within(g, &Subgroup::whole(g), bound)
}

/// Conjugacy classes of the subgroups of `carrier`, read off an existing
/// catalogue of the ambient group rather than re-enumerated. Used when the
/// subgroups of a subgroup are needed: they are exactly the catalogued
/// subgroups contained in it, regrouped under the smaller conjugation action.
pub fn subgroup_classes_restricted(
    g: &FiniteGroup,
    catalogue: &SubgroupClassTable,
    carrier: &Subgroup,
) -> SubgroupClassTable {
    let mut class_of: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut classes: Vec<SubgroupClass> = Vec::new();
    for s in catalogue.all_subgroups() {
        if !s.is_subset_of(carrier) || class_of.contains_key(s.members().words()) {
            continue;
        }
        let mut orbit: Vec<Subgroup> = Vec::new();
        let id = classes.len();
        for &u in carrier.elems() {
            let t = s.conjugate_by(g, u as usize);
            if !class_of.contains_key(t.members().words()) {
                class_of.insert(t.members().words().to_vec(), id);
                orbit.push(t);
            }
        }
        let rep = orbit
            .iter()
            .min_by(|a, b| {
                if a.members().lex_precedes(b.members()) {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                }
            })
            .expect("orbit nonempty")
            .clone();
        let is_cyclic = rep.is_cyclic(g);
        classes.push(SubgroupClass {
            representative: rep,
            conjugates: orbit,
            is_cyclic,
        });
    }
    let mut table = SubgroupClassTable {
        carrier: carrier.clone(),
        classes,
        class_of,
    };
    canonical_sort(&mut table);
    table
}

fn canonical_sort(table: &mut SubgroupClassTable) {
    let mut order: Vec<usize> = (0..table.classes.len()).collect();
    order.sort_by(|&a, &b| {
        let (ra, rb) = (
            &table.classes[a].representative,
            &table.classes[b].representative,
        );
        ra.order().cmp(&rb.order()).then_with(|| {
            if ra.members().lex_precedes(rb.members()) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        })
    });
    let mut relabel = vec![0usize; order.len()];
    for (new_id, &old_id) in order.iter().enumerate() {
        relabel[old_id] = new_id;
    }
    let mut sorted = Vec::with_capacity(order.len());
    for &old_id in &order {
        sorted.push(table.classes[old_id].clone());
    }
    table.classes = sorted;
    for v in table.class_of.values_mut() {
        *v = relabel[*v];
    }
}
