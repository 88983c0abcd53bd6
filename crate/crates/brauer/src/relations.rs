//! The exact oracle: the lattice of Brauer relations of a group (the integer
//! kernel of its marks matrix), the sublattice of imprimitive relations
//! assembled from maximal subgroups and minimal normal quotients, and the
//! finite quotient of the two.
//!
//! Induction and inflation are transitive and commute, so the imprimitive
//! sublattice is already generated by the full relation lattices of the
//! maximal subgroups together with those of the quotients by minimal normal
//! subgroups; no recursion into deeper subquotients is needed.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use serde::Serialize;

use crate::burnside::{inflate, marks_matrix, BurnsideElement};
use crate::groups::{
    quotient, subgroup_classes, subgroup_classes_restricted, FiniteGroup, GroupError,
    SubgroupClassTable,
};
use crate::intlattice::{kernel_lattice, AbelianInvariants, IntegerLattice};

/// The integer lattice of Brauer relations of a group, in the coordinates of
/// its subgroup class table.
#[derive(Debug, Clone)]
pub struct RelationLattice {
    lattice: IntegerLattice,
}

impl RelationLattice {
    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn lattice(&self) -> &IntegerLattice {
        &self.lattice
    }

    pub fn contains(&self, elt: &BurnsideElement) -> bool {
        self.lattice.contains(elt.coeffs())
    }

    /// Basis rows as Burnside elements.
    pub fn basis_elements(&self) -> Vec<BurnsideElement> {
        (0..self.rank())
            .map(|i| BurnsideElement::from_coeffs(self.lattice.basis().row(i).to_vec()))
            .collect()
    }
}

/// Isomorphism type of the primitive quotient, with diagnostic ranks.
#[derive(Debug, Clone, Serialize)]
pub struct PrimStructure {
    pub invariants: AbelianInvariants,
    pub kernel_rank: usize,
    pub imprimitive_rank: usize,
}

/// Brauer relations of the carrier of `classes`: the kernel of the marks
/// matrix. The rank always equals the number of subgroup classes minus the
/// number of cyclic ones (rational characters are spanned by the cyclic
/// marks), which is asserted.
pub fn brauer_kernel(g: &FiniteGroup, classes: &SubgroupClassTable) -> RelationLattice {
    let marks = marks_matrix(g, classes);
    let lattice = kernel_lattice(marks.matrix());
    let cyclic = marks.cyclic_class_ids().len();
    assert_eq!(
        lattice.rank() + cyclic,
        classes.len(),
        "marks matrix must have full column rank on cyclic classes"
    );
    RelationLattice { lattice }
}

/// Cache of quotient-group relation kernels keyed by the exact
/// multiplication table. Quotients of different sweep tuples frequently
/// coincide table-for-table, and the class table construction is fully
/// deterministic, so a cache hit is transferable.
struct QuotientKernel {
    classes: SubgroupClassTable,
    kernel: RelationLattice,
}

type KernelCache = Mutex<HashMap<(usize, u64), Arc<QuotientKernel>>>;

fn quotient_kernel_cache() -> &'static KernelCache {
    static CACHE: OnceLock<KernelCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn quotient_kernel(q: &FiniteGroup) -> Result<Arc<QuotientKernel>, GroupError> {
    let key = (q.order(), q.table_hash());
    if let Some(hit) = quotient_kernel_cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let classes = subgroup_classes(q)?;
    let kernel = brauer_kernel(q, &classes);
    let entry = Arc::new(QuotientKernel { classes, kernel });
    quotient_kernel_cache()
        .lock()
        .unwrap()
        .insert(key, entry.clone());
    Ok(entry)
}

/// The sublattice of relations induced from maximal subgroups or lifted from
/// quotients by minimal normal subgroups, in the class coordinates of
/// `classes`.
pub fn imprimitive_sublattice(
    g: &FiniteGroup,
    classes: &SubgroupClassTable,
) -> Result<IntegerLattice, GroupError> {
    let ambient = classes.len();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();

    for max_id in classes.maximal_class_ids() {
        let h = &classes.classes()[max_id].representative;
        let h_classes = subgroup_classes_restricted(g, classes, h);
        let h_kernel = brauer_kernel(g, &h_classes);
        for elt in h_kernel.basis_elements() {
            let induced = crate::burnside::induce(classes, &h_classes, &elt)
                .expect("basis elements match their class table");
            rows.push(induced.coeffs().to_vec());
        }
    }

    for min_id in classes.minimal_normal_class_ids() {
        let n = &classes.classes()[min_id].representative;
        let quot = quotient(g, n)?;
        let cached = quotient_kernel(&quot.group)?;
        for elt in cached.kernel.basis_elements() {
            let lifted = inflate(g, classes, &quot, &cached.classes, &elt)
                .expect("basis elements match their class table");
            rows.push(lifted.coeffs().to_vec());
        }
    }

    Ok(IntegerLattice::from_rows(ambient, rows))
}

/// The primitive quotient: relations modulo the imprimitive sublattice.
pub fn prim(g: &FiniteGroup, classes: &SubgroupClassTable) -> Result<PrimStructure, GroupError> {
    let kernel = brauer_kernel(g, classes);
    let imprimitive = imprimitive_sublattice(g, classes)?;
    debug_assert!(
        imprimitive.is_sublattice_of(kernel.lattice()),
        "imprimitive relations must be relations"
    );
    let invariants = kernel
        .lattice()
        .quotient_invariants(&imprimitive)
        .expect("imprimitive sublattice is contained in the kernel");
    Ok(PrimStructure {
        invariants,
        kernel_rank: kernel.rank(),
        imprimitive_rank: imprimitive.rank(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::testgroups;
    use crate::qe::{realize, KType, QeParams};

    #[test]
    fn cyclic_groups_have_no_relations() {
        for n in [1usize, 4, 6, 12, 15] {
            let g = testgroups::cyclic(n);
            let classes = subgroup_classes(&g).unwrap();
            let kernel = brauer_kernel(&g, &classes);
            assert_eq!(kernel.rank(), 0, "C_{n}");
        }
    }

    #[test]
    fn klein_four_has_one_relation() {
        let g = testgroups::klein_four();
        let classes = subgroup_classes(&g).unwrap();
        let kernel = brauer_kernel(&g, &classes);
        assert_eq!(kernel.rank(), 1); // 5 classes - 4 cyclic classes
    }

    #[test]
    fn symmetric3_has_one_relation_and_infinite_prim() {
        // realized as C_3 x| C_2 with trivial K
        let params = QeParams {
            p: 2,
            q: 3,
            k_type: KType::Cyclic,
            n: 0,
            m: 1,
            j: 1,
            k: None,
            r: None,
        };
        let real = realize(&params).unwrap();
        let classes = subgroup_classes(&real.group).unwrap();
        assert_eq!(classes.len(), 4);
        let kernel = brauer_kernel(&real.group, &classes);
        assert_eq!(kernel.rank(), 1); // 4 classes - 3 cyclic classes
        let structure = prim(&real.group, &classes).unwrap();
        // the relation of the symmetric group on 3 letters is primitive and
        // of infinite order: nothing can be induced or lifted
        assert_eq!(structure.imprimitive_rank, 0);
        assert_eq!(structure.invariants.free_rank, 1);
        assert!(structure.invariants.factors.is_empty());
    }

    #[test]
    fn degenerate_imprimitive_lattices_are_zero() {
        // the one-element group has nothing proper to induce or lift from
        let trivial = crate::groups::FiniteGroup::from_fn(1, |_, _| 0).unwrap();
        let classes = subgroup_classes(&trivial).unwrap();
        let imprimitive = imprimitive_sublattice(&trivial, &classes).unwrap();
        assert_eq!(imprimitive.rank(), 0);

        // every maximal subgroup and minimal-normal quotient of the Klein
        // four group is cyclic, so nothing arrives from below or above and
        // its single relation generates an infinite primitive part
        let v4 = testgroups::klein_four();
        let classes = subgroup_classes(&v4).unwrap();
        let imprimitive = imprimitive_sublattice(&v4, &classes).unwrap();
        assert_eq!(imprimitive.rank(), 0);
        let structure = prim(&v4, &classes).unwrap();
        assert_eq!(structure.kernel_rank, 1);
        assert_eq!(structure.invariants.free_rank, 1);
    }

    #[test]
    fn imprimitive_is_contained_in_kernel() {
        let params = QeParams {
            p: 2,
            q: 5,
            k_type: KType::Cyclic,
            n: 2,
            m: 2,
            j: 3,
            k: None,
            r: None,
        };
        let real = realize(&params).unwrap();
        let classes = subgroup_classes(&real.group).unwrap();
        let kernel = brauer_kernel(&real.group, &classes);
        let imprimitive = imprimitive_sublattice(&real.group, &classes).unwrap();
        assert!(imprimitive.is_sublattice_of(kernel.lattice()));
        assert!(imprimitive.rank() <= kernel.rank());
    }

    #[test]
    fn smallest_odd_case_has_prim_c3() {
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
        let real = realize(&params).unwrap();
        assert_eq!(real.group.order(), 63);
        let classes = subgroup_classes(&real.group).unwrap();
        let structure = prim(&real.group, &classes).unwrap();
        assert_eq!(
            structure.invariants,
            AbelianInvariants::elementary_abelian(3, 1)
        );
        // the imprimitive sublattice sits at index 3 inside the kernel
        assert_eq!(structure.kernel_rank, structure.imprimitive_rank);
    }

    #[test]
    fn quotient_kernel_cache_is_shared() {
        let g = testgroups::quaternion8();
        let a = quotient_kernel(&g).unwrap();
        let b = quotient_kernel(&g).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }
}
