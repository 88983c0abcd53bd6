//! The additive Burnside group of a finite group and the maps into and out
//! of it: fixed-point marks on cyclic subgroups, induction from subgroups,
//! inflation from quotients, and the Möbius-weighted pair relations attached
//! to subgroups of the distinguished cyclic normal subgroup.
//!
//! Rational characters are determined by their values on cyclic subgroups,
//! so the map to the rational representation ring is represented solely by
//! the marks on cyclic subgroup classes; its kernel is cut out exactly by
//! the vanishing of that marks vector.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::groups::{FiniteGroup, Subgroup, SubgroupClassTable};
use crate::intlattice::IntMatrix;
use crate::numtheory::moebius;
use crate::qe::Realization;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BurnsideError {
    #[error("element is defined over {found} classes, expected {expected}")]
    ClassCountMismatch { expected: usize, found: usize },
    #[error("subgroup is not one of the maximal-avoiding vertices")]
    NotAVertex,
}

/// An integer combination of transitive G-set classes `sum a_H [G/H]`,
/// with one coefficient per subgroup class of a fixed class table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnsideElement {
    coeffs: Vec<BigInt>,
}

impl BurnsideElement {
    pub fn zero(classes: &SubgroupClassTable) -> Self {
        BurnsideElement {
            coeffs: vec![BigInt::zero(); classes.len()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        BurnsideElement { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, class: usize) -> &BigInt {
        &self.coeffs[class]
    }

    pub fn add_to(&mut self, class: usize, delta: i64) {
        self.coeffs[class] += delta;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BigInt::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        BurnsideElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn negate(&self) -> Self {
        BurnsideElement {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Sparse serializable view: one entry per nonzero coefficient.
    pub fn entries(&self, classes: &SubgroupClassTable) -> Vec<BurnsideEntry> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| BurnsideEntry {
                subgroup_order: classes.classes()[i].order(),
                class_index: i,
                coefficient: i64::try_from(c).expect("coefficient fits in i64"),
            })
            .collect()
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct BurnsideEntry {
    pub subgroup_order: usize,
    pub class_index: usize,
    pub coefficient: i64,
}

/// Fixed-point counts of cyclic subgroup classes on the transitive G-sets:
/// rows indexed by all subgroup classes `H`, columns by the cyclic classes
/// `C`, entry `|(G/H)^C|`.
#[derive(Debug, Clone)]
pub struct MarksMatrix {
    matrix: IntMatrix,
    cyclic_class_ids: Vec<usize>,
}

impl MarksMatrix {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn cyclic_class_ids(&self) -> &[usize] {
        &self.cyclic_class_ids
    }

    /// The marks vector of an element: its image under the linear extension
    /// of `[G/H] -> (|(G/H)^C|)_C`.
    pub fn apply(&self, elt: &BurnsideElement) -> Result<Vec<BigInt>, BurnsideError> {
        if elt.coeffs().len() != self.matrix.rows() {
            return Err(BurnsideError::ClassCountMismatch {
                expected: self.matrix.rows(),
                found: elt.coeffs().len(),
            });
        }
        let mut out = vec![BigInt::zero(); self.matrix.cols()];
        for (i, c) in elt.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                *slot += c * &self.matrix[(i, j)];
            }
        }
        Ok(out)
    }

    pub fn annihilates(&self, elt: &BurnsideElement) -> bool {
        self.apply(elt)
            .map(|v| v.iter().all(BigInt::is_zero))
            .unwrap_or(false)
    }
}

/// A generator of a cyclic subgroup.
fn cyclic_generator(g: &FiniteGroup, s: &Subgroup) -> usize {
    s.elems()
        .iter()
        .map(|&e| e as usize)
        .find(|&e| g.element_order(e) == s.order())
        .expect("subgroup flagged cyclic has a generator")
}

/// Number of fixed points of `<gamma>` acting on carrier/H: cosets `uH` with
/// `u^-1 gamma u` in `H`. Counted over elements and divided by `|H|`; the
/// element count is a union of cosets so the division is exact.
fn fixed_points(g: &FiniteGroup, carrier: &Subgroup, h: &Subgroup, gamma: usize) -> u64 {
    let mut count = 0u64;
    for &u in carrier.elems() {
        let u = u as usize;
        if h.contains(g.mul(g.mul(g.inv(u), gamma), u)) {
            count += 1;
        }
    }
    assert!(
        count.is_multiple_of(h.order() as u64),
        "fixed-point count {count} not divisible by |H| = {}",
        h.order()
    );
    count / h.order() as u64
}

/// The full marks matrix of a class table, rows parallelized.
pub fn marks_matrix(g: &FiniteGroup, classes: &SubgroupClassTable) -> MarksMatrix {
    let cyclic_class_ids = classes.cyclic_class_ids();
    let carrier = classes.carrier();
    let generators: Vec<usize> = cyclic_class_ids
        .iter()
        .map(|&ci| cyclic_generator(g, &classes.classes()[ci].representative))
        .collect();
    let rows: Vec<Vec<BigInt>> = classes
        .classes()
        .par_iter()
        .map(|class| {
            let h = &class.representative;
            generators
                .iter()
                .map(|&gamma| BigInt::from(fixed_points(g, carrier, h, gamma)))
                .collect()
        })
        .collect();

    #[cfg(debug_assertions)]
    verify_representative_independence(g, classes, &cyclic_class_ids, &rows);

    MarksMatrix {
        matrix: IntMatrix::from_rows(rows),
        cyclic_class_ids,
    }
}

/// Marks must not depend on which conjugate represents a class; recompute a
/// sample with alternate representatives.
#[cfg(debug_assertions)]
fn verify_representative_independence(
    g: &FiniteGroup,
    classes: &SubgroupClassTable,
    cyclic_class_ids: &[usize],
    rows: &[Vec<BigInt>],
) {
    let carrier = classes.carrier();
    for (col, &ci) in cyclic_class_ids.iter().enumerate() {
        let class = &classes.classes()[ci];
        if class.conjugates.len() < 2 {
            continue;
        }
        let alt = cyclic_generator(g, &class.conjugates[1]);
        for (row, class_h) in classes.classes().iter().enumerate().take(8) {
            let alt_count = fixed_points(g, carrier, &class_h.representative, alt);
            assert_eq!(
                BigInt::from(alt_count),
                rows[row][col],
                "marks entry depends on class representative"
            );
        }
    }
    for (row, class_h) in classes.classes().iter().enumerate() {
        if class_h.conjugates.len() < 2 {
            continue;
        }
        let alt_h = &class_h.conjugates[1];
        for (col, &ci) in cyclic_class_ids.iter().enumerate().take(4) {
            let gamma = cyclic_generator(g, &classes.classes()[ci].representative);
            let alt_count = fixed_points(g, carrier, alt_h, gamma);
            assert_eq!(
                BigInt::from(alt_count),
                rows[row][col],
                "marks entry depends on class representative"
            );
        }
    }
}

/// Induction along `H <= G` on basis elements: `[H/U] -> [G/U]`, i.e. each
/// U-class of the subgroup's table is re-identified up to G-conjugacy.
pub fn induce(
    g_classes: &SubgroupClassTable,
    h_classes: &SubgroupClassTable,
    elt: &BurnsideElement,
) -> Result<BurnsideElement, BurnsideError> {
    if elt.coeffs().len() != h_classes.len() {
        return Err(BurnsideError::ClassCountMismatch {
            expected: h_classes.len(),
            found: elt.coeffs().len(),
        });
    }
    let mut out = BurnsideElement::zero(g_classes);
    for (i, c) in elt.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let u = &h_classes.classes()[i].representative;
        let target = g_classes
            .class_index_of(u.members())
            .expect("subgroups of a catalogued carrier are catalogued");
        out.coeffs[target] += c;
    }
    Ok(out)
}

/// Inflation along `G -> G/N` on basis elements: `[(G/N)/S] -> [G/pi^-1 S]`.
pub fn inflate(
    g: &FiniteGroup,
    g_classes: &SubgroupClassTable,
    quotient: &crate::groups::Quotient,
    q_classes: &SubgroupClassTable,
    elt: &BurnsideElement,
) -> Result<BurnsideElement, BurnsideError> {
    if elt.coeffs().len() != q_classes.len() {
        return Err(BurnsideError::ClassCountMismatch {
            expected: q_classes.len(),
            found: elt.coeffs().len(),
        });
    }
    let mut out = BurnsideElement::zero(g_classes);
    for (i, c) in elt.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let s = &q_classes.classes()[i].representative;
        let preimage = quotient.preimage(g, g_classes.carrier(), s);
        let target = g_classes
            .class_index_of(preimage.members())
            .expect("preimages of subgroups are catalogued");
        out.coeffs[target] += c;
    }
    Ok(out)
}

/// The alternating relation attached to a pair of subgroups `H`, `H2` drawn
/// from the maximal-avoiding vertex set: over each subgroup `Ct` of the
/// distinguished cyclic normal subgroup, the class of the product `Ct * H`
/// enters with coefficient `mu(|Ct|)`, and `Ct * H2` with the opposite sign.
/// Only squarefree orders contribute.
pub fn theta(
    real: &Realization,
    g_classes: &SubgroupClassTable,
    vertices: &[Subgroup],
    h: &Subgroup,
    h2: &Subgroup,
) -> Result<BurnsideElement, BurnsideError> {
    if !vertices.contains(h) || !vertices.contains(h2) {
        return Err(BurnsideError::NotAVertex);
    }
    let g = &real.group;
    let cbar_order = real.cbar.order();
    let generator = real.cbar_generator();
    let mut out = BurnsideElement::zero(g_classes);
    for d in 1..=cbar_order {
        if !cbar_order.is_multiple_of(d) {
            continue;
        }
        let mu = moebius(d as u64);
        if mu == 0 {
            continue;
        }
        let ct_generator = g.pow(generator, cbar_order / d);
        let ct: Vec<usize> = (0..d).map(|e| g.pow(ct_generator, e)).collect();
        for (sub, sign) in [(h, mu), (h2, -mu)] {
            let mut members = crate::groups::BitSet::new(g.order());
            for &u in &ct {
                for &v in sub.elems() {
                    members.insert(g.mul(u, v as usize));
                }
            }
            let product = Subgroup::from_bitset(g, members);
            let target = g_classes
                .class_index_of(product.members())
                .expect("product with a normal cyclic subgroup is catalogued");
            out.add_to(target, sign);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{subgroup_classes, testgroups};
    use num_traits::One;

    #[test]
    fn klein_four_marks_matrix() {
        let g = testgroups::klein_four();
        let classes = subgroup_classes(&g).unwrap();
        assert_eq!(classes.len(), 5);
        let marks = marks_matrix(&g, &classes);
        assert_eq!(marks.cyclic_class_ids().len(), 4); // 1 and three C_2
        let m = marks.matrix();
        // row of [G/1]: the regular action, |G| fixed points for the trivial
        // class and none elsewhere
        assert_eq!(m[(0, 0)], BigInt::from(4));
        for j in 1..4 {
            assert_eq!(m[(0, j)], BigInt::zero());
        }
        // rows [G/C_2]: index 2 at the trivial column, 2 at the own column
        for i in 1..4 {
            let row: Vec<&BigInt> = (0..4).map(|j| &m[(i, j)]).collect();
            assert_eq!(*row[0], BigInt::from(2));
            let nonzero: Vec<usize> = (1..4).filter(|&j| !row[j].is_zero()).collect();
            assert_eq!(nonzero, vec![i]);
            assert_eq!(*row[i], BigInt::from(2));
        }
        // row of [G/G] is all ones
        for j in 0..4 {
            assert_eq!(m[(4, j)], BigInt::one());
        }
    }

    #[test]
    fn one_point_and_regular_entries() {
        let g = testgroups::dihedral(12);
        let classes = subgroup_classes(&g).unwrap();
        let marks = marks_matrix(&g, &classes);
        let whole = classes.whole_class_id();
        for j in 0..marks.matrix().cols() {
            assert_eq!(marks.matrix()[(whole, j)], BigInt::one());
        }
        // trivial H occupies row 0 after canonical sorting
        assert_eq!(marks.matrix()[(0, 0)], BigInt::from(12));
    }

    #[test]
    fn induce_sends_basis_to_basis() {
        let g = testgroups::dihedral(16);
        let g_classes = subgroup_classes(&g).unwrap();
        let rot = crate::groups::closure(&g, &[1]);
        let h_classes = crate::groups::subgroup_classes_restricted(&g, &g_classes, &rot);
        // [H/H] -> [G/H]
        let mut elt = BurnsideElement::zero(&h_classes);
        let h_whole = h_classes.whole_class_id();
        elt.add_to(h_whole, 1);
        let induced = induce(&g_classes, &h_classes, &elt).unwrap();
        let expected_class = g_classes.class_index_of(rot.members()).unwrap();
        assert_eq!(*induced.coeff(expected_class), BigInt::one());
        assert_eq!(induced.coeffs().iter().filter(|c| !c.is_zero()).count(), 1);
        // [H/1] -> [G/1]
        let mut elt = BurnsideElement::zero(&h_classes);
        elt.add_to(0, 1);
        let induced = induce(&g_classes, &h_classes, &elt).unwrap();
        assert_eq!(*induced.coeff(0), BigInt::one());
    }

    #[test]
    fn inflate_sends_basis_to_preimages() {
        let g = testgroups::quaternion8();
        let g_classes = subgroup_classes(&g).unwrap();
        let z = crate::groups::centre(&g, &crate::groups::Subgroup::whole(&g));
        let quot = crate::groups::quotient(&g, &z).unwrap();
        let q_classes = subgroup_classes(&quot.group).unwrap();
        // [(G/N)/(G/N)] -> [G/G]
        let mut elt = BurnsideElement::zero(&q_classes);
        elt.add_to(q_classes.whole_class_id(), 1);
        let lifted = inflate(&g, &g_classes, &quot, &q_classes, &elt).unwrap();
        assert_eq!(*lifted.coeff(g_classes.whole_class_id()), BigInt::one());
        // [(G/N)/1] -> [G/N]
        let mut elt = BurnsideElement::zero(&q_classes);
        elt.add_to(0, 1);
        let lifted = inflate(&g, &g_classes, &quot, &q_classes, &elt).unwrap();
        let z_class = g_classes.class_index_of(z.members()).unwrap();
        assert_eq!(*lifted.coeff(z_class), BigInt::one());
    }

    #[test]
    fn induce_and_inflate_are_additive() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let g = testgroups::dihedral(16);
        let g_classes = subgroup_classes(&g).unwrap();
        let rot = crate::groups::closure(&g, &[1]);
        let h_classes = crate::groups::subgroup_classes_restricted(&g, &g_classes, &rot);
        let centre_sub = crate::groups::centre(&g, &crate::groups::Subgroup::whole(&g));
        let quot = crate::groups::quotient(&g, &centre_sub).unwrap();
        let q_classes = subgroup_classes(&quot.group).unwrap();
        let mut rng = StdRng::seed_from_u64(23);
        let random_elt = |rng: &mut StdRng, len: usize| {
            BurnsideElement::from_coeffs(
                (0..len)
                    .map(|_| BigInt::from(rng.gen_range(-3i64..=3)))
                    .collect(),
            )
        };
        for _ in 0..50 {
            let a = random_elt(&mut rng, h_classes.len());
            let b = random_elt(&mut rng, h_classes.len());
            let lhs = induce(&g_classes, &h_classes, &a.add(&b)).unwrap();
            let rhs = induce(&g_classes, &h_classes, &a)
                .unwrap()
                .add(&induce(&g_classes, &h_classes, &b).unwrap());
            assert_eq!(lhs, rhs);

            let a = random_elt(&mut rng, q_classes.len());
            let b = random_elt(&mut rng, q_classes.len());
            let lhs = inflate(&g, &g_classes, &quot, &q_classes, &a.add(&b)).unwrap();
            let rhs = inflate(&g, &g_classes, &quot, &q_classes, &a)
                .unwrap()
                .add(&inflate(&g, &g_classes, &quot, &q_classes, &b).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn theta_pattern_on_the_63_group() {
        use crate::gamma::enumerate_hm;
        use crate::qe::{realize, KType, QeParams};
        let real = realize(&QeParams {
            p: 3,
            q: 7,
            k_type: KType::Cyclic,
            n: 1,
            m: 1,
            j: 1,
            k: None,
            r: None,
        })
        .unwrap();
        let g = &real.group;
        let classes = subgroup_classes(g).unwrap();
        let z = real.z.as_ref().unwrap();
        let (_, vertices) = enumerate_hm(g, &real.p_subgroup, z).unwrap();
        assert_eq!(vertices.len(), 3);
        let (h, h2) = (&vertices[0], &vertices[1]);
        let elt = theta(&real, &classes, &vertices, h, h2).unwrap();

        // mu weights +1, -1, -1, +1 on H, Z*H, C*H, Z*C*H and negated for
        // H2; the Z*H = P and Z*C*H = G terms coincide for both subgroups
        // and cancel
        let class_of = |s: &Subgroup| classes.class_index_of(s.members()).unwrap();
        let product = |a: &Subgroup, b: &Subgroup| {
            let mut members = crate::groups::BitSet::new(g.order());
            for &u in a.elems() {
                for &v in b.elems() {
                    members.insert(g.mul(u as usize, v as usize));
                }
            }
            Subgroup::from_bitset(g, members)
        };
        assert_eq!(*elt.coeff(class_of(h)), BigInt::one());
        assert_eq!(*elt.coeff(class_of(h2)), -BigInt::one());
        let p_class = class_of(&product(z, h));
        assert_eq!(p_class, class_of(&product(z, h2)));
        assert_eq!(*elt.coeff(p_class), BigInt::zero());
        let ch = product(&real.c_subgroup, h);
        let ch2 = product(&real.c_subgroup, h2);
        if class_of(&ch) == class_of(&ch2) {
            assert_eq!(*elt.coeff(class_of(&ch)), BigInt::zero());
        } else {
            assert_eq!(*elt.coeff(class_of(&ch)), -BigInt::one());
            assert_eq!(*elt.coeff(class_of(&ch2)), BigInt::one());
        }

        // a relation: the marks vector vanishes
        let marks = marks_matrix(g, &classes);
        assert!(marks.annihilates(&elt));

        // antisymmetry
        let zero = theta(&real, &classes, &vertices, h, h).unwrap();
        assert!(zero.is_zero());
        // endpoints must be vertices
        let not_vertex = crate::groups::Subgroup::whole(g);
        assert_eq!(
            theta(&real, &classes, &vertices, &not_vertex, h),
            Err(BurnsideError::NotAVertex)
        );
    }

    #[test]
    fn class_count_mismatch_is_reported() {
        let g = testgroups::klein_four();
        let classes = subgroup_classes(&g).unwrap();
        let marks = marks_matrix(&g, &classes);
        let bad = BurnsideElement::from_coeffs(vec![BigInt::one(); 2]);
        assert!(matches!(
            marks.apply(&bad),
            Err(BurnsideError::ClassCountMismatch { .. })
        ));
    }
}
