//! Structural recognition of the handful of fixed group families the edge
//! criterion and parameter validation need. Each family has a cheap
//! certificate (a presentation realized inside the group), so no generic
//! isomorphism machinery is involved.

use super::finite::FiniteGroup;
use crate::numtheory::is_prime;

/// The families that ever need recognizing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupFamily {
    Cyclic,
    KleinFour,
    /// Non-abelian dihedral 2-groups, order at least 8.
    Dihedral2Group,
    GeneralizedQuaternion,
    Semidihedral,
    /// Non-abelian of order p^3 and exponent p, p odd.
    HeisenbergP,
}

/// True iff `q` belongs to the stated family.
pub fn family_test(q: &FiniteGroup, family: GroupFamily) -> bool {
    match family {
        GroupFamily::Cyclic => (0..q.order()).any(|i| q.element_order(i) == q.order()),
        GroupFamily::KleinFour => q.order() == 4 && q.exponent() == 2,
        GroupFamily::Dihedral2Group => {
            // order 2^t, t >= 3, with <c> of index 2 inverted by an
            // outside involution
            two_power_exponent(q.order()).is_some_and(|t| t >= 3)
                && has_index_two_cyclic_with_action(q, |n, _| n - 1, true)
        }
        GroupFamily::GeneralizedQuaternion => {
            // as dihedral but x^2 = c^(2^(n-1)), so x has order 4
            two_power_exponent(q.order()).is_some_and(|t| t >= 3)
                && has_index_two_cyclic_with_action(q, |n, _| n - 1, false)
        }
        GroupFamily::Semidihedral => {
            // order 2^(n+1), n >= 3, and x c x = c^(2^(n-1) - 1) with x^2 = 1
            two_power_exponent(q.order()).is_some_and(|t| t >= 4)
                && has_index_two_cyclic_with_action(q, |n, _| n / 2 - 1, true)
        }
        GroupFamily::HeisenbergP => {
            let n = q.order();
            let p = (2..=n).find(|&p| n.is_multiple_of(p)).unwrap_or(n);
            is_prime(p as u64)
                && p % 2 == 1
                && n == p * p * p
                && q.exponent() == p
                && !q.is_abelian()
        }
    }
}

fn two_power_exponent(n: usize) -> Option<u32> {
    n.is_power_of_two().then(|| n.trailing_zeros())
}

/// Searches for a cyclic subgroup `<c>` of index 2 and an element `x`
/// outside it realizing `x c x^-1 = c^action(|c|)`, with `x^2 = 1` when
/// `x_squared_trivial` and `x^2 = c^(|c|/2)` otherwise. Realizing the whole
/// presentation on a group of the right order certifies the isomorphism
/// type.
fn has_index_two_cyclic_with_action(
    q: &FiniteGroup,
    action: impl Fn(usize, usize) -> usize,
    x_squared_trivial: bool,
) -> bool {
    let n = q.order();
    let half = n / 2;
    #[allow(clippy::needless_range_loop)]
    for c in 0..n {
        if q.element_order(c) != half {
            continue;
        }
        // membership of <c>
        let mut in_c = vec![false; n];
        let mut acc = q.identity();
        for _ in 0..half {
            in_c[acc] = true;
            acc = q.mul(acc, c);
        }
        let target = q.pow(c, action(half, c) % half);
        let central = q.pow(c, half / 2);
        for x in 0..n {
            if in_c[x] {
                continue;
            }
            let xsq = q.mul(x, x);
            let square_ok = if x_squared_trivial {
                xsq == q.identity()
            } else {
                xsq == central
            };
            if square_ok && q.conj(x, c) == target {
                return true;
            }
        }
        // all index-2 cyclic subgroups are tested; different generators of
        // the same subgroup give conjugate targets, so one c per subgroup
        // suffices, but scanning all is simpler and still cheap
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::testgroups;

    #[test]
    fn dihedral_8_recognized() {
        let d8 = testgroups::dihedral(8);
        assert!(family_test(&d8, GroupFamily::Dihedral2Group));
        assert!(!family_test(&d8, GroupFamily::GeneralizedQuaternion));
        assert!(!family_test(&d8, GroupFamily::Semidihedral));
        assert!(!family_test(&d8, GroupFamily::Cyclic));
    }

    #[test]
    fn cyclic_8_is_not_dihedral() {
        let c8 = testgroups::cyclic(8);
        assert!(!family_test(&c8, GroupFamily::Dihedral2Group));
        assert!(family_test(&c8, GroupFamily::Cyclic));
    }

    #[test]
    fn quaternion_8_recognized() {
        let q8 = testgroups::quaternion8();
        assert!(family_test(&q8, GroupFamily::GeneralizedQuaternion));
        assert!(!family_test(&q8, GroupFamily::Dihedral2Group));
        assert!(!family_test(&q8, GroupFamily::KleinFour));
    }

    #[test]
    fn klein_four_recognized() {
        let v = testgroups::klein_four();
        assert!(family_test(&v, GroupFamily::KleinFour));
        assert!(!family_test(&v, GroupFamily::Cyclic));
        assert!(!family_test(&v, GroupFamily::Dihedral2Group));
    }

    #[test]
    fn semidihedral_16_recognized() {
        let sd16 = testgroups::semidihedral16();
        assert!(family_test(&sd16, GroupFamily::Semidihedral));
        assert!(!family_test(&sd16, GroupFamily::Dihedral2Group));
        assert!(!family_test(&sd16, GroupFamily::GeneralizedQuaternion));
        let d16 = testgroups::dihedral(16);
        assert!(!family_test(&d16, GroupFamily::Semidihedral));
        let q16 = testgroups::quaternion16();
        assert!(family_test(&q16, GroupFamily::GeneralizedQuaternion));
        assert!(!family_test(&q16, GroupFamily::Dihedral2Group));
        assert!(!family_test(&q16, GroupFamily::Semidihedral));
    }

    #[test]
    fn heisenberg_27_recognized_by_exponent() {
        // the two non-abelian groups of order 27 are separated by exponent
        let h = testgroups::heisenberg(3);
        assert!(!h.is_abelian());
        assert_eq!(h.exponent(), 3);
        assert!(family_test(&h, GroupFamily::HeisenbergP));
        let c27 = testgroups::cyclic(27);
        assert!(!family_test(&c27, GroupFamily::HeisenbergP));
    }
}
