//! A concrete finite group: dense element indices with a precomputed
//! multiplication table. At the orders handled here (a few hundred to a few
//! thousand elements) a full table keeps subgroup closure and conjugation in
//! tight integer loops.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table is not {0} x {0}")]
    BadTableShape(usize),
    #[error("table entry {found} out of range for group of order {order}")]
    EntryOutOfRange { found: usize, order: usize },
    #[error("no two-sided identity element found")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("subgroup is not normal in the ambient group")]
    NotNormal,
    #[error("group order {order} exceeds the subgroup-enumeration bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
    #[error("malformed group table text: {0}")]
    Parse(String),
}

/// A finite group on `{0, .., order-1}` with cached inverses and element
/// orders. Immutable after construction; safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: u32,
    inverse: Vec<u32>,
    element_order: Vec<u32>,
}

impl FiniteGroup {
    /// Builds a group from a multiplication rule on indices. The table is
    /// materialized and the group axioms are verified: identity and inverse
    /// laws on every element, associativity exhaustively up to order 128 and
    /// on 10^5 seeded random triples above that.
    pub fn from_fn(order: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self, GroupError> {
        let mut table = vec![0u32; order * order];
        for i in 0..order {
            for j in 0..order {
                let p = mul(i, j);
                if p >= order {
                    return Err(GroupError::EntryOutOfRange { found: p, order });
                }
                table[i * order + j] = p as u32;
            }
        }
        Self::from_table(order, table)
    }

    /// Builds and validates a group from a row-major `order x order` table.
    pub fn from_table(order: usize, table: Vec<u32>) -> Result<Self, GroupError> {
        if order == 0 || table.len() != order * order {
            return Err(GroupError::BadTableShape(order));
        }
        if let Some(&e) = table.iter().find(|&&e| e as usize >= order) {
            return Err(GroupError::EntryOutOfRange {
                found: e as usize,
                order,
            });
        }
        let identity = (0..order)
            .find(|&e| {
                (0..order)
                    .all(|i| table[e * order + i] == i as u32 && table[i * order + e] == i as u32)
            })
            .ok_or(GroupError::NoIdentity)? as u32;

        let mut inverse = vec![u32::MAX; order];
        for i in 0..order {
            match (0..order).find(|&j| table[i * order + j] == identity) {
                Some(j) if table[j * order + i] == identity => inverse[i] = j as u32,
                _ => return Err(GroupError::NoInverse(i)),
            }
        }

        let check = |a: usize, b: usize, c: usize| -> bool {
            let ab = table[a * order + b] as usize;
            let bc = table[b * order + c] as usize;
            table[ab * order + c] == table[a * order + bc]
        };
        if order <= 128 {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if !check(a, b, c) {
                            return Err(GroupError::NotAssociative(a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x6272_6175);
            for _ in 0..100_000 {
                let (a, b, c) = (
                    rng.gen_range(0..order),
                    rng.gen_range(0..order),
                    rng.gen_range(0..order),
                );
                if !check(a, b, c) {
                    return Err(GroupError::NotAssociative(a, b, c));
                }
            }
        }

        let mut element_order = vec![0u32; order];
        for i in 0..order {
            let mut acc = i;
            let mut ord = 1;
            while acc != identity as usize {
                acc = table[acc * order + i] as usize;
                ord += 1;
            }
            element_order[i] = ord;
        }

        Ok(FiniteGroup {
            order,
            table,
            identity,
            inverse,
            element_order,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity as usize
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    /// `g * x * g^-1`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, i: usize) -> usize {
        self.element_order[i] as usize
    }

    pub fn pow(&self, i: usize, e: usize) -> usize {
        let mut acc = self.identity();
        for _ in 0..e {
            acc = self.mul(acc, i);
        }
        acc
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1usize, |acc, i| {
            num_integer::lcm(acc, self.element_order(i))
        })
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Hash of the raw table, used to memoize per-group computations across
    /// identically constructed groups.
    pub fn table_hash(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.order.hash(&mut h);
        self.table.hash(&mut h);
        h.finish()
    }

    /// Text fixture format: first line the order, then one line per row of
    /// the multiplication table.
    pub fn to_table_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{}\n", self.order));
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|j| self.table[i * self.order + j].to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_table_string(text: &str) -> Result<Self, GroupError> {
        let mut numbers = text.split_whitespace().map(|t| {
            t.parse::<usize>()
                .map_err(|e| GroupError::Parse(format!("bad integer {t:?}: {e}")))
        });
        let order = numbers
            .next()
            .ok_or_else(|| GroupError::Parse("empty input".into()))??;
        let table: Vec<u32> = numbers
            .map(|n| n.map(|v| v as u32))
            .collect::<Result<_, _>>()?;
        Self::from_table(order, table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::testgroups;

    #[test]
    fn cyclic_group_basics() {
        let g = testgroups::cyclic(6);
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.mul(4, 5), 3);
        assert_eq!(g.inv(2), 4);
        assert_eq!(g.element_order(2), 3);
        assert_eq!(g.exponent(), 6);
        assert!(g.is_abelian());
    }

    #[test]
    fn quaternion_units_form_a_group() {
        let q8 = testgroups::quaternion8();
        assert_eq!(q8.order(), 8);
        assert!(!q8.is_abelian());
        // exactly one involution
        let involutions = (0..8).filter(|&i| q8.element_order(i) == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn rejects_non_groups() {
        // constant table: no identity
        assert_eq!(
            FiniteGroup::from_table(2, vec![0, 0, 0, 0]),
            Err(GroupError::NoIdentity)
        );
        // the smallest non-associative loop: identity and inverses exist,
        // associativity does not
        let loop5 = FiniteGroup::from_table(
            5,
            vec![
                0, 1, 2, 3, 4, //
                1, 0, 3, 4, 2, //
                2, 4, 0, 1, 3, //
                3, 2, 4, 0, 1, //
                4, 3, 1, 2, 0,
            ],
        );
        assert!(matches!(loop5, Err(GroupError::NotAssociative(..))));
    }

    #[test]
    fn table_text_round_trip() {
        let g = testgroups::klein_four();
        let text = g.to_table_string();
        let back = FiniteGroup::from_table_string(&text).unwrap();
        assert_eq!(back.order(), 4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(back.mul(i, j), g.mul(i, j));
            }
        }
        assert!(FiniteGroup::from_table_string("not a table").is_err());
    }
}
