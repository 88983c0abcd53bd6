//! Sublattices of Z^r with Hermite-normal-form bases, integer kernels, and
//! invariant factors of lattice quotients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::matrix::{IntMatrix, LatticeError};
use super::normal_form::{hnf, row_echelon, snf};

/// Isomorphism type of a finitely generated abelian group: the invariant
/// factor chain `d_1 | d_2 | ...` (each at least 2) plus a free rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianInvariants {
    pub factors: Vec<u64>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        AbelianInvariants {
            factors: Vec::new(),
            free_rank: 0,
        }
    }

    /// Elementary abelian of the given rank: `rank` copies of C_p.
    pub fn elementary_abelian(p: u64, rank: usize) -> Self {
        AbelianInvariants {
            factors: vec![p; rank],
            free_rank: 0,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty() && self.free_rank == 0
    }

    /// Cokernel invariants of `Z^cols / rowspace(m)`.
    pub fn cokernel(m: &IntMatrix) -> Self {
        let out = snf(m);
        let factors = out
            .diagonal
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .map(|d| {
                u64::try_from(d.abs().to_biguint().unwrap())
                    .expect("invariant factor exceeds u64; not expected at these sizes")
            })
            .collect();
        AbelianInvariants {
            factors,
            free_rank: m.cols() - out.rank,
        }
    }
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = self.factors.iter().map(|d| format!("C{d}")).collect();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// A sublattice of Z^r, stored as a full-row-rank basis in row Hermite
/// normal form; equality of lattices is entrywise equality of bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerLattice {
    ambient_rank: usize,
    basis: IntMatrix,
}

impl IntegerLattice {
    pub fn zero(ambient_rank: usize) -> Self {
        IntegerLattice {
            ambient_rank,
            basis: IntMatrix::zero(0, ambient_rank),
        }
    }

    pub fn full(ambient_rank: usize) -> Self {
        IntegerLattice {
            ambient_rank,
            basis: IntMatrix::identity(ambient_rank),
        }
    }

    /// Lattice spanned by the rows of `m` inside Z^ambient_rank.
    pub fn from_matrix(ambient_rank: usize, m: &IntMatrix) -> Self {
        assert_eq!(m.cols(), ambient_rank, "ambient rank mismatch");
        IntegerLattice {
            ambient_rank,
            basis: hnf(m),
        }
    }

    pub fn from_rows(ambient_rank: usize, rows: Vec<Vec<BigInt>>) -> Self {
        if rows.is_empty() {
            return Self::zero(ambient_rank);
        }
        Self::from_matrix(ambient_rank, &IntMatrix::from_rows(rows))
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Coordinates of `v` with respect to the basis, if `v` lies in the
    /// lattice. Back-substitution down the Hermite staircase; every division
    /// must be exact.
    pub fn solve(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>, LatticeError> {
        if v.len() != self.ambient_rank {
            return Err(LatticeError::AmbientMismatch {
                expected: self.ambient_rank,
                found: v.len(),
            });
        }
        let mut residue = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for i in 0..self.rank() {
            let pivot_col = (0..self.ambient_rank)
                .find(|&j| !self.basis[(i, j)].is_zero())
                .expect("basis rows are nonzero");
            let (q, r) = residue[pivot_col].div_rem(&self.basis[(i, pivot_col)]);
            if !r.is_zero() {
                return Ok(None);
            }
            if !q.is_zero() {
                #[allow(clippy::needless_range_loop)]
                for j in pivot_col..self.ambient_rank {
                    let t = &q * &self.basis[(i, j)];
                    residue[j] -= t;
                }
            }
            coords.push(q);
        }
        if residue.iter().all(BigInt::is_zero) {
            Ok(Some(coords))
        } else {
            Ok(None)
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        matches!(self.solve(v), Ok(Some(_)))
    }

    pub fn is_sublattice_of(&self, other: &IntegerLattice) -> bool {
        (0..self.rank()).all(|i| other.contains(self.basis.row(i)))
    }

    /// Smallest lattice containing both summands.
    pub fn sum(&self, other: &IntegerLattice) -> IntegerLattice {
        assert_eq!(self.ambient_rank, other.ambient_rank);
        let mut rows = self.basis.row_vecs();
        rows.extend(other.basis.row_vecs());
        IntegerLattice::from_rows(self.ambient_rank, rows)
    }

    /// Invariants of the quotient `self / sub`. `sub` must be contained in
    /// `self`; the free part accounts for any rank deficit.
    pub fn quotient_invariants(
        &self,
        sub: &IntegerLattice,
    ) -> Result<AbelianInvariants, LatticeError> {
        if sub.ambient_rank != self.ambient_rank {
            return Err(LatticeError::AmbientMismatch {
                expected: self.ambient_rank,
                found: sub.ambient_rank,
            });
        }
        let mut coeff_rows = Vec::with_capacity(sub.rank());
        for i in 0..sub.rank() {
            match self.solve(sub.basis.row(i))? {
                Some(coords) => coeff_rows.push(coords),
                None => return Err(LatticeError::NotContained),
            }
        }
        if self.rank() == 0 {
            return Ok(AbelianInvariants::trivial());
        }
        let coeff = if coeff_rows.is_empty() {
            IntMatrix::zero(0, self.rank())
        } else {
            IntMatrix::from_rows(coeff_rows)
        };
        Ok(AbelianInvariants::cokernel(&coeff))
    }
}

/// The lattice of integer row vectors `v` with `v * m = 0`.
pub fn kernel_lattice(m: &IntMatrix) -> IntegerLattice {
    let rows = m.rows();
    if rows == 0 {
        return IntegerLattice::zero(0);
    }
    // augment [m | I] and echelonize on the m-part only; rows that vanish
    // there carry kernel vectors in their identity part
    let mut aug: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row = m.row(i).to_vec();
        for j in 0..rows {
            row.push(if i == j {
                BigInt::one()
            } else {
                BigInt::zero()
            });
        }
        aug.push(row);
    }
    let rank = row_echelon(&mut aug, m.cols());
    let kernel_rows: Vec<Vec<BigInt>> = aug[rank..]
        .iter()
        .map(|row| row[m.cols()..].to_vec())
        .collect();
    IntegerLattice::from_rows(rows, kernel_rows)
}
