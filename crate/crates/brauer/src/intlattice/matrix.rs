//! Dense integer matrices with arbitrary-precision entries.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("matrix dimensions {rows}x{cols} inconsistent with {entries} entries")]
    Shape {
        rows: usize,
        cols: usize,
        entries: usize,
    },
    #[error("vector of length {found} does not match ambient rank {expected}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("sublattice is not contained in the enclosing lattice")]
    NotContained,
    #[error("malformed matrix text: {0}")]
    Parse(String),
}

/// Row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, LatticeError> {
        if entries.len() != rows * cols {
            return Err(LatticeError::Shape {
                rows,
                cols,
                entries: entries.len(),
            });
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::new(
            rows,
            cols,
            entries.iter().map(|&e| BigInt::from(e)).collect(),
        )
        .unwrap()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    /// Fixture format: "rows cols" header followed by whitespace-separated
    /// entries.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(BigInt::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, LatticeError> {
        let mut tokens = text.split_whitespace();
        let mut next_usize = |what: &str| -> Result<usize, LatticeError> {
            tokens
                .next()
                .ok_or_else(|| LatticeError::Parse(format!("missing {what}")))?
                .parse()
                .map_err(|e| LatticeError::Parse(format!("bad {what}: {e}")))
        };
        let rows = next_usize("row count")?;
        let cols = next_usize("column count")?;
        let entries: Vec<BigInt> = tokens
            .map(|t| {
                t.parse::<BigInt>()
                    .map_err(|e| LatticeError::Parse(format!("bad entry {t:?}: {e}")))
            })
            .collect::<Result<_, _>>()?;
        Self::new(rows, cols, entries)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(BigInt::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_is_checked() {
        assert!(IntMatrix::new(2, 2, vec![BigInt::zero(); 3]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let m = IntMatrix::from_i64(2, 3, &[1, -2, 3, 0, 5, -6]);
        let back = IntMatrix::from_text(&m.to_text()).unwrap();
        assert_eq!(m, back);
        assert!(IntMatrix::from_text("2 2 1 2 3").is_err());
    }

    #[test]
    fn multiplication() {
        let a = IntMatrix::from_i64(2, 2, &[1, 2, 3, 4]);
        let b = IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        assert_eq!(a.mul(&b), IntMatrix::from_i64(2, 2, &[2, 1, 4, 3]));
    }
}
