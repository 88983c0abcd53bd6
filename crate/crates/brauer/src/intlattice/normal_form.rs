//! Hermite and Smith normal forms by fraction-free row/column reduction,
//! pivoting on minimal absolute value to damp coefficient growth.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// In-place row echelonization over the integers, pivoting only within the
/// first `effective_cols` columns. Returns the rank; afterwards rows
/// `0..rank` are the echelon part (positive pivots, entries above each pivot
/// reduced into `[0, pivot)`) and rows `rank..` vanish on the pivot range.
pub(crate) fn row_echelon(rows: &mut [Vec<BigInt>], effective_cols: usize) -> usize {
    let mut pivot_row = 0;
    for col in 0..effective_cols {
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..rows.len() {
                if !rows[r][col].is_zero()
                    && best.is_none_or(|b: usize| rows[r][col].abs() < rows[b][col].abs())
                {
                    best = Some(r);
                }
            }
            let Some(best) = best else { break };
            rows.swap(pivot_row, best);
            let mut cleared = true;
            for r in pivot_row + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[pivot_row][col]);
                if !q.is_zero() {
                    row_axpy(rows, r, pivot_row, &q);
                }
                if !rows[r][col].is_zero() {
                    cleared = false;
                }
            }
            if cleared {
                if rows[pivot_row][col].is_negative() {
                    for e in rows[pivot_row].iter_mut() {
                        *e = -std::mem::take(e);
                    }
                }
                for r in 0..pivot_row {
                    let q = rows[r][col].div_floor(&rows[pivot_row][col]);
                    if !q.is_zero() {
                        row_axpy(rows, r, pivot_row, &q);
                    }
                }
                pivot_row += 1;
                break;
            }
        }
        if pivot_row == rows.len() {
            break;
        }
    }
    pivot_row
}

/// `rows[target] -= q * rows[source]`.
fn row_axpy(rows: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    let (a, b) = if target < source {
        let (lo, hi) = rows.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for (t, s) in a.iter_mut().zip(b.iter()) {
        *t -= q * s;
    }
}

/// Row Hermite normal form of the row space of `m`: only the nonzero rows
/// are returned, so the result has full row rank. Deterministic.
pub fn hnf(m: &IntMatrix) -> IntMatrix {
    let mut rows = m.row_vecs();
    let rank = row_echelon(&mut rows, m.cols());
    rows.truncate(rank);
    if rows.is_empty() {
        IntMatrix::zero(0, m.cols())
    } else {
        IntMatrix::from_rows(rows)
    }
}

/// Outcome of a Smith normal form computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    /// The full diagonal of length `min(rows, cols)`, zeros included, with
    /// `diagonal[i]` dividing `diagonal[i+1]` wherever both are nonzero.
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

/// Smith normal form diagonal of `m`.
pub fn snf(m: &IntMatrix) -> SmithNormalForm {
    let (rows, cols) = (m.rows(), m.cols());
    let n = rows.min(cols);
    let mut w = m.clone();
    let mut k = 0;
    'outer: while k < n {
        // minimal nonzero entry of the trailing submatrix to the pivot slot
        let mut best: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if !w[(i, j)].is_zero()
                    && best.is_none_or(|(bi, bj)| w[(i, j)].abs() < w[(bi, bj)].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else {
            break 'outer;
        };
        swap_rows(&mut w, k, bi);
        swap_cols(&mut w, k, bj);

        // clear the pivot row and column; the pivot strictly shrinks each
        // time a remainder survives, so this terminates
        let mut dirty = false;
        for i in k + 1..rows {
            if w[(i, k)].is_zero() {
                continue;
            }
            let q = w[(i, k)].div_floor(&w[(k, k)]);
            for j in k..cols {
                let t = &q * &w[(k, j)];
                w[(i, j)] -= t;
            }
            if !w[(i, k)].is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue 'outer;
        }
        for j in k + 1..cols {
            if w[(k, j)].is_zero() {
                continue;
            }
            let q = w[(k, j)].div_floor(&w[(k, k)]);
            for i in k..rows {
                let t = &q * &w[(i, k)];
                w[(i, j)] -= t;
            }
            if !w[(k, j)].is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue 'outer;
        }
        // divisibility fix: fold any non-multiple into the pivot's row
        for i in k + 1..rows {
            for j in k + 1..cols {
                if !(&w[(i, j)] % &w[(k, k)]).is_zero() {
                    for jj in k..cols {
                        let t = w[(i, jj)].clone();
                        w[(k, jj)] += t;
                    }
                    continue 'outer;
                }
            }
        }
        if w[(k, k)].is_negative() {
            let v = -w[(k, k)].clone();
            w[(k, k)] = v;
        }
        k += 1;
    }
    let mut diagonal = Vec::with_capacity(n);
    for i in 0..n {
        diagonal.push(w[(i, i)].clone());
    }
    SmithNormalForm { diagonal, rank: k }
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let t = m[(a, j)].clone();
        m[(a, j)] = m[(b, j)].clone();
        m[(b, j)] = t;
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let t = m[(i, a)].clone();
        m[(i, a)] = m[(i, b)].clone();
        m[(i, b)] = t;
    }
}
