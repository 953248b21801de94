//! Exact linear algebra over the rationals.
//!
//! Everything here works with arbitrary-precision rationals, so ranks and
//! solution coefficients are exact. The matrices involved are tiny (at most
//! a handful of rows per quiver vertex), so no pivoting strategy beyond
//! "first nonzero" is needed.

use num_rational::BigRational;
use num_traits::Zero;

use crate::vector::IntVector;

fn to_rational_rows(rows: &[IntVector]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| {
            r.entries()
                .iter()
                .map(|e| BigRational::from_integer(e.clone()))
                .collect()
        })
        .collect()
}

/// Reduce `m` in place to row echelon form; returns the pivot columns.
fn echelon(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in col..cols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..cols {
                    m[r][c] = &m[r][c] - &f * &m[row][c];
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Rank of the integer matrix whose rows are the given vectors.
pub fn rank_rows(rows: &[IntVector]) -> usize {
    let mut m = to_rational_rows(rows);
    echelon(&mut m).len()
}

/// Whether the given vectors are linearly independent over the rationals.
pub fn independent(rows: &[IntVector]) -> bool {
    rank_rows(rows) == rows.len()
}

/// Solve `sum_j x_j * cols[j] = target` exactly.
///
/// Returns the coefficient vector when the system is consistent and `None`
/// when it is not. When the columns are linearly dependent, free coefficients
/// are set to zero, so callers that need uniqueness should check
/// [`independent`] first.
pub fn solve_columns(cols: &[IntVector], target: &IntVector) -> Option<Vec<BigRational>> {
    let n = target.len();
    let k = cols.len();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = cols
                .iter()
                .map(|c| BigRational::from_integer(c.entries()[i].clone()))
                .collect();
            row.push(BigRational::from_integer(target.entries()[i].clone()));
            row
        })
        .collect();
    let pivots = echelon(&mut m);
    // A pivot in the augmented column means the target is outside the span.
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = m[r][k].clone();
    }
    Some(x)
}
