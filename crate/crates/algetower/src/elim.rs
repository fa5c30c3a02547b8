//! Exact Gaussian elimination over a field scalar.
//!
//! Pivoting is deterministic: for each column, the first remaining row with a
//! nonzero entry is chosen, scaled to a unit pivot, and eliminated from every
//! other row. The result is the reduced row echelon form, which makes every
//! downstream canonical form (nullspace bases, relation sets) deterministic.

use thiserror::Error;

use crate::matrix::Matrix;
use crate::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("singular system: no unique solution")]
    Singular,
    #[error("inconsistent dimensions: matrix {matrix} vs vector {vector}")]
    ShapeMismatch { matrix: usize, vector: usize },
}

/// Reduces `rows` (each of width `cols`) in place to reduced row echelon
/// form and returns the pivot columns in increasing order. Zero rows are
/// dropped.
#[allow(clippy::needless_range_loop)]
pub fn rref<T: Scalar>(rows: &mut Vec<Vec<T>>, cols: usize) -> Vec<usize> {
    debug_assert!(rows.iter().all(|r| r.len() == cols));
    let mut pivots = Vec::new();
    let mut next_row = 0;

    for col in 0..cols {
        let Some(pivot_row) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, pivot_row);

        let pivot = rows[next_row][col].clone();
        if !pivot.is_one() {
            for entry in &mut rows[next_row][col..] {
                if !entry.is_zero() {
                    *entry = entry.clone() / pivot.clone();
                }
            }
        }

        for r in 0..rows.len() {
            if r == next_row || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..cols {
                if rows[next_row][c].is_zero() {
                    continue;
                }
                let delta = factor.clone() * rows[next_row][c].clone();
                rows[r][c] = rows[r][c].clone() - delta;
            }
        }

        pivots.push(col);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }

    rows.truncate(next_row);
    pivots
}

/// Basis of the solution space of `rows * x = 0`, one vector per free column.
///
/// Each basis vector carries a one at its free column and zeros at the other
/// free columns; vectors are ordered by free column.
pub fn nullspace<T: Scalar>(mut rows: Vec<Vec<T>>, cols: usize) -> Vec<Vec<T>> {
    let pivots = rref(&mut rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }

    let mut basis = Vec::with_capacity(cols - pivots.len());
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut vector = vec![T::zero(); cols];
        vector[free] = T::one();
        for (row, &p) in rows.iter().zip(&pivots) {
            if !row[free].is_zero() {
                vector[p] = T::zero() - row[free].clone();
            }
        }
        basis.push(vector);
    }
    basis
}

/// Canonicalizes a spanning set: returns the reduced row echelon basis of its
/// row space together with the pivot (leading) columns.
pub fn canonical_basis<T: Scalar>(
    mut vectors: Vec<Vec<T>>,
    cols: usize,
) -> (Vec<Vec<T>>, Vec<usize>) {
    let pivots = rref(&mut vectors, cols);
    (vectors, pivots)
}

/// Solves the square system `a * x = b` exactly.
pub fn solve_square<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Result<Vec<T>, SolveError> {
    let n = a.dim();
    if b.len() != n {
        return Err(SolveError::ShapeMismatch {
            matrix: n,
            vector: b.len(),
        });
    }
    let mut rows: Vec<Vec<T>> = (0..n)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows, n + 1);
    if pivots.len() != n || pivots.last() == Some(&n) {
        return Err(SolveError::Singular);
    }
    Ok(rows.into_iter().map(|row| row[n].clone()).collect())
}

/// Exact inverse of a square matrix, or `Singular`.
pub fn invert<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>, SolveError> {
    let n = a.dim();
    let mut rows: Vec<Vec<T>> = (0..n)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut rows, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(SolveError::Singular);
    }
    Ok(Matrix::from_fn(n, |i, j| rows[i][n + j].clone()))
}
