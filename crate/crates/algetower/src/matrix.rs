//! Dense square matrices of scalars, row-major.
//!
//! Entry `[i][j]` is `f^i_j`: row = value index, column = argument index, so
//! `apply` computes `y^i = f^i_j x^j`.

use thiserror::Error;

use crate::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("expected a square {expected}x{expected} matrix, got {rows} rows of widths {cols:?}")]
    NotSquare {
        expected: usize,
        rows: usize,
        cols: Vec<usize>,
    },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zero(dim: usize) -> Self {
        Matrix {
            dim,
            entries: vec![T::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            *m.get_mut(i, i) = T::one();
        }
        m
    }

    pub fn from_fn(dim: usize, mut entry: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(entry(i, j));
            }
        }
        Matrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(MatrixError::NotSquare {
                expected: dim,
                rows: dim,
                cols: rows.iter().map(|r| r.len()).collect(),
            });
        }
        Ok(Matrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row * self.dim + col]
    }

    pub fn get_mut(&mut self, row: usize, col: usize) -> &mut T {
        &mut self.entries[row * self.dim + col]
    }

    pub fn row(&self, row: usize) -> &[T] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.dim)
    }

    pub fn column(&self, col: usize) -> Vec<T> {
        (0..self.dim).map(|i| self.get(i, col).clone()).collect()
    }

    /// Row-major flattening; the vectorization used by the commutant solver.
    pub fn to_vec(&self) -> Vec<T> {
        self.entries.clone()
    }

    pub fn from_vec(dim: usize, entries: Vec<T>) -> Result<Self, MatrixError> {
        if entries.len() != dim * dim {
            return Err(MatrixError::DimensionMismatch {
                left: dim * dim,
                right: entries.len(),
            });
        }
        Ok(Matrix { dim, entries })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.check_dim(rhs)?;
        Ok(Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn scale(&self, factor: &T) -> Self {
        Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|a| a.clone() * factor.clone())
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.check_dim(rhs)?;
        let n = self.dim;
        Ok(Self::from_fn(n, |i, j| {
            let mut acc = T::zero();
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                acc = acc + a.clone() * rhs.get(k, j).clone();
            }
            acc
        }))
    }

    pub fn apply(&self, vector: &[T]) -> Result<Vec<T>, MatrixError> {
        if vector.len() != self.dim {
            return Err(MatrixError::DimensionMismatch {
                left: self.dim,
                right: vector.len(),
            });
        }
        Ok((0..self.dim)
            .map(|i| {
                let mut acc = T::zero();
                for (j, x) in vector.iter().enumerate() {
                    let a = self.get(i, j);
                    if a.is_zero() || x.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * x.clone();
                }
                acc
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    fn check_dim(&self, rhs: &Self) -> Result<(), MatrixError> {
        if self.dim != rhs.dim {
            return Err(MatrixError::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rint, Rat};

    #[test]
    fn multiplication_against_hand_product() {
        let a = Matrix::from_rows(vec![vec![rint(1), rint(2)], vec![rint(3), rint(4)]]).unwrap();
        let b = Matrix::from_rows(vec![vec![rint(0), rint(1)], vec![rint(1), rint(0)]]).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(
            ab,
            Matrix::from_rows(vec![vec![rint(2), rint(1)], vec![rint(4), rint(3)],]).unwrap()
        );
    }

    #[test]
    fn rejects_ragged_rows() {
        let err = Matrix::<Rat>::from_rows(vec![vec![rint(1)], vec![]]);
        assert!(matches!(err, Err(MatrixError::NotSquare { .. })));
    }

    #[test]
    fn apply_matches_column_action() {
        let m = Matrix::from_rows(vec![vec![rint(0), rint(-1)], vec![rint(1), rint(0)]]).unwrap();
        assert_eq!(
            m.apply(&[rint(1), rint(0)]).unwrap(),
            vec![rint(0), rint(1)]
        );
        assert!(m.apply(&[rint(1)]).is_err());
    }
}
