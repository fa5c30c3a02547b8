//! Building algebras from algebras: tensor products and towers.
//!
//! A tower is an algebra `F1` over a field `F2` that is itself an algebra
//! over a base field `F3`. Identifying each `F1`-basis vector with the unit
//! of its fiber gives a flat basis for `F1` over `F3` indexed by pairs
//! `(outer, inner)`, flattened as `outer * inner_dim + inner`. When the
//! inner structural constants are scalars of the base field the tower
//! collapses to the plain tensor product
//! `C[(d,b)][(j,i)][(m,k)] = C_outer[d][j][m] * C_inner[b][i][k]`.

use thiserror::Error;

use crate::algebra::AlgebraTable;
use crate::matrix::Matrix;
use crate::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("coordinate tuple has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("tower composition requires a unital outer algebra")]
    NonUnitalOuter,
    #[error("tower constant index ({b},{c},{i},{k}) out of range (inner {inner}, outer {outer})")]
    TowerIndexOutOfRange {
        b: usize,
        c: usize,
        i: usize,
        k: usize,
        inner: usize,
        outer: usize,
    },
    #[error("duplicate tower constant entry at ({b},{c},{i},{k})")]
    TowerDuplicateEntry {
        b: usize,
        c: usize,
        i: usize,
        k: usize,
    },
    #[error("fiber matrix shape mismatch: {0}")]
    FiberShape(String),
}

/// The bijection between pairs `(outer, inner)` and flat indices
/// `outer * inner_dim + inner`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexPairing {
    pub outer_dim: usize,
    pub inner_dim: usize,
}

impl IndexPairing {
    pub fn new(outer_dim: usize, inner_dim: usize) -> Self {
        IndexPairing {
            outer_dim,
            inner_dim,
        }
    }

    pub fn flat_dim(&self) -> usize {
        self.outer_dim * self.inner_dim
    }

    pub fn flatten(&self, outer: usize, inner: usize) -> usize {
        debug_assert!(outer < self.outer_dim && inner < self.inner_dim);
        outer * self.inner_dim + inner
    }

    pub fn unflatten(&self, flat: usize) -> (usize, usize) {
        debug_assert!(flat < self.flat_dim());
        (flat / self.inner_dim, flat % self.inner_dim)
    }
}

fn combined_labels<T: Scalar>(outer: &AlgebraTable<T>, inner_labels: &[String]) -> Vec<String> {
    let mut labels = Vec::with_capacity(outer.dim() * inner_labels.len());
    for ol in outer.labels() {
        for il in inner_labels {
            labels.push(format!("{ol}⊗{il}"));
        }
    }
    labels
}

/// Tensor product of two algebras over the same base field:
/// `C[(d,b)][(j,i)][(m,k)] = C_outer[d][j][m] * C_inner[b][i][k]`.
pub fn tensor_product<T: Scalar>(
    outer: &AlgebraTable<T>,
    inner: &AlgebraTable<T>,
) -> AlgebraTable<T> {
    let pairing = IndexPairing::new(outer.dim(), inner.dim());
    let mut entries = Vec::new();
    for (d, j, m, co) in outer.sparse_constants() {
        for (b, i, k, ci) in inner.sparse_constants() {
            entries.push((
                pairing.flatten(d, b),
                pairing.flatten(j, i),
                pairing.flatten(m, k),
                co.clone() * ci,
            ));
        }
    }
    AlgebraTable::from_sparse_labeled(
        pairing.flat_dim(),
        &entries,
        Some(combined_labels(outer, inner.labels())),
    )
    .expect("tensor indices are in range by construction")
}

/// A tower `F1 / F2 / F3`: the outer algebra is `F2` over `F3`; the inner
/// constants of `F1` over `F2` are stored expanded over the outer basis,
/// `constants[b][c][i][k]` being the `e_outer[c]`-coordinate of the
/// `F2`-valued constant `C_inner[b][i][k]`.
#[derive(Debug, Clone)]
pub struct TowerSpec<T> {
    outer: AlgebraTable<T>,
    inner_dim: usize,
    constants: Vec<T>,
}

impl<T: Scalar> TowerSpec<T> {
    pub fn from_sparse(
        outer: AlgebraTable<T>,
        inner_dim: usize,
        entries: &[(usize, usize, usize, usize, T)],
    ) -> Result<Self, ConstructError> {
        assert!(inner_dim > 0, "inner dimension must be positive");
        let outer_dim = outer.dim();
        let size = inner_dim * outer_dim * inner_dim * inner_dim;
        let mut constants = vec![T::zero(); size];
        let mut seen = vec![false; size];
        for (b, c, i, k, value) in entries {
            if *b >= inner_dim || *c >= outer_dim || *i >= inner_dim || *k >= inner_dim {
                return Err(ConstructError::TowerIndexOutOfRange {
                    b: *b,
                    c: *c,
                    i: *i,
                    k: *k,
                    inner: inner_dim,
                    outer: outer_dim,
                });
            }
            let idx = ((b * outer_dim + c) * inner_dim + i) * inner_dim + k;
            if seen[idx] {
                return Err(ConstructError::TowerDuplicateEntry {
                    b: *b,
                    c: *c,
                    i: *i,
                    k: *k,
                });
            }
            seen[idx] = true;
            constants[idx] = value.clone();
        }
        Ok(TowerSpec {
            outer,
            inner_dim,
            constants,
        })
    }

    /// Tower whose inner constants are the scalar table of `inner`; the
    /// composition of such a spec equals [`tensor_product`].
    pub fn scalar(outer: AlgebraTable<T>, inner: &AlgebraTable<T>) -> Self {
        let entries: Vec<_> = inner
            .sparse_constants()
            .into_iter()
            .map(|(b, i, k, value)| (b, 0, i, k, value))
            .collect();
        Self::from_sparse(outer, inner.dim(), &entries).expect("scalar constants are in range")
    }

    pub fn outer(&self) -> &AlgebraTable<T> {
        &self.outer
    }

    pub fn inner_dim(&self) -> usize {
        self.inner_dim
    }

    pub fn constant(&self, b: usize, c: usize, i: usize, k: usize) -> &T {
        let outer_dim = self.outer.dim();
        &self.constants[((b * outer_dim + c) * self.inner_dim + i) * self.inner_dim + k]
    }

    /// True when every inner constant lies in the base field, i.e. has no
    /// component along `e_outer[c]` for `c != 0`.
    pub fn has_scalar_constants(&self) -> bool {
        let outer_dim = self.outer.dim();
        for b in 0..self.inner_dim {
            for c in 1..outer_dim {
                for i in 0..self.inner_dim {
                    for k in 0..self.inner_dim {
                        if !self.constant(b, c, i, k).is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Structural constants of the tower over the base field:
/// `C[(d,b)][(j,i)][(m,k)] = C_out[a][j][m] C_out[d][a][c] C_in[b][c][i][k]`.
/// Requires the outer algebra unital so that fiber units can be identified
/// with the inner basis vectors.
pub fn tower_compose<T: Scalar>(spec: &TowerSpec<T>) -> Result<AlgebraTable<T>, ConstructError> {
    if !spec.outer().is_unital() {
        return Err(ConstructError::NonUnitalOuter);
    }
    let outer = spec.outer();
    let od = outer.dim();
    let id = spec.inner_dim();
    let pairing = IndexPairing::new(od, id);

    // Contributions from different (a, c) pairs can target the same triple;
    // accumulate into a dense table first.
    let flat = pairing.flat_dim();
    let mut dense = vec![T::zero(); flat * flat * flat];
    for (a, j, m, c_jm) in outer.sparse_constants() {
        for d in 0..od {
            for c in 0..od {
                let c_ac = outer.constant(d, a, c);
                if c_ac.is_zero() {
                    continue;
                }
                let factor = c_jm.clone() * c_ac.clone();
                for b in 0..id {
                    for i in 0..id {
                        for k in 0..id {
                            let inner = spec.constant(b, c, i, k);
                            if inner.is_zero() {
                                continue;
                            }
                            let value = factor.clone() * inner.clone();
                            let idx = (pairing.flatten(d, b) * flat + pairing.flatten(j, i)) * flat
                                + pairing.flatten(m, k);
                            dense[idx] = dense[idx].clone() + value;
                        }
                    }
                }
            }
        }
    }

    let mut sparse = Vec::new();
    for k in 0..flat {
        for i in 0..flat {
            for j in 0..flat {
                let v = &dense[(k * flat + i) * flat + j];
                if !v.is_zero() {
                    sparse.push((k, i, j, v.clone()));
                }
            }
        }
    }
    let inner_labels: Vec<String> = (0..id).map(|i| format!("u{i}")).collect();
    Ok(AlgebraTable::from_sparse_labeled(
        flat,
        &sparse,
        Some(combined_labels(outer, &inner_labels)),
    )
    .expect("tower indices are in range by construction"))
}

/// Regroups flat base-field coordinates into fiber-valued coordinates: the
/// `k`-th inner coordinate is the outer-basis expansion
/// `a12[k][j] = a13[(j,k)]`.
pub fn reindex_coords<T: Scalar>(
    flat: &[T],
    pairing: IndexPairing,
) -> Result<Vec<Vec<T>>, ConstructError> {
    if flat.len() != pairing.flat_dim() {
        return Err(ConstructError::LengthMismatch {
            got: flat.len(),
            expected: pairing.flat_dim(),
        });
    }
    Ok((0..pairing.inner_dim)
        .map(|k| {
            (0..pairing.outer_dim)
                .map(|j| flat[pairing.flatten(j, k)].clone())
                .collect()
        })
        .collect())
}

/// Inverse of [`reindex_coords`].
pub fn flatten_coords<T: Scalar>(
    fibered: &[Vec<T>],
    pairing: IndexPairing,
) -> Result<Vec<T>, ConstructError> {
    if fibered.len() != pairing.inner_dim || fibered.iter().any(|f| f.len() != pairing.outer_dim) {
        return Err(ConstructError::LengthMismatch {
            got: fibered.iter().map(|f| f.len()).sum(),
            expected: pairing.flat_dim(),
        });
    }
    let mut flat = vec![T::zero(); pairing.flat_dim()];
    for (k, fiber) in fibered.iter().enumerate() {
        for (j, value) in fiber.iter().enumerate() {
            flat[pairing.flatten(j, k)] = value.clone();
        }
    }
    Ok(flat)
}

/// A linear map on the fiber basis with coefficients in the outer algebra:
/// entry `[i][j]` is the outer-basis expansion of the fiber-valued
/// coefficient `f^i_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberMatrix<T> {
    inner_dim: usize,
    outer_dim: usize,
    entries: Vec<T>,
}

impl<T: Scalar> FiberMatrix<T> {
    pub fn from_entries(
        inner_dim: usize,
        outer_dim: usize,
        entries: Vec<Vec<Vec<T>>>,
    ) -> Result<Self, ConstructError> {
        if entries.len() != inner_dim {
            return Err(ConstructError::FiberShape(format!(
                "expected {inner_dim} rows, got {}",
                entries.len()
            )));
        }
        let mut flat = Vec::with_capacity(inner_dim * inner_dim * outer_dim);
        for (i, row) in entries.iter().enumerate() {
            if row.len() != inner_dim {
                return Err(ConstructError::FiberShape(format!(
                    "row {i} has {} entries, expected {inner_dim}",
                    row.len()
                )));
            }
            for (j, coeff) in row.iter().enumerate() {
                if coeff.len() != outer_dim {
                    return Err(ConstructError::FiberShape(format!(
                        "entry ({i},{j}) has {} coordinates, expected {outer_dim}",
                        coeff.len()
                    )));
                }
                flat.extend(coeff.iter().cloned());
            }
        }
        Ok(FiberMatrix {
            inner_dim,
            outer_dim,
            entries: flat,
        })
    }

    pub fn identity(inner_dim: usize, outer_dim: usize) -> Self {
        let mut m = FiberMatrix {
            inner_dim,
            outer_dim,
            entries: vec![T::zero(); inner_dim * inner_dim * outer_dim],
        };
        for i in 0..inner_dim {
            m.set(i, i, 0, T::one());
        }
        m
    }

    pub fn inner_dim(&self) -> usize {
        self.inner_dim
    }

    pub fn outer_dim(&self) -> usize {
        self.outer_dim
    }

    /// Outer-basis coordinates of the fiber-valued entry `f^i_j`.
    pub fn coeff(&self, i: usize, j: usize) -> &[T] {
        let base = (i * self.inner_dim + j) * self.outer_dim;
        &self.entries[base..base + self.outer_dim]
    }

    pub fn set(&mut self, i: usize, j: usize, outer: usize, value: T) {
        let base = (i * self.inner_dim + j) * self.outer_dim;
        self.entries[base + outer] = value;
    }
}

/// Lifts a fiber-linear map to the flat basis:
/// `M[(p,i)][(l,j)] = C_outer[p][k][l] * f[i][j][k]`.
pub fn lift_linear_map<T: Scalar>(
    map: &FiberMatrix<T>,
    outer: &AlgebraTable<T>,
) -> Result<Matrix<T>, ConstructError> {
    if map.outer_dim() != outer.dim() {
        return Err(ConstructError::FiberShape(format!(
            "map coefficients have {} coordinates, outer algebra has dimension {}",
            map.outer_dim(),
            outer.dim()
        )));
    }
    let id = map.inner_dim();
    let od = outer.dim();
    let pairing = IndexPairing::new(od, id);
    Ok(Matrix::from_fn(pairing.flat_dim(), |row, col| {
        let (p, i) = pairing.unflatten(row);
        let (l, j) = pairing.unflatten(col);
        let coeff = map.coeff(i, j);
        let mut acc = T::zero();
        for (k, fk) in coeff.iter().enumerate() {
            if fk.is_zero() {
                continue;
            }
            let c = outer.constant(p, k, l);
            if !c.is_zero() {
                acc = acc + c.clone() * fk.clone();
            }
        }
        acc
    }))
}
