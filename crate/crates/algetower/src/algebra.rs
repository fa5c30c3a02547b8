//! Algebras as structural-constant tables and their element arithmetic.
//!
//! The table stores `C[k][i][j]`, the coefficient of basis vector `e_k` in
//! the product `e_i * e_j`. That convention is fixed here once and used by
//! every other module. Products of elements are the bilinear contraction
//! `(x * y)^k = x^i y^j C[k][i][j]`.
//!
//! Quaternion-type algebras `E(F, a, b)` (basis `1, i, j, k` with `i^2 = a`,
//! `j^2 = b`, `ij = -ji = k`) additionally support conjugation, the norm
//! form, inversion and vector rotation. Those operations are refused on
//! tables not built as quaternion algebras rather than guessing an
//! involution.

use thiserror::Error;

use crate::matrix::Matrix;
use crate::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("constant index ({k},{i},{j}) out of range for dimension {dim}")]
    IndexOutOfRange {
        k: usize,
        i: usize,
        j: usize,
        dim: usize,
    },
    #[error("duplicate constant entry at ({k},{i},{j})")]
    DuplicateEntry { k: usize, i: usize, j: usize },
    #[error("quaternion parameters must satisfy a*b != 0")]
    DegenerateParameters,
    #[error("coordinate tuple has length {got}, algebra dimension is {dim}")]
    CoordinateLength { got: usize, dim: usize },
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("operation requires a quaternion-type algebra")]
    NotQuaternion,
    #[error("operation requires the algebra H = E(F,-1,-1)")]
    NotClassicalQuaternion,
    #[error("zero divisor: element has zero norm")]
    ZeroDivisor,
    #[error("quaternion is not unit length: |q| = {norm}")]
    NotUnit { norm: f64 },
}

/// Parameters `a`, `b` of a quaternion-type algebra; `a*b` must be nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct QuaternionParams<T> {
    pub a: T,
    pub b: T,
}

/// Report of [`AlgebraTable::structure_report`]; every flag is decided by
/// exhaustive contraction over basis tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureReport {
    pub unital: bool,
    pub commutative: bool,
    pub associative: bool,
}

/// A finite-dimensional algebra given by its structural constants.
#[derive(Debug, Clone)]
pub struct AlgebraTable<T> {
    dim: usize,
    constants: Vec<T>,
    labels: Vec<String>,
    unital: bool,
    quaternion: Option<QuaternionParams<T>>,
}

impl<T: Scalar> PartialEq for AlgebraTable<T> {
    /// Structural equality: same dimension and same constants. Labels are
    /// display-only and do not participate.
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.constants == other.constants
    }
}

impl<T: Scalar> AlgebraTable<T> {
    /// Builds a table from a sparse list of `(k, i, j, value)` entries;
    /// omitted triples are zero. Unitality is detected and recorded.
    pub fn from_sparse(
        dim: usize,
        entries: &[(usize, usize, usize, T)],
    ) -> Result<Self, AlgebraError> {
        Self::from_sparse_labeled(dim, entries, None)
    }

    pub fn from_sparse_labeled(
        dim: usize,
        entries: &[(usize, usize, usize, T)],
        labels: Option<Vec<String>>,
    ) -> Result<Self, AlgebraError> {
        assert!(dim > 0, "algebra dimension must be positive");
        let mut constants = vec![T::zero(); dim * dim * dim];
        let mut seen = vec![false; dim * dim * dim];
        for (k, i, j, value) in entries {
            if *k >= dim || *i >= dim || *j >= dim {
                return Err(AlgebraError::IndexOutOfRange {
                    k: *k,
                    i: *i,
                    j: *j,
                    dim,
                });
            }
            let idx = (k * dim + i) * dim + j;
            if seen[idx] {
                return Err(AlgebraError::DuplicateEntry {
                    k: *k,
                    i: *i,
                    j: *j,
                });
            }
            seen[idx] = true;
            constants[idx] = value.clone();
        }
        let labels = labels.unwrap_or_else(|| (0..dim).map(|i| format!("e{i}")).collect());
        assert_eq!(labels.len(), dim, "one label per basis vector");
        let mut table = AlgebraTable {
            dim,
            constants,
            labels,
            unital: false,
            quaternion: None,
        };
        table.unital = table.detect_unital();
        Ok(table)
    }

    /// The complex field as a two-dimensional algebra: basis `1, i` with
    /// `i^2 = -1`.
    pub fn complex() -> Self {
        let one = T::one;
        let entries = [
            (0, 0, 0, one()),
            (1, 0, 1, one()),
            (1, 1, 0, one()),
            (0, 1, 1, T::zero() - one()),
        ];
        Self::from_sparse_labeled(2, &entries, Some(vec!["1".to_string(), "i".to_string()]))
            .expect("complex table is well formed")
    }

    /// The quaternion-type algebra `E(F, a, b)`; rejects `a*b = 0`.
    pub fn quaternion(a: T, b: T) -> Result<Self, AlgebraError> {
        if (a.clone() * b.clone()).is_zero() {
            return Err(AlgebraError::DegenerateParameters);
        }
        let one = T::one;
        let neg = |x: T| T::zero() - x;
        let ab = a.clone() * b.clone();
        let entries = [
            (0, 0, 0, one()),
            (1, 0, 1, one()),
            (2, 0, 2, one()),
            (3, 0, 3, one()),
            (1, 1, 0, one()),
            (0, 1, 1, a.clone()),
            (3, 1, 2, one()),
            (2, 1, 3, a.clone()),
            (2, 2, 0, one()),
            (3, 2, 1, neg(one())),
            (0, 2, 2, b.clone()),
            (1, 2, 3, neg(b.clone())),
            (3, 3, 0, one()),
            (2, 3, 1, neg(a.clone())),
            (1, 3, 2, b.clone()),
            (0, 3, 3, neg(ab)),
        ];
        let mut table = Self::from_sparse_labeled(
            4,
            &entries,
            Some(["1", "i", "j", "k"].map(String::from).to_vec()),
        )
        .expect("quaternion table is well formed");
        table.quaternion = Some(QuaternionParams { a, b });
        Ok(table)
    }

    /// The classical division case `E(F, -1, -1)`; `H` when `F` is the reals.
    pub fn h() -> Self {
        let neg_one = || T::zero() - T::one();
        Self::quaternion(neg_one(), neg_one()).expect("(-1)*(-1) != 0")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constant(&self, k: usize, i: usize, j: usize) -> &T {
        &self.constants[(k * self.dim + i) * self.dim + j]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    pub fn quaternion_params(&self) -> Option<&QuaternionParams<T>> {
        self.quaternion.as_ref()
    }

    /// True for `E(F, -1, -1)`.
    pub fn is_classical_quaternion(&self) -> bool {
        let neg_one = T::zero() - T::one();
        matches!(&self.quaternion, Some(p) if p.a == neg_one && p.b == neg_one)
    }

    /// Nonzero constants as sparse `(k, i, j, value)` entries in
    /// lexicographic order.
    pub fn sparse_constants(&self) -> Vec<(usize, usize, usize, T)> {
        let mut out = Vec::new();
        for k in 0..self.dim {
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let c = self.constant(k, i, j);
                    if !c.is_zero() {
                        out.push((k, i, j, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn element(&self, coords: Vec<T>) -> Result<AlgElement<'_, T>, AlgebraError> {
        if coords.len() != self.dim {
            return Err(AlgebraError::CoordinateLength {
                got: coords.len(),
                dim: self.dim,
            });
        }
        Ok(AlgElement {
            algebra: self,
            coords,
        })
    }

    pub fn zero_element(&self) -> AlgElement<'_, T> {
        AlgElement {
            algebra: self,
            coords: vec![T::zero(); self.dim],
        }
    }

    pub fn basis_element(&self, index: usize) -> AlgElement<'_, T> {
        assert!(index < self.dim, "basis index out of range");
        let mut coords = vec![T::zero(); self.dim];
        coords[index] = T::one();
        AlgElement {
            algebra: self,
            coords,
        }
    }

    fn detect_unital(&self) -> bool {
        for k in 0..self.dim {
            for j in 0..self.dim {
                let delta = if k == j { T::one() } else { T::zero() };
                if *self.constant(k, 0, j) != delta || *self.constant(k, j, 0) != delta {
                    return false;
                }
            }
        }
        true
    }

    /// Decides unitality, commutativity and associativity by exhaustive
    /// contraction over basis tuples.
    pub fn structure_report(&self) -> StructureReport {
        let n = self.dim;
        let commutative = (0..n).all(|k| {
            (0..n).all(|i| (i..n).all(|j| self.constant(k, i, j) == self.constant(k, j, i)))
        });

        let mut associative = true;
        'outer: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        // (e_i e_j) e_k vs e_i (e_j e_k), coefficient of e_l.
                        let mut left = T::zero();
                        let mut right = T::zero();
                        for p in 0..n {
                            let cij = self.constant(p, i, j);
                            if !cij.is_zero() {
                                left = left + cij.clone() * self.constant(l, p, k).clone();
                            }
                            let cjk = self.constant(p, j, k);
                            if !cjk.is_zero() {
                                right = right + cjk.clone() * self.constant(l, i, p).clone();
                            }
                        }
                        if left != right {
                            associative = false;
                            break 'outer;
                        }
                    }
                }
            }
        }

        StructureReport {
            unital: self.unital,
            commutative,
            associative,
        }
    }
}

/// An element of an algebra: a coordinate tuple bound to its table.
#[derive(Debug, Clone)]
pub struct AlgElement<'a, T> {
    algebra: &'a AlgebraTable<T>,
    coords: Vec<T>,
}

impl<T: Scalar> PartialEq for AlgElement<'_, T> {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.coords == other.coords
    }
}

impl<'a, T: Scalar> AlgElement<'a, T> {
    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    pub fn algebra(&self) -> &'a AlgebraTable<T> {
        self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn check_same(&self, rhs: &Self) -> Result<(), AlgebraError> {
        if self.algebra != rhs.algebra {
            return Err(AlgebraError::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_same(rhs)?;
        Ok(AlgElement {
            algebra: self.algebra,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_same(rhs)?;
        Ok(AlgElement {
            algebra: self.algebra,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn scale(&self, factor: &T) -> Self {
        AlgElement {
            algebra: self.algebra,
            coords: self
                .coords
                .iter()
                .map(|c| c.clone() * factor.clone())
                .collect(),
        }
    }

    /// Bilinear product through the structural constants.
    pub fn mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_same(rhs)?;
        let n = self.algebra.dim;
        let mut coords = vec![T::zero(); n];
        for (i, xi) in self.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in rhs.coords.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let factor = xi.clone() * yj.clone();
                for (k, coord) in coords.iter_mut().enumerate() {
                    let c = self.algebra.constant(k, i, j);
                    if !c.is_zero() {
                        *coord = coord.clone() + factor.clone() * c.clone();
                    }
                }
            }
        }
        Ok(AlgElement {
            algebra: self.algebra,
            coords,
        })
    }

    /// Quaternion conjugate `x^0 - x^1 i - x^2 j - x^3 k`; only defined on
    /// quaternion-type tables.
    pub fn conjugate(&self) -> Result<Self, AlgebraError> {
        self.require_quaternion()?;
        let mut coords = self.coords.clone();
        for c in &mut coords[1..] {
            *c = T::zero() - c.clone();
        }
        Ok(AlgElement {
            algebra: self.algebra,
            coords,
        })
    }

    /// The norm form `(x^0)^2 - a (x^1)^2 - b (x^2)^2 + ab (x^3)^2`; equals
    /// the scalar part of `x * conjugate(x)`.
    pub fn norm_sq(&self) -> Result<T, AlgebraError> {
        let params = self.require_quaternion()?;
        let (a, b) = (params.a.clone(), params.b.clone());
        let sq = |x: &T| x.clone() * x.clone();
        let [x0, x1, x2, x3] = [
            &self.coords[0],
            &self.coords[1],
            &self.coords[2],
            &self.coords[3],
        ];
        Ok(sq(x0) - a.clone() * sq(x1) - b.clone() * sq(x2) + a * b * sq(x3))
    }

    /// Inverse `conjugate(x) / norm_sq(x)`; a zero norm is a zero divisor
    /// (possible when `a > 0` or `b > 0`) and is reported as an error.
    pub fn invert(&self) -> Result<Self, AlgebraError> {
        let norm = self.norm_sq()?;
        if norm.is_zero() {
            return Err(AlgebraError::ZeroDivisor);
        }
        let inv_norm = T::one() / norm;
        Ok(self.conjugate()?.scale(&inv_norm))
    }

    /// Matrix of `x -> a * x`: `M[i][j] = C[i][k][j] a^k`.
    pub fn left_mul_matrix(&self) -> Matrix<T> {
        let n = self.algebra.dim;
        Matrix::from_fn(n, |i, j| {
            let mut acc = T::zero();
            for (k, ak) in self.coords.iter().enumerate() {
                if ak.is_zero() {
                    continue;
                }
                let c = self.algebra.constant(i, k, j);
                if !c.is_zero() {
                    acc = acc + ak.clone() * c.clone();
                }
            }
            acc
        })
    }

    /// Matrix of `x -> x * a`: `M[i][j] = C[i][j][k] a^k`.
    pub fn right_mul_matrix(&self) -> Matrix<T> {
        let n = self.algebra.dim;
        Matrix::from_fn(n, |i, j| {
            let mut acc = T::zero();
            for (k, ak) in self.coords.iter().enumerate() {
                if ak.is_zero() {
                    continue;
                }
                let c = self.algebra.constant(i, j, k);
                if !c.is_zero() {
                    acc = acc + ak.clone() * c.clone();
                }
            }
            acc
        })
    }

    fn require_quaternion(&self) -> Result<&QuaternionParams<T>, AlgebraError> {
        self.algebra
            .quaternion_params()
            .ok_or(AlgebraError::NotQuaternion)
    }
}

/// Conjugation `v -> q (v^1 i + v^2 j + v^3 k) q^{-1}` in `E(F, -1, -1)`,
/// returned as the vector part; the scalar part of the conjugated element is
/// identically zero. The Euclidean form `v . v` is preserved exactly.
pub fn rotate_vector<'a, T: Scalar>(
    q: &AlgElement<'a, T>,
    v: &[T; 3],
) -> Result<[T; 3], AlgebraError> {
    if !q.algebra().is_classical_quaternion() {
        return Err(AlgebraError::NotClassicalQuaternion);
    }
    let pure = q
        .algebra()
        .element(vec![T::zero(), v[0].clone(), v[1].clone(), v[2].clone()])?;
    let rotated = q.mul(&pure)?.mul(&q.invert()?)?;
    let coords = rotated.into_coords();
    let mut it = coords.into_iter();
    it.next();
    Ok([
        it.next().expect("dim 4"),
        it.next().expect("dim 4"),
        it.next().expect("dim 4"),
    ])
}

/// Rotation angle of the 3x3 matrix induced by a unit quaternion, in
/// radians: `arccos((trace - 1) / 2)`. For `q = cos(alpha) + u sin(alpha)`
/// this equals `2 alpha`. The single floating-point operation in the crate;
/// `q` must be unit length within `1e-9`.
pub fn rotation_angle_check(q: &[f64; 4]) -> Result<f64, AlgebraError> {
    let norm = q.iter().map(|c| c * c).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(AlgebraError::NotUnit { norm });
    }
    let h = AlgebraTable::<f64>::h();
    let q = h.element(q.to_vec()).expect("four coordinates");
    let mut trace = 0.0;
    for axis in 0..3 {
        let mut v = [0.0; 3];
        v[axis] = 1.0;
        let image = rotate_vector(&q, &v)?;
        trace += image[axis];
    }
    Ok(((trace - 1.0) / 2.0).clamp(-1.0, 1.0).acos())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rint, Algebra, Rat};

    fn el<'a>(alg: &'a Algebra, coords: &[i64]) -> AlgElement<'a, Rat> {
        alg.element(coords.iter().map(|&c| rint(c)).collect())
            .unwrap()
    }

    #[test]
    fn from_sparse_validates_indices() {
        let err = Algebra::from_sparse(2, &[(0, 2, 0, rint(1))]);
        assert!(matches!(err, Err(AlgebraError::IndexOutOfRange { .. })));
        let err = Algebra::from_sparse(2, &[(0, 0, 0, rint(1)), (0, 0, 0, rint(1))]);
        assert!(matches!(err, Err(AlgebraError::DuplicateEntry { .. })));
    }

    #[test]
    fn one_dimensional_field_is_unital() {
        let field = Algebra::from_sparse(1, &[(0, 0, 0, rint(1))]).unwrap();
        assert!(field.is_unital());
        let report = field.structure_report();
        assert!(report.commutative && report.associative);
    }

    #[test]
    fn complex_table_is_unital_commutative_associative() {
        let c = Algebra::complex();
        assert!(c.is_unital());
        assert_eq!(
            c.structure_report(),
            StructureReport {
                unital: true,
                commutative: true,
                associative: true
            }
        );
    }

    #[test]
    fn quaternion_rejects_degenerate_parameters() {
        assert!(matches!(
            Algebra::quaternion(rint(0), rint(1)),
            Err(AlgebraError::DegenerateParameters)
        ));
    }

    #[test]
    fn h_products_follow_the_sign_table() {
        let h = Algebra::h();
        let i = h.basis_element(1);
        let j = h.basis_element(2);
        let k = h.basis_element(3);
        assert_eq!(i.mul(&j).unwrap(), k);
        assert_eq!(j.mul(&i).unwrap(), el(&h, &[0, 0, 0, -1]));
        assert_eq!(i.mul(&i).unwrap(), el(&h, &[-1, 0, 0, 0]));
        assert_eq!(j.mul(&k).unwrap(), i);
        assert_eq!(k.mul(&j).unwrap(), el(&h, &[0, -1, 0, 0]));
        assert_eq!(k.mul(&i).unwrap(), j);
        assert_eq!(i.mul(&k).unwrap(), el(&h, &[0, 0, -1, 0]));
    }

    #[test]
    fn generic_quaternion_squares_to_parameters() {
        let alg = Algebra::quaternion(rint(2), rint(3)).unwrap();
        let i = alg.basis_element(1);
        let j = alg.basis_element(2);
        let k = alg.basis_element(3);
        assert_eq!(i.mul(&i).unwrap(), el(&alg, &[2, 0, 0, 0]));
        assert_eq!(j.mul(&j).unwrap(), el(&alg, &[3, 0, 0, 0]));
        assert_eq!(k.mul(&k).unwrap(), el(&alg, &[-6, 0, 0, 0]));
        // i*k = a j, k*j = b i per the defining table.
        assert_eq!(i.mul(&k).unwrap(), el(&alg, &[0, 0, 2, 0]));
        assert_eq!(k.mul(&j).unwrap(), el(&alg, &[0, 3, 0, 0]));
    }

    #[test]
    fn unit_acts_as_identity() {
        let h = Algebra::h();
        let x = el(&h, &[3, -1, 2, 5]);
        let unit = h.basis_element(0);
        assert_eq!(unit.mul(&x).unwrap(), x);
        assert_eq!(x.mul(&unit).unwrap(), x);
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let h = Algebra::h();
        let c = Algebra::complex();
        let x = h.basis_element(0);
        let y = c.basis_element(0);
        assert!(matches!(x.mul(&y), Err(AlgebraError::AlgebraMismatch)));
    }

    #[test]
    fn conjugation_is_an_involution() {
        let h = Algebra::h();
        let x = el(&h, &[1, 1, 1, 1]);
        let conj = x.conjugate().unwrap();
        assert_eq!(conj, el(&h, &[1, -1, -1, -1]));
        assert_eq!(conj.conjugate().unwrap(), x);
        let real = el(&h, &[5, 0, 0, 0]);
        assert_eq!(real.conjugate().unwrap(), real);
    }

    #[test]
    fn conjugate_unsupported_outside_quaternions() {
        let c = Algebra::complex();
        let x = c.basis_element(1);
        assert!(matches!(x.conjugate(), Err(AlgebraError::NotQuaternion)));
        assert!(matches!(x.norm_sq(), Err(AlgebraError::NotQuaternion)));
    }

    #[test]
    fn norm_examples() {
        let gen = Algebra::quaternion(rint(2), rint(3)).unwrap();
        assert_eq!(gen.basis_element(1).norm_sq().unwrap(), rint(-2));
        assert_eq!(gen.basis_element(0).norm_sq().unwrap(), rint(1));
        let h = Algebra::h();
        assert_eq!(el(&h, &[1, 1, 1, 1]).norm_sq().unwrap(), rint(4));
    }

    #[test]
    fn inversion_examples() {
        let h = Algebra::h();
        let i = h.basis_element(1);
        assert_eq!(i.invert().unwrap(), el(&h, &[0, -1, 0, 0]));

        let x = el(&h, &[1, 1, 1, 1]);
        let inv = x.invert().unwrap();
        assert_eq!(
            inv.coords(),
            &[rat(1, 4), rat(-1, 4), rat(-1, 4), rat(-1, 4)]
        );
        assert_eq!(x.mul(&inv).unwrap(), h.basis_element(0));
        assert_eq!(inv.mul(&x).unwrap(), h.basis_element(0));
    }

    #[test]
    fn split_case_has_zero_divisors() {
        let split = Algebra::quaternion(rint(1), rint(1)).unwrap();
        let x = split
            .element(vec![rint(1), rint(1), rint(0), rint(0)])
            .unwrap();
        assert_eq!(x.norm_sq().unwrap(), rint(0));
        assert!(matches!(x.invert(), Err(AlgebraError::ZeroDivisor)));
    }

    #[test]
    fn left_mul_matrix_of_complex_number() {
        let c = Algebra::complex();
        let a = c.element(vec![rint(3), rint(4)]).unwrap();
        let m = a.left_mul_matrix();
        assert_eq!(m.row(0), &[rint(3), rint(-4)]);
        assert_eq!(m.row(1), &[rint(4), rint(3)]);
        // Commutative field: right multiplication is the same map.
        assert_eq!(a.right_mul_matrix(), m);
    }

    #[test]
    fn right_mul_by_unit_is_identity() {
        let h = Algebra::h();
        assert_eq!(h.basis_element(0).right_mul_matrix(), Matrix::identity(4));
    }

    #[test]
    fn left_mul_matrix_pattern_in_h() {
        // x -> a x has the fixed sign pattern over the coordinates of a.
        let h = Algebra::h();
        let a = el(&h, &[2, 3, 5, 7]);
        let m = a.left_mul_matrix();
        let expect: [[i64; 4]; 4] = [[2, -3, -5, -7], [3, 2, -7, 5], [5, 7, 2, -3], [7, -5, 3, 2]];
        for (i, row) in expect.iter().enumerate() {
            for (j, value) in row.iter().enumerate() {
                assert_eq!(m.get(i, j), &rint(*value), "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn h_structure_report() {
        let report = Algebra::h().structure_report();
        assert_eq!(
            report,
            StructureReport {
                unital: true,
                commutative: false,
                associative: true
            }
        );
    }

    #[test]
    fn rotation_by_one_plus_i() {
        let h = Algebra::h();
        let q = el(&h, &[1, 1, 0, 0]);
        assert_eq!(
            rotate_vector(&q, &[rint(0), rint(1), rint(0)]).unwrap(),
            [rint(0), rint(0), rint(1)]
        );
        assert_eq!(
            rotate_vector(&q, &[rint(0), rint(0), rint(1)]).unwrap(),
            [rint(0), rint(-1), rint(0)]
        );
        assert_eq!(
            rotate_vector(&q, &[rint(1), rint(0), rint(0)]).unwrap(),
            [rint(1), rint(0), rint(0)]
        );
        let identity = el(&h, &[1, 0, 0, 0]);
        assert_eq!(
            rotate_vector(&identity, &[rint(2), rint(3), rint(5)]).unwrap(),
            [rint(2), rint(3), rint(5)]
        );
    }

    #[test]
    fn rotation_rejects_generic_parameters() {
        let alg = Algebra::quaternion(rint(2), rint(3)).unwrap();
        let q = alg.basis_element(0);
        assert!(matches!(
            rotate_vector(&q, &[rint(1), rint(0), rint(0)]),
            Err(AlgebraError::NotClassicalQuaternion)
        ));
    }

    #[test]
    fn rotation_angle_examples() {
        let half = std::f64::consts::FRAC_1_SQRT_2;
        let angle = rotation_angle_check(&[half, half, 0.0, 0.0]).unwrap();
        assert!((angle - std::f64::consts::FRAC_PI_2).abs() < 1e-9);
        assert!(rotation_angle_check(&[1.0, 0.0, 0.0, 0.0]).unwrap().abs() < 1e-9);
        let angle = rotation_angle_check(&[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!((angle - std::f64::consts::PI).abs() < 1e-9);
        assert!(matches!(
            rotation_angle_check(&[1.0, 1.0, 0.0, 0.0]),
            Err(AlgebraError::NotUnit { .. })
        ));
    }
}
