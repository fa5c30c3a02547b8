//! Quaternion polynomial functions and regularity of their differentials.
//!
//! A function is four commutative coordinate polynomials in `x0..x3`; it is
//! built from noncommutative monomials `c0 * x * c1 * x * ... * cm` expanded
//! through the quaternion product. Differentiation is exact, so regularity —
//! the vanishing of `df/dx0 + i df/dx1 + j df/dx2 + k df/dx3` — is decided
//! either at a rational point or identically, by checking that the four
//! residual polynomials are zero.

use std::array;

use thiserror::Error;

use crate::algebra::AlgebraTable;
use crate::linmap::{self, LinMapError, StandardComponents};
use crate::matrix::Matrix;
use crate::poly::CoordPolynomial;
use crate::Scalar;

/// Nonzero structural constants of the classical quaternion table:
/// `(k, i, j, sign)` with `e_i e_j = sign * e_k`.
const H_SIGNS: [(usize, usize, usize, i8); 16] = [
    (0, 0, 0, 1),
    (1, 0, 1, 1),
    (2, 0, 2, 1),
    (3, 0, 3, 1),
    (1, 1, 0, 1),
    (0, 1, 1, -1),
    (3, 1, 2, 1),
    (2, 1, 3, -1),
    (2, 2, 0, 1),
    (3, 2, 1, -1),
    (0, 2, 2, -1),
    (1, 2, 3, 1),
    (3, 3, 0, 1),
    (2, 3, 1, 1),
    (1, 3, 2, -1),
    (0, 3, 3, -1),
];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RegularError {
    #[error("monomial {index} is empty; a monomial needs at least one constant")]
    EmptyMonomial { index: usize },
    #[error(transparent)]
    LinMap(#[from] LinMapError),
}

/// A function of a quaternion variable: four coordinate polynomials.
#[derive(Debug, Clone, PartialEq)]
pub struct QuaternionPolynomial<T> {
    coords: [CoordPolynomial<T>; 4],
}

impl<T: Scalar> QuaternionPolynomial<T> {
    pub fn zero() -> Self {
        QuaternionPolynomial {
            coords: array::from_fn(|_| CoordPolynomial::zero()),
        }
    }

    pub fn from_coords(coords: [CoordPolynomial<T>; 4]) -> Self {
        QuaternionPolynomial { coords }
    }

    pub fn constant(value: &[T; 4]) -> Self {
        QuaternionPolynomial {
            coords: array::from_fn(|i| CoordPolynomial::constant(value[i].clone())),
        }
    }

    /// The identity function `f(x) = x`.
    pub fn variable() -> Self {
        QuaternionPolynomial {
            coords: array::from_fn(CoordPolynomial::var),
        }
    }

    pub fn coords(&self) -> &[CoordPolynomial<T>; 4] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &CoordPolynomial<T> {
        &self.coords[i]
    }

    pub fn add(&self, rhs: &Self) -> Self {
        QuaternionPolynomial {
            coords: array::from_fn(|i| self.coords[i].add(&rhs.coords[i])),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        QuaternionPolynomial {
            coords: array::from_fn(|i| self.coords[i].sub(&rhs.coords[i])),
        }
    }

    pub fn scale(&self, factor: &T) -> Self {
        QuaternionPolynomial {
            coords: array::from_fn(|i| self.coords[i].scale(factor)),
        }
    }

    /// Noncommutative pointwise product through the quaternion table.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut coords: [CoordPolynomial<T>; 4] = array::from_fn(|_| CoordPolynomial::zero());
        for &(k, i, j, sign) in &H_SIGNS {
            let term = self.coords[i].mul(&rhs.coords[j]);
            coords[k] = if sign < 0 {
                coords[k].sub(&term)
            } else {
                coords[k].add(&term)
            };
        }
        QuaternionPolynomial { coords }
    }

    /// Expands a sum of monomials `c0 * x * c1 * x * ... * cm`, each given
    /// as its list of constants; `m = len - 1` is the monomial degree. An
    /// empty sum is the zero function.
    pub fn build(monomials: &[Vec<[T; 4]>]) -> Result<Self, RegularError> {
        let x = Self::variable();
        let mut acc = Self::zero();
        for (index, constants) in monomials.iter().enumerate() {
            let mut it = constants.iter();
            let first = it.next().ok_or(RegularError::EmptyMonomial { index })?;
            let mut term = Self::constant(first);
            for constant in it {
                term = term.mul(&x).mul(&Self::constant(constant));
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// `f(x) = x^2`.
    pub fn x_squared() -> Self {
        Self::variable().mul(&Self::variable())
    }

    /// `f(x) = x^3`.
    pub fn x_cubed() -> Self {
        Self::x_squared().mul(&Self::variable())
    }

    /// Quaternion conjugation, as the polynomial
    /// `-1/2 (x + i x i + j x j + k x k)`.
    pub fn conjugation() -> Self {
        let half = T::one() / (T::one() + T::one());
        let neg_half = T::zero() - half;
        let mut monomials = vec![vec![
            [neg_half.clone(), T::zero(), T::zero(), T::zero()],
            unit(),
        ]];
        for axis in 1..4 {
            let mut left = [T::zero(), T::zero(), T::zero(), T::zero()];
            left[axis] = neg_half.clone();
            let mut right = [T::zero(), T::zero(), T::zero(), T::zero()];
            right[axis] = T::one();
            monomials.push(vec![left, right]);
        }
        Self::build(&monomials).expect("monomials are nonempty")
    }

    /// The degree-one regular function `x^1 - i x^0`, as the polynomial
    /// `-1/2 (i x + x i)`.
    pub fn fueter_variable() -> Self {
        let half = T::one() / (T::one() + T::one());
        let neg_half = T::zero() - half;
        let zero = T::zero;
        let monomials = vec![
            vec![[zero(), neg_half.clone(), zero(), zero()], unit()],
            vec![
                [neg_half, zero(), zero(), zero()],
                [zero(), T::one(), zero(), zero()],
            ],
        ];
        Self::build(&monomials).expect("monomials are nonempty")
    }

    pub fn eval(&self, point: &[T; 4]) -> [T; 4] {
        array::from_fn(|i| self.coords[i].eval(point))
    }

    /// Symbolic partials: entry `[i][j]` is `d f^i / d x^j`.
    pub fn jacobian_symbolic(&self) -> [[CoordPolynomial<T>; 4]; 4] {
        array::from_fn(|i| array::from_fn(|j| self.coords[i].partial(j)))
    }

    /// The Jacobian matrix evaluated at a point.
    pub fn jacobian_at(&self, point: &[T; 4]) -> Matrix<T> {
        let symbolic = self.jacobian_symbolic();
        Matrix::from_fn(4, |i, j| symbolic[i][j].eval(point))
    }
}

fn unit<T: Scalar>() -> [T; 4] {
    [T::one(), T::zero(), T::zero(), T::zero()]
}

/// Looks up a function by its CLI name.
pub fn builtin_function<T: Scalar>(name: &str) -> Option<QuaternionPolynomial<T>> {
    match name {
        "x" => Some(QuaternionPolynomial::variable()),
        "x2" => Some(QuaternionPolynomial::x_squared()),
        "x3" => Some(QuaternionPolynomial::x_cubed()),
        "conj" => Some(QuaternionPolynomial::conjugation()),
        "fueter1" => Some(QuaternionPolynomial::fueter_variable()),
        "zero" => Some(QuaternionPolynomial::zero()),
        _ => None,
    }
}

/// The four residual polynomials of the coordinate regularity system:
///
/// ```text
/// r0 = d f0/d x0 - d f1/d x1 - d f2/d x2 - d f3/d x3
/// r1 = d f0/d x1 + d f1/d x0 - d f2/d x3 + d f3/d x2
/// r2 = d f0/d x2 + d f1/d x3 + d f2/d x0 - d f3/d x1
/// r3 = d f0/d x3 + d f2/d x1 - d f1/d x2 + d f3/d x0
/// ```
///
/// The function is regular everywhere iff all four are identically zero.
pub fn residual_polynomials<T: Scalar>(f: &QuaternionPolynomial<T>) -> [CoordPolynomial<T>; 4] {
    let jac = f.jacobian_symbolic();
    [
        jac[0][0].sub(&jac[1][1]).sub(&jac[2][2]).sub(&jac[3][3]),
        jac[0][1].add(&jac[1][0]).sub(&jac[2][3]).add(&jac[3][2]),
        jac[0][2].add(&jac[1][3]).add(&jac[2][0]).sub(&jac[3][1]),
        jac[0][3].add(&jac[2][1]).sub(&jac[1][2]).add(&jac[3][0]),
    ]
}

/// Pointwise regularity report. `system` holds the four coordinate
/// residuals; `operator` holds the coordinates of the quaternion
/// `df/dx0 + i df/dx1 + j df/dx2 + k df/dx3`, computed independently
/// through the quaternion product. The two agree coordinate for
/// coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularityReport<T> {
    pub regular: bool,
    pub system: [T; 4],
    pub operator: [T; 4],
}

pub fn check_regular<T: Scalar>(
    f: &QuaternionPolynomial<T>,
    point: &[T; 4],
) -> RegularityReport<T> {
    let system: [T; 4] = {
        let residuals = residual_polynomials(f);
        array::from_fn(|i| residuals[i].eval(point))
    };

    // Independent route: multiply each partial-derivative quaternion by the
    // corresponding basis element on the left and sum.
    let h = AlgebraTable::<T>::h();
    let jac = f.jacobian_at(point);
    let mut acc = h.zero_element();
    for j in 0..4 {
        let partial = h.element(jac.column(j)).expect("four coordinates");
        let term = h.basis_element(j).mul(&partial).expect("same algebra");
        acc = acc.add(&term).expect("same algebra");
    }
    let coords = acc.into_coords();
    let mut it = coords.into_iter();
    let operator: [T; 4] = array::from_fn(|_| it.next().expect("dim 4"));

    RegularityReport {
        regular: system.iter().all(|r| r.is_zero()),
        system,
        operator,
    }
}

/// Everywhere variant: regular iff the residual polynomials vanish
/// identically.
pub fn check_regular_everywhere<T: Scalar>(
    f: &QuaternionPolynomial<T>,
) -> (bool, [CoordPolynomial<T>; 4]) {
    let residuals = residual_polynomials(f);
    (residuals.iter().all(|r| r.is_zero()), residuals)
}

/// The four combinations of standard components whose vanishing is
/// equivalent to regularity: with `S = matrix_to_standard(jacobian)`,
///
/// ```text
/// c0 = S00 + S11 + S22 + S33
/// c1 = S01 - S10 - S23 + S32
/// c2 = S02 + S13 - S20 - S31
/// c3 = S03 - S12 + S21 - S30
/// ```
///
/// Each coordinate residual of [`check_regular`] equals `-2` times the
/// corresponding combination; the signs are pinned by that identity on the
/// sixteen unit sandwich maps `x -> e_k x e_r`.
pub fn standard_combinations<T: Scalar>(std: &StandardComponents<T>) -> [T; 4] {
    let s = |k: usize, r: usize| std.get(k, r).clone();
    [
        s(0, 0) + s(1, 1) + s(2, 2) + s(3, 3),
        s(0, 1) - s(1, 0) - s(2, 3) + s(3, 2),
        s(0, 2) + s(1, 3) - s(2, 0) - s(3, 1),
        s(0, 3) - s(1, 2) + s(2, 1) - s(3, 0),
    ]
}

/// Regularity via standard components of the Jacobian at a point.
#[derive(Debug, Clone, PartialEq)]
pub struct StandardReport<T> {
    pub regular: bool,
    pub combinations: [T; 4],
    pub components: StandardComponents<T>,
}

pub fn check_regular_via_standard<T: Scalar>(
    f: &QuaternionPolynomial<T>,
    point: &[T; 4],
) -> Result<StandardReport<T>, RegularError> {
    let h = AlgebraTable::<T>::h();
    let components = linmap::matrix_to_standard(&f.jacobian_at(point), &h)?;
    let combinations = standard_combinations(&components);
    Ok(StandardReport {
        regular: combinations.iter().all(|c| c.is_zero()),
        combinations,
        components,
    })
}

/// Standard components of the symbolic Jacobian: the block systems have
/// rational coefficients, so their inverses apply entrywise to polynomial
/// right-hand sides.
pub fn standard_component_polynomials<T: Scalar>(
    f: &QuaternionPolynomial<T>,
) -> Result<[[CoordPolynomial<T>; 4]; 4], RegularError> {
    let h = AlgebraTable::<T>::h();
    let inverses = linmap::standard_block_inverses(&h)?;
    let jac = f.jacobian_symbolic();
    let mut out: [[CoordPolynomial<T>; 4]; 4] =
        array::from_fn(|_| array::from_fn(|_| CoordPolynomial::zero()));
    for (g, inverse) in inverses.iter().enumerate() {
        for k in 0..4 {
            let mut acc = CoordPolynomial::zero();
            for j in 0..4 {
                let coeff = inverse.get(k, j);
                if !coeff.is_zero() {
                    acc = acc.add(&jac[j ^ g][j].scale(coeff));
                }
            }
            out[k][k ^ g] = acc;
        }
    }
    Ok(out)
}

/// Everywhere variant of the standard-component combinations.
pub fn standard_combination_polynomials<T: Scalar>(
    f: &QuaternionPolynomial<T>,
) -> Result<[CoordPolynomial<T>; 4], RegularError> {
    let s = standard_component_polynomials(f)?;
    Ok([
        s[0][0].add(&s[1][1]).add(&s[2][2]).add(&s[3][3]),
        s[0][1].sub(&s[1][0]).sub(&s[2][3]).add(&s[3][2]),
        s[0][2].add(&s[1][3]).sub(&s[2][0]).sub(&s[3][1]),
        s[0][3].sub(&s[1][2]).add(&s[2][1]).sub(&s[3][0]),
    ])
}

fn basis_sandwich<T: Scalar>(
    h: &AlgebraTable<T>,
    left: usize,
    dx: &[T; 4],
    right: usize,
) -> [T; 4] {
    let dx = h.element(dx.to_vec()).expect("four coordinates");
    let product = h
        .basis_element(left)
        .mul(&dx)
        .expect("same algebra")
        .mul(&h.basis_element(right))
        .expect("same algebra");
    let mut it = product.into_coords().into_iter();
    array::from_fn(|_| it.next().expect("dim 4"))
}

/// The differential `sum_{i,j} S[i][j] e_i dx e_j` evaluated on an
/// increment `dx`.
pub fn gateaux_differential<T: Scalar>(std: &StandardComponents<T>, dx: &[T; 4]) -> [T; 4] {
    let h = AlgebraTable::<T>::h();
    let mut acc = [T::zero(), T::zero(), T::zero(), T::zero()];
    for i in 0..4 {
        for j in 0..4 {
            let coeff = std.get(i, j);
            if coeff.is_zero() {
                continue;
            }
            let term = basis_sandwich(&h, i, dx, j);
            for (a, t) in acc.iter_mut().zip(term) {
                *a = a.clone() + coeff.clone() * t;
            }
        }
    }
    acc
}

/// The grouped form of the differential of a regular function: the first
/// component row is eliminated through the vanishing combinations, leaving
/// only components `S[i][j]` with `i >= 1`:
///
/// ```text
/// -(S11+S22+S33) dx + S11 i dx i + S22 j dx j + S33 k dx k
/// + (S10+S23-S32) dx i + S10 i dx + S23 j dx k + S32 k dx j
/// + (-S13+S20+S31) dx j + S13 i dx k + S20 j dx + S31 k dx i
/// + (S12-S21+S30) dx k + S12 i dx j + S21 j dx i + S30 k dx
/// ```
///
/// Agrees with [`gateaux_differential`] exactly when the combinations of
/// [`standard_combinations`] vanish; that agreement is verified by tests,
/// not assumed.
pub fn gateaux_differential_grouped<T: Scalar>(std: &StandardComponents<T>, dx: &[T; 4]) -> [T; 4] {
    let h = AlgebraTable::<T>::h();
    let s = |k: usize, r: usize| std.get(k, r).clone();
    let neg = |x: T| T::zero() - x;

    // (coefficient, left basis, right basis)
    let terms = [
        (neg(s(1, 1) + s(2, 2) + s(3, 3)), 0, 0),
        (s(1, 1), 1, 1),
        (s(2, 2), 2, 2),
        (s(3, 3), 3, 3),
        (s(1, 0) + s(2, 3) - s(3, 2), 0, 1),
        (s(1, 0), 1, 0),
        (s(2, 3), 2, 3),
        (s(3, 2), 3, 2),
        (neg(s(1, 3)) + s(2, 0) + s(3, 1), 0, 2),
        (s(1, 3), 1, 3),
        (s(2, 0), 2, 0),
        (s(3, 1), 3, 1),
        (s(1, 2) - s(2, 1) + s(3, 0), 0, 3),
        (s(1, 2), 1, 2),
        (s(2, 1), 2, 1),
        (s(3, 0), 3, 0),
    ];

    let mut acc = [T::zero(), T::zero(), T::zero(), T::zero()];
    for (coeff, left, right) in terms {
        if coeff.is_zero() {
            continue;
        }
        let term = basis_sandwich(&h, left, dx, right);
        for (a, t) in acc.iter_mut().zip(term) {
            *a = a.clone() + coeff.clone() * t;
        }
    }
    acc
}

/// Report of the relaxed derivative conditions: equal diagonal partials and
/// antisymmetric off-diagonal partials. Generic in the value type so the
/// same shape serves pointwise values and residual polynomials.
#[derive(Debug, Clone, PartialEq)]
pub struct CrLikeReport<V> {
    pub diagonal: [V; 4],
    pub diagonal_equal: bool,
    /// `(i, j, M[i][i] - M[j][j])` for each failing diagonal pair.
    pub diagonal_failures: Vec<(usize, usize, V)>,
    pub antisymmetric: bool,
    /// `(i, j, M[i][j] + M[j][i])` for each failing off-diagonal pair.
    pub antisymmetry_failures: Vec<(usize, usize, V)>,
}

impl<V> CrLikeReport<V> {
    pub fn holds(&self) -> bool {
        self.diagonal_equal && self.antisymmetric
    }
}

#[allow(clippy::needless_range_loop)]
fn cr_like_from_jacobian<T: Scalar>(
    jac: &[[CoordPolynomial<T>; 4]; 4],
) -> CrLikeReport<CoordPolynomial<T>> {
    let diagonal: [CoordPolynomial<T>; 4] = array::from_fn(|i| jac[i][i].clone());
    let mut diagonal_failures = Vec::new();
    for i in 0..4 {
        for j in (i + 1)..4 {
            let residual = diagonal[i].sub(&diagonal[j]);
            if !residual.is_zero() {
                diagonal_failures.push((i, j, residual));
            }
        }
    }
    let mut antisymmetry_failures = Vec::new();
    for i in 0..4 {
        for j in (i + 1)..4 {
            let residual = jac[i][j].add(&jac[j][i]);
            if !residual.is_zero() {
                antisymmetry_failures.push((i, j, residual));
            }
        }
    }
    CrLikeReport {
        diagonal,
        diagonal_equal: diagonal_failures.is_empty(),
        diagonal_failures,
        antisymmetric: antisymmetry_failures.is_empty(),
        antisymmetry_failures,
    }
}

/// Relaxed derivative conditions as identities in the coordinates.
pub fn cr_like_everywhere<T: Scalar>(
    f: &QuaternionPolynomial<T>,
) -> CrLikeReport<CoordPolynomial<T>> {
    cr_like_from_jacobian(&f.jacobian_symbolic())
}

/// Relaxed derivative conditions at a point.
#[allow(clippy::needless_range_loop)]
pub fn cr_like_at<T: Scalar>(f: &QuaternionPolynomial<T>, point: &[T; 4]) -> CrLikeReport<T> {
    let jac = f.jacobian_at(point);
    let diagonal: [T; 4] = array::from_fn(|i| jac.get(i, i).clone());
    let mut diagonal_failures = Vec::new();
    let mut antisymmetry_failures = Vec::new();
    for i in 0..4 {
        for j in (i + 1)..4 {
            let diag = diagonal[i].clone() - diagonal[j].clone();
            if !diag.is_zero() {
                diagonal_failures.push((i, j, diag));
            }
            let anti = jac.get(i, j).clone() + jac.get(j, i).clone();
            if !anti.is_zero() {
                antisymmetry_failures.push((i, j, anti));
            }
        }
    }
    CrLikeReport {
        diagonal,
        diagonal_equal: diagonal_failures.is_empty(),
        diagonal_failures,
        antisymmetric: antisymmetry_failures.is_empty(),
        antisymmetry_failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rint, Algebra, Rat};

    type QPoly = QuaternionPolynomial<Rat>;

    fn pt(coords: [i64; 4]) -> [Rat; 4] {
        coords.map(rint)
    }

    #[test]
    fn h_sign_table_matches_generic_quaternion_at_minus_one() {
        let h = Algebra::h();
        for &(k, i, j, sign) in &H_SIGNS {
            assert_eq!(
                *h.constant(k, i, j),
                rint(sign as i64),
                "entry ({k},{i},{j})"
            );
        }
        assert_eq!(h.sparse_constants().len(), H_SIGNS.len());
    }

    #[test]
    fn x_squared_coordinates() {
        let f = QPoly::x_squared();
        // y0 = x0^2 - x1^2 - x2^2 - x3^2, y_i = 2 x0 x_i.
        assert_eq!(f.coord(0).coeff(&[2, 0, 0, 0]), rint(1));
        assert_eq!(f.coord(0).coeff(&[0, 2, 0, 0]), rint(-1));
        assert_eq!(f.coord(0).coeff(&[0, 0, 2, 0]), rint(-1));
        assert_eq!(f.coord(0).coeff(&[0, 0, 0, 2]), rint(-1));
        assert_eq!(f.coord(1).coeff(&[1, 1, 0, 0]), rint(2));
        assert_eq!(f.coord(2).coeff(&[1, 0, 1, 0]), rint(2));
        assert_eq!(f.coord(3).coeff(&[1, 0, 0, 1]), rint(2));
        assert_eq!(f.coord(1).terms().count(), 1);
    }

    #[test]
    fn build_expands_sandwich_monomial() {
        // i * x * i is linear with matrix diag(-1, -1, 1, 1).
        let i = [rint(0), rint(1), rint(0), rint(0)];
        let f = QPoly::build(&[vec![i.clone(), i]]).unwrap();
        let jac = f.jacobian_at(&pt([7, -3, 2, 1]));
        let expected = Matrix::from_fn(4, |r, c| {
            if r != c {
                rint(0)
            } else if r < 2 {
                rint(-1)
            } else {
                rint(1)
            }
        });
        assert_eq!(jac, expected);
    }

    #[test]
    fn build_rejects_empty_monomial() {
        assert!(matches!(
            QPoly::build(&[vec![]]),
            Err(RegularError::EmptyMonomial { index: 0 })
        ));
        assert_eq!(QPoly::build(&[]).unwrap(), QPoly::zero());
    }

    #[test]
    fn evaluation_matches_direct_product() {
        let h = Algebra::h();
        let f = QPoly::x_cubed();
        let p = pt([1, 2, -1, 3]);
        let x = h.element(p.to_vec()).unwrap();
        let direct = x.mul(&x).unwrap().mul(&x).unwrap();
        assert_eq!(f.eval(&p).to_vec(), direct.coords());
    }

    #[test]
    fn conjugation_evaluates_to_conjugate() {
        let h = Algebra::h();
        let conj = QPoly::conjugation();
        let p = pt([5, -2, 7, 3]);
        let expected = h.element(p.to_vec()).unwrap().conjugate().unwrap();
        assert_eq!(conj.eval(&p).to_vec(), expected.coords());
        // Jacobian is diag(1, -1, -1, -1) at any point.
        let jac = conj.jacobian_at(&pt([9, 4, -6, 2]));
        let expected = Matrix::from_fn(4, |r, c| {
            if r != c {
                rint(0)
            } else if r == 0 {
                rint(1)
            } else {
                rint(-1)
            }
        });
        assert_eq!(jac, expected);
    }

    #[test]
    fn fueter_variable_has_expected_coordinates() {
        let f = QPoly::fueter_variable();
        assert_eq!(f.coord(0).coeff(&[0, 1, 0, 0]), rint(1));
        assert_eq!(f.coord(1).coeff(&[1, 0, 0, 0]), rint(-1));
        assert!(f.coord(2).is_zero());
        assert!(f.coord(3).is_zero());
        assert_eq!(f.coord(0).terms().count(), 1);
        assert_eq!(f.coord(1).terms().count(), 1);
    }

    #[test]
    fn constants_are_regular_identity_is_not() {
        let c = QPoly::constant(&[rint(3), rint(-1), rint(0), rint(5)]);
        let report = check_regular(&c, &pt([1, 2, 3, 4]));
        assert!(report.regular);
        assert_eq!(report.system, [rint(0), rint(0), rint(0), rint(0)]);

        let x = QPoly::variable();
        let report = check_regular(&x, &pt([0, 0, 0, 0]));
        assert!(!report.regular);
        assert_eq!(report.system[0], rint(-2));
        assert_eq!(report.system, report.operator);
    }

    #[test]
    fn fueter_variable_is_regular_everywhere() {
        let (regular, residuals) = check_regular_everywhere(&QPoly::fueter_variable());
        assert!(regular);
        assert!(residuals.iter().all(|r| r.is_zero()));
        let (regular, _) = check_regular_everywhere(&QPoly::x_squared());
        assert!(!regular);
    }

    #[test]
    fn standard_route_agrees_with_system_route() {
        let f = QPoly::x_squared();
        let p = pt([1, 0, 0, 0]);
        let report = check_regular(&f, &p);
        let std_report = check_regular_via_standard(&f, &p).unwrap();
        assert_eq!(report.regular, std_report.regular);
        // residual = -2 * combination, coordinate by coordinate.
        for (r, c) in report.system.iter().zip(&std_report.combinations) {
            assert_eq!(r.clone(), rint(-2) * c.clone());
        }
        assert_eq!(std_report.combinations[0], rint(2));
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn symbolic_standard_components_match_pointwise() {
        let f = QPoly::x_cubed();
        let polys = standard_component_polynomials(&f).unwrap();
        let p = pt([2, -1, 1, 3]);
        let pointwise = check_regular_via_standard(&f, &p).unwrap().components;
        for k in 0..4 {
            for r in 0..4 {
                assert_eq!(polys[k][r].eval(&p), *pointwise.get(k, r), "({k},{r})");
            }
        }
        let combos = standard_combination_polynomials(&f).unwrap();
        let residuals = residual_polynomials(&f);
        for (res, combo) in residuals.iter().zip(&combos) {
            assert_eq!(res, &combo.scale(&rint(-2)));
        }
    }

    #[test]
    fn gateaux_of_fueter_variable() {
        let mut std = StandardComponents::zero(4);
        std.set(1, 0, rat(-1, 2));
        std.set(0, 1, rat(-1, 2));
        let dx = [rint(1), rint(0), rint(0), rint(0)];
        let direct = gateaux_differential(&std, &dx);
        assert_eq!(direct, [rint(0), rint(-1), rint(0), rint(0)]);
        let grouped = gateaux_differential_grouped(&std, &dx);
        assert_eq!(direct, grouped);
    }

    #[test]
    fn gateaux_single_component_sandwich() {
        let mut std = StandardComponents::zero(4);
        std.set(1, 1, rint(1));
        // i j i = j through the product table.
        let dx = [rint(0), rint(0), rint(1), rint(0)];
        assert_eq!(
            gateaux_differential(&std, &dx),
            [rint(0), rint(0), rint(1), rint(0)]
        );
    }

    #[test]
    fn grouped_form_is_identity_on_regular_components() {
        // Free components S[i][j], i >= 1; the first row is forced by the
        // vanishing combinations.
        let mut std = StandardComponents::zero(4);
        let values = [
            (1, 0, rat(1, 3)),
            (1, 1, rint(2)),
            (1, 2, rat(-1, 2)),
            (1, 3, rint(1)),
            (2, 0, rint(-1)),
            (2, 1, rat(3, 4)),
            (2, 2, rint(1)),
            (2, 3, rint(2)),
            (3, 0, rat(5, 7)),
            (3, 1, rint(-2)),
            (3, 2, rint(3)),
            (3, 3, rat(-2, 5)),
        ];
        for (k, r, v) in values {
            std.set(k, r, v);
        }
        let forced: Vec<Rat> = {
            let s = |k: usize, r: usize| std.get(k, r).clone();
            vec![
                rint(0) - s(1, 1) - s(2, 2) - s(3, 3),
                s(1, 0) + s(2, 3) - s(3, 2),
                rint(0) - s(1, 3) + s(2, 0) + s(3, 1),
                s(1, 2) - s(2, 1) + s(3, 0),
            ]
        };
        for (r, value) in forced.into_iter().enumerate() {
            std.set(0, r, value);
        }
        assert_eq!(
            standard_combinations(&std),
            [rint(0), rint(0), rint(0), rint(0)]
        );
        for dx in [
            pt([1, 0, 0, 0]),
            pt([0, 1, 0, 0]),
            pt([3, -2, 1, 5]),
            [rat(1, 2), rat(-1, 3), rint(2), rat(2, 7)],
        ] {
            assert_eq!(
                gateaux_differential(&std, &dx),
                gateaux_differential_grouped(&std, &dx)
            );
        }
    }

    #[test]
    fn cr_like_verdicts() {
        // Left multiplications satisfy both conditions everywhere.
        let a = [rint(2), rint(-1), rint(3), rint(1)];
        let left = QPoly::build(&[vec![a.clone(), unit()]]).unwrap();
        assert!(cr_like_everywhere(&left).holds());
        let right = QPoly::build(&[vec![unit(), a]]).unwrap();
        assert!(cr_like_everywhere(&right).holds());

        assert!(cr_like_everywhere(&QPoly::x_squared()).holds());

        // x^3 fails the diagonal condition at (1,0,1,0): 0 vs 2.
        let report = cr_like_at(&QPoly::x_cubed(), &pt([1, 0, 1, 0]));
        assert!(!report.diagonal_equal);
        assert_eq!(report.diagonal[0], rint(0));
        assert_eq!(report.diagonal[1], rint(2));

        // Conjugation fails: 1 vs -1.
        let report = cr_like_at(&QPoly::conjugation(), &pt([0, 0, 0, 0]));
        assert!(!report.diagonal_equal);
        assert_eq!(report.diagonal[0], rint(1));
        assert_eq!(report.diagonal[1], rint(-1));
        assert!(report.antisymmetric);
    }
}
