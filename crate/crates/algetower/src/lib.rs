//! Exact engine for finite-dimensional algebras given by structural constants.
//!
//! An algebra is stored as a rank-3 table `C[k][i][j]`: the coefficient of the
//! basis vector `e_k` in the product `e_i * e_j`. On top of that single
//! representation the crate builds
//!
//! * quaternion-type algebras `E(F, a, b)` with conjugate, norm, inverse and
//!   vector rotation ([`algebra`]),
//! * tensor products and towers of algebras with the index bookkeeping that
//!   relates their bases ([`construct`]),
//! * commutant solving: the space of matrices commuting with a set of
//!   multiplication operators, rendered as Cauchy-Riemann-style relations
//!   between matrix entries ([`linmap`]),
//! * the two-sided "standard component" representation of a linear map and
//!   its exact inverse ([`linmap`]),
//! * quaternion polynomial functions with symbolic Jacobians and Fueter
//!   regularity tests ([`regular`]).
//!
//! All core arithmetic is exact: the scalar is an arbitrary-precision
//! rational. The numeric kernels are generic over [`Scalar`], so the same
//! code also runs over `f64` where a floating-point view is wanted (the
//! rotation-angle check is the only such place).
//!
//! ```
//! use algetower::linmap::{left_regular_generators, solve_commutant};
//! use algetower::{rint, Algebra};
//!
//! let h = Algebra::h();
//! let i = h.basis_element(1);
//! let j = h.basis_element(2);
//! assert_eq!(i.mul(&j).unwrap(), h.basis_element(3));
//!
//! // The maps commuting with every left multiplication are exactly the
//! // right multiplications; their entries obey four sign chains.
//! let commutant = solve_commutant(&h, &left_regular_generators(&h)).unwrap();
//! assert_eq!(commutant.dimension, 4);
//! assert_eq!(
//!     commutant.relations.render()[1],
//!     "f[0][1] = -f[1][0] = -f[2][3] = f[3][2]"
//! );
//! ```

use std::fmt;

use num_traits::{Num, Signed};

pub mod algebra;
pub mod construct;
pub mod elim;
pub mod formats;
pub mod linmap;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod regular;
pub mod suite;

/// Field-like scalar the numeric kernels are generic over.
///
/// `BigRational` is the exact instantiation used everywhere by default;
/// `f64` satisfies the same bounds for the floating-point view.
pub trait Scalar: Num + Signed + Clone + PartialEq + fmt::Debug + fmt::Display {}

impl<T> Scalar for T where T: Num + Signed + Clone + PartialEq + fmt::Debug + fmt::Display {}

/// The exact scalar: arbitrary-precision rational in canonical form.
pub type Rat = num_rational::BigRational;

/// Algebra table over the exact scalar.
pub type Algebra = algebra::AlgebraTable<Rat>;

/// Element of an exact algebra.
pub type Element<'a> = algebra::AlgElement<'a, Rat>;

/// Square coordinate matrix over the exact scalar.
pub type RatMatrix = matrix::Matrix<Rat>;

/// Standard components (two-sided multiplication coordinates) over the exact scalar.
pub type RatComponents = linmap::StandardComponents<Rat>;

/// Quaternion polynomial function over the exact scalar.
pub type QPolynomial = regular::QuaternionPolynomial<Rat>;

/// Shorthand for building an exact rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}

/// Shorthand for an integer as an exact rational.
pub fn rint(num: i64) -> Rat {
    Rat::from_integer(num.into())
}
