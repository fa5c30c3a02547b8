//! Commutative polynomials in the four coordinates `x0..x3`.
//!
//! Terms map an exponent quadruple to a nonzero coefficient; a zero
//! coefficient is never stored, so `is_zero` and equality are structural.

use std::collections::BTreeMap;
use std::fmt;

use crate::Scalar;

pub const N_VARS: usize = 4;

/// Exponents of one monomial, per variable.
pub type Exponents = [u8; N_VARS];

#[derive(Debug, Clone, PartialEq)]
pub struct CoordPolynomial<T> {
    terms: BTreeMap<Exponents, T>,
}

impl<T: Scalar> CoordPolynomial<T> {
    pub fn zero() -> Self {
        CoordPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(value: T) -> Self {
        let mut p = Self::zero();
        p.add_term([0; N_VARS], value);
        p
    }

    /// The coordinate variable `x{index}`.
    pub fn var(index: usize) -> Self {
        assert!(index < N_VARS, "variable index out of range");
        let mut exps = [0; N_VARS];
        exps[index] = 1;
        let mut p = Self::zero();
        p.add_term(exps, T::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &Exponents) -> T {
        self.terms.get(exps).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, exps: Exponents, value: T) {
        if value.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            Some(existing) => {
                let sum = existing + value;
                if !sum.is_zero() {
                    self.terms.insert(exps, sum);
                }
            }
            None => {
                self.terms.insert(exps, value);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (exps, coeff) in &rhs.terms {
            out.add_term(*exps, coeff.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        CoordPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, T::zero() - c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, factor: &T) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        CoordPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c.clone() * factor.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut exps = *ea;
                for (x, y) in exps.iter_mut().zip(eb) {
                    *x += y;
                }
                out.add_term(exps, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Exact partial derivative with respect to `x{var}`.
    pub fn partial(&self, var: usize) -> Self {
        assert!(var < N_VARS, "variable index out of range");
        let mut out = Self::zero();
        for (exps, coeff) in &self.terms {
            if exps[var] == 0 {
                continue;
            }
            let mut multiplier = T::zero();
            for _ in 0..exps[var] {
                multiplier = multiplier + T::one();
            }
            let mut lowered = *exps;
            lowered[var] -= 1;
            out.add_term(lowered, coeff.clone() * multiplier);
        }
        out
    }

    pub fn eval(&self, point: &[T; N_VARS]) -> T {
        let mut acc = T::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (value, &exp) in point.iter().zip(exps) {
                for _ in 0..exp {
                    term = term * value.clone();
                }
            }
            acc = acc + term;
        }
        acc
    }
}

impl<T: Scalar> fmt::Display for CoordPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (exps, coeff)) in self.terms.iter().enumerate() {
            let coeff = if idx > 0 {
                write!(f, "{}", if coeff.is_negative() { " - " } else { " + " })?;
                coeff.abs()
            } else {
                coeff.clone()
            };
            let is_constant_term = exps.iter().all(|&e| e == 0);
            if is_constant_term || !coeff.abs().is_one() {
                write!(f, "{coeff}")?;
                if !is_constant_term {
                    write!(f, "*")?;
                }
            } else if coeff.is_negative() {
                write!(f, "-")?;
            }
            let mut first = true;
            for (var, &exp) in exps.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "x{var}")?;
                if exp > 1 {
                    write!(f, "^{exp}")?;
                }
            }
        }
        Ok(())
    }
}
