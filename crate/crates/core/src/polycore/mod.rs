//! Scalars, monomials and sparse multivariate polynomials.

mod field;
mod monomial;
mod parse;
mod polynomial;

pub use field::{format_rational, is_prime, parse_rational, rat, Domain, Field, Fp, QuadExt};
pub use monomial::{Exponents, Monomial, MonomialOrder};
pub use parse::{parse_fraction, parse_poly, parse_poly_with};
pub use polynomial::{associate_factor, Polynomial, Ring, Term};

pub(crate) use polynomial::merge_scaled;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("undeclared variable `{0}`")]
    UnknownVariable(String),
    #[error("division by a non-unit")]
    NonUnitDivision,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("value excluded for `{0}`: a denominator vanishes")]
    ExcludedValue(String),
}

/// Minimal ring interface used for coefficients of exterior forms.
pub trait CoeffRing: Clone + PartialEq + std::fmt::Debug {
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// The zero element of the same ring as `self`.
    fn zero_like(&self) -> Self;
}

impl<T: Field> CoeffRing for T {
    fn add(&self, rhs: &Self) -> Self {
        Field::add(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Field::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Field::neg(self)
    }
    fn is_zero(&self) -> bool {
        Field::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        T::zero(&self.ctx())
    }
}

impl<F: Field> CoeffRing for Polynomial<F> {
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        self.ring().zero()
    }
}
