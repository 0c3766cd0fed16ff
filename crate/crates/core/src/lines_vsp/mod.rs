//! Plane quartics of lines and their splitting into conics.

use thiserror::Error;

use crate::groebner::GbError;
use crate::mukai::MukaiError;
use crate::polycore::{Field, Polynomial, QuadExt};

mod conics;
mod quartic;
pub mod univariate;

pub use conics::{classify, conic_discriminant, conic_pair_split, is_irreducible_conic, sqrt_poly, tangency_profile};
pub use quartic::{gamma_quartic, lines_quartic, pfaffian, quartic_ring, skew_matrix};

#[derive(Debug, Error)]
pub enum LinesError {
    #[error("expected a nonzero homogeneous quartic in a, b, c, got {0}")]
    NotQuartic(String),
    #[error("input is not a conic")]
    NotConic,
    #[error("conic is reducible")]
    ReducibleConic,
    #[error("the two conics coincide")]
    SameConic,
    #[error("splitting undetermined: {0}")]
    Undetermined(String),
    #[error(transparent)]
    Mukai(#[from] MukaiError),
    #[error(transparent)]
    Gb(#[from] GbError),
}

impl LinesError {
    pub fn is_budget(&self) -> bool {
        match self {
            LinesError::Gb(e) => e.is_budget(),
            LinesError::Mukai(e) => e.is_budget(),
            _ => false,
        }
    }
}

/// A ternary quartic in variables `a, b, c`, stored in canonical scaling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneQuartic<F: Field> {
    pub poly: Polynomial<F>,
}

impl<F: Field> PlaneQuartic<F> {
    pub fn new(p: Polynomial<F>) -> Result<Self, LinesError> {
        let names: Vec<&str> = p.ring().names().iter().map(|s| s.as_str()).collect();
        if names != ["a", "b", "c"] || p.is_zero() || !p.is_homogeneous() || p.degree() != Some(4) {
            return Err(LinesError::NotQuartic(p.to_string()));
        }
        Ok(PlaneQuartic { poly: p.canonical() })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConicClass {
    DoubleConic,
    TangentAtTwoPoints,
    TangentAtOnePoint,
    TransverseOrOther,
    Irreducible,
}

impl ConicClass {
    pub fn name(&self) -> &'static str {
        match self {
            ConicClass::DoubleConic => "DoubleConic",
            ConicClass::TangentAtTwoPoints => "TangentAtTwoPoints",
            ConicClass::TangentAtOnePoint => "TangentAtOnePoint",
            ConicClass::TransverseOrOther => "TransverseOrOther",
            ConicClass::Irreducible => "Irreducible",
        }
    }
}

#[derive(Clone, Debug)]
pub enum ConicFactors<F: Field> {
    Base(Polynomial<F>, Polynomial<F>),
    /// Factors with coefficients in `F(sqrt(m))`.
    Extension {
        m: F,
        factors: (Polynomial<QuadExt<F>>, Polynomial<QuadExt<F>>),
    },
}

impl<F: Field> ConicFactors<F> {
    pub fn to_strings(&self) -> (String, String) {
        match self {
            ConicFactors::Base(a, b) => (a.to_string(), b.to_string()),
            ConicFactors::Extension { factors: (a, b), .. } => (a.to_string(), b.to_string()),
        }
    }

    /// The radicand of the extension, if one was needed.
    pub fn extension(&self) -> Option<&F> {
        match self {
            ConicFactors::Base(..) => None,
            ConicFactors::Extension { m, .. } => Some(m),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConicPairReport<F: Field> {
    pub class: ConicClass,
    pub factors: Option<ConicFactors<F>>,
    /// Local intersection multiplicities of two distinct conics.
    pub profile: Vec<u32>,
}

#[cfg(test)]
mod tests;
