//! Genus-12 Fano threefolds `V12` from planes of 2-forms, their fixed
//! divisors and affine equations of those divisors.

mod divisors;
pub mod fixtures;
mod interpolate;
mod plane;
mod v12;

use thiserror::Error;

use crate::exterior::ExteriorError;
use crate::grassmann::GrassmannError;
use crate::groebner::GbError;
use crate::polycore::PolyError;

pub use divisors::{divisor_affine_equation, divisor_table, DivisorKind, DivisorRecord, DivisorSpec, Selector};
pub use interpolate::{interpolate_in_d, DFamily};
pub use plane::{
    act_on_two_form, additive_plane, canonical_plane, cplus_matrix, cplus_matrix_at, divisor_frame_plane, modulus_tau,
    torus_plane, InvariantPlane, Symmetry,
};
pub use v12::{coordinate_weight, fixed_divisor_spectrum, linear_section, v12_ideal, V12};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MukaiError {
    #[error("{0} is not representable in the coefficient field")]
    NotRepresentable(String),
    #[error("the plane is not torus invariant")]
    NotTorusInvariant,
    #[error("a coefficient entering the modulus vanishes")]
    ZeroCoefficient,
    #[error("linear section has rank {found}, expected {expected}")]
    RankDeficient { expected: usize, found: usize },
    #[error("no divisor item {0}")]
    UnknownItem(usize),
    #[error("coordinate {0} is not free on the linear section")]
    NotFree(String),
    #[error("elimination ideal has {0} generators, expected one")]
    NotPrincipal(usize),
    #[error("item {0} needs the pencil parameter b")]
    MissingPencil(usize),
    #[error("need at least {need} admissible samples, got {got}")]
    TooFewSamples { need: usize, got: usize },
    #[error("sampled equations have different monomial supports")]
    InconsistentSupport,
    #[error("interpolated coefficients disagree with the held-out sample d = {0}")]
    ValidationMismatch(String),
    #[error(transparent)]
    Gb(#[from] GbError),
    #[error(transparent)]
    Grassmann(#[from] GrassmannError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl MukaiError {
    pub fn is_budget(&self) -> bool {
        matches!(self, MukaiError::Gb(e) if e.is_budget())
    }
}
