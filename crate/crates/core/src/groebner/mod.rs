//! Gröbner bases and the ideal operations built on them.

mod buchberger;
mod hilbert;
mod ops;
mod strategy;

use std::sync::Arc;

use thiserror::Error;

use crate::polycore::{Field, MonomialOrder, PolyError, Polynomial, Ring};

pub use buchberger::{check_certificate, reduce, GbStats};
pub use hilbert::{hilbert_dim_degree, HilbertReport};
pub use ops::{eliminate, ideal_intersect, ideal_quotient, quotient_by, saturate};
pub use strategy::{strategy_by_name, Normal, PairInfo, SelectionStrategy, StrategyRegistry, Sugar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GbError {
    #[error("step budget of {0} S-pair reductions exhausted")]
    StepBudget(u64),
    #[error("degree budget exceeded: a pair of degree {found} exceeds the cap {cap}")]
    DegreeBudget { cap: u32, found: u32 },
    #[error("saturation did not stabilize within {0} quotient steps")]
    SaturationBudget(usize),
    #[error("no Gröbner basis cached for this ideal")]
    MissingBasis,
    #[error("ideal has a non-homogeneous generator")]
    NonHomogeneous,
    #[error("unknown selection strategy `{0}`")]
    UnknownStrategy(String),
    #[error("Buchberger certificate failed: an S-polynomial has nonzero remainder")]
    CertificateFailed,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl GbError {
    /// Whether the failure is a resource limit rather than a mathematical error.
    pub fn is_budget(&self) -> bool {
        matches!(self, GbError::StepBudget(_) | GbError::DegreeBudget { .. } | GbError::SaturationBudget(_))
    }
}

/// Knobs for a Gröbner computation.
#[derive(Clone, Debug)]
pub struct GbConfig {
    pub max_steps: Option<u64>,
    pub max_degree: Option<u32>,
    pub max_saturation_steps: usize,
    pub strategy: Arc<dyn SelectionStrategy>,
    /// Accept the generators as a Gröbner basis after inter-reduction.
    pub trust_input: bool,
    /// Verify the Buchberger criterion on every computed basis.
    pub certify: bool,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            max_steps: None,
            max_degree: None,
            max_saturation_steps: 64,
            strategy: Arc::new(Normal),
            trust_input: false,
            certify: cfg!(debug_assertions),
        }
    }
}

impl GbConfig {
    pub fn with_strategy(mut self, name: &str) -> Result<Self, GbError> {
        self.strategy = strategy_by_name(name).ok_or_else(|| GbError::UnknownStrategy(name.to_string()))?;
        Ok(self)
    }

    pub fn with_max_steps(mut self, steps: Option<u64>) -> Self {
        self.max_steps = steps;
        self
    }

    pub fn trusted(mut self, yes: bool) -> Self {
        self.trust_input = yes;
        self
    }

    pub fn certified(mut self, yes: bool) -> Self {
        self.certify = yes;
        self
    }
}

/// Generators in one ring, with an optional cached reduced Gröbner basis
/// for the ring's own order.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal<F: Field> {
    ring: Arc<Ring<F>>,
    gens: Vec<Polynomial<F>>,
    basis: Option<Arc<Vec<Polynomial<F>>>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Arc<Ring<F>>, gens: Vec<Polynomial<F>>) -> Result<Self, GbError> {
        if gens.iter().any(|g| !Ring::same(g.ring(), ring)) {
            return Err(PolyError::RingMismatch.into());
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, basis: None })
    }

    pub fn zero(ring: &Arc<Ring<F>>) -> Self {
        Ideal { ring: ring.clone(), gens: vec![], basis: Some(Arc::new(vec![])) }
    }

    pub fn unit(ring: &Arc<Ring<F>>) -> Self {
        Ideal { ring: ring.clone(), gens: vec![ring.one()], basis: Some(Arc::new(vec![ring.one()])) }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn basis(&self) -> Option<&[Polynomial<F>]> {
        self.basis.as_deref().map(|b| b.as_slice())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Computes (or reuses) the reduced basis for the ring's order.
    pub fn groebner(&self, cfg: &GbConfig) -> Result<Self, GbError> {
        if self.basis.is_some() {
            return Ok(self.clone());
        }
        let (basis, _) = buchberger::groebner_basis(&self.ring, &self.gens, cfg)?;
        Ok(Ideal { ring: self.ring.clone(), gens: self.gens.clone(), basis: Some(Arc::new(basis)) })
    }

    /// Moves the ideal to `order` and computes its reduced basis there.
    pub fn groebner_in(&self, order: MonomialOrder, cfg: &GbConfig) -> Result<Self, GbError> {
        if *self.ring.order() == order {
            return self.groebner(cfg);
        }
        let ring = self.ring.with_order(order);
        let gens = self.gens.iter().map(|g| g.reorder(&ring)).collect();
        Ideal { ring, gens, basis: None }.groebner(cfg)
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>, GbError> {
        let basis = self.basis.as_ref().ok_or(GbError::MissingBasis)?;
        if !Ring::same(f.ring(), &self.ring) {
            return Err(PolyError::RingMismatch.into());
        }
        Ok(reduce(f, basis))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool, GbError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `other ⊆ self`; needs a basis on `self`.
    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool, GbError> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality by mutual inclusion; both sides need bases.
    pub fn same_ideal(&self, other: &Ideal<F>) -> Result<bool, GbError> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_unit(&self) -> Result<bool, GbError> {
        let b = self.basis().ok_or(GbError::MissingBasis)?;
        Ok(b.iter().any(|g| g.is_constant() && !g.is_zero()))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Sum of ideals.
    pub fn plus(&self, other: &Ideal<F>) -> Result<Self, GbError> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with_gens(&self, extra: impl IntoIterator<Item = Polynomial<F>>) -> Result<Self, GbError> {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Ideal::new(&self.ring, gens)
    }
}
