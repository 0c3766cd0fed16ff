use std::sync::Arc;

use num_rational::BigRational;

use crate::polycore::{format_rational, rat, Field, Monomial, MonomialOrder, Polynomial, Ring, Term};

use super::MukaiError;

/// Highest degree in `d` allowed for a numerator.
const MAX_DEGREE: usize = 8;
const HELD_OUT: usize = 2;
const MIN_SAMPLES: usize = 10;

/// An equation whose coefficients are `q(d) / (d + 1)`, stored as the
/// numerator `(d + 1) f` in a ring whose first variable is `d`.
#[derive(Clone, Debug)]
pub struct DFamily<F: Field> {
    pub numerator: Polynomial<F>,
    /// The denominator as a polynomial in `d` alone, in the same ring.
    pub denominator: Polynomial<F>,
}

impl<F: Field> DFamily<F> {
    /// The coefficient of a target monomial, as `q(d)` over the denominator.
    pub fn coefficient(&self, target: &Monomial) -> Polynomial<F> {
        let ring = self.numerator.ring();
        let terms = self
            .numerator
            .terms()
            .iter()
            .filter(|t| (1..ring.nvars()).all(|v| t.mon.exp(v) == target.exp(v - 1)))
            .map(|t| {
                let mut e = vec![0u16; ring.nvars()];
                e[0] = t.mon.exp(0);
                Term { coeff: t.coeff.clone(), mon: Monomial::from_exponents(&e) }
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// The family at a particular `d`, in the ring of the sampled equations.
    pub fn at(&self, d: &F, target: &Arc<Ring<F>>) -> Option<Polynomial<F>> {
        let ctx = target.ctx();
        let mut pt = vec![d.clone()];
        pt.extend((1..self.numerator.ring().nvars()).map(|_| F::zero(ctx)));
        let inv = self.denominator.evaluate(&pt).inv()?;
        let mut images = vec![target.constant(d.clone())];
        images.extend((0..target.nvars()).map(|v| target.var(v)));
        Some(self.numerator.substitute(target, &images).scale(&inv))
    }
}

/// Newton interpolation through `(xs[k], ys[k])`, returned low degree first.
fn newton<F: Field>(xs: &[F], ys: &[F], ctx: &F::Ctx) -> Vec<F> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = dd[i].sub(&dd[i - 1]).div(&xs[i].sub(&xs[i - j])).expect("distinct nodes");
        }
    }
    // expand the Newton form into the monomial basis
    let mut coeffs = vec![F::zero(ctx); n];
    for i in (0..n).rev() {
        // coeffs = coeffs * (x - xs[i]) + dd[i]
        let mut next = vec![F::zero(ctx); n];
        for k in 0..n {
            if coeffs[k].is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] = next[k + 1].add(&coeffs[k]);
            }
            next[k] = next[k].sub(&coeffs[k].mul(&xs[i]));
        }
        next[0] = next[0].add(&dd[i]);
        coeffs = next;
    }
    coeffs
}

fn horner<F: Field>(c: &[F], x: &F, ctx: &F::Ctx) -> F {
    c.iter().rev().fold(F::zero(ctx), |acc, a| acc.mul(x).add(a))
}

/// Reconstructs an equation depending on `d` from its values at `samples`.
///
/// Each sample is normalized to leading coefficient one; coefficients are
/// then fitted as `q(d)/(d + 1)` through all but two samples (at most nine,
/// so `deg q <= 8`) and checked against the next two. Ten samples bound the
/// degree by 7.
pub fn interpolate_in_d<F: Field>(
    samples: &[BigRational],
    mut compute: impl FnMut(&BigRational) -> Result<Polynomial<F>, MukaiError>,
) -> Result<DFamily<F>, MukaiError> {
    let bad = [rat(-1, 1), rat(0, 1), rat(1, 1)];
    let good: Vec<&BigRational> = samples.iter().filter(|d| !bad.contains(d)).collect();
    if good.len() < MIN_SAMPLES {
        return Err(MukaiError::TooFewSamples { need: MIN_SAMPLES, got: good.len() });
    }
    let fit = (good.len() - HELD_OUT).min(MAX_DEGREE + 1);
    let need = fit + HELD_OUT;
    let good = &good[..need];
    let mut values = Vec::with_capacity(need);
    for d in good {
        values.push(compute(d)?.monic());
    }
    let ring = values[0].ring().clone();
    let ctx = ring.ctx().clone();
    let support: Vec<Monomial> = values[0].terms().iter().map(|t| t.mon.clone()).collect();
    if values.iter().any(|v| v.terms().iter().map(|t| &t.mon).ne(support.iter())) {
        return Err(MukaiError::InconsistentSupport);
    }
    let ds: Vec<F> = good
        .iter()
        .map(|d| F::from_rational(&ctx, d).ok_or_else(|| MukaiError::NotRepresentable(format_rational(d))))
        .collect::<Result<_, _>>()?;
    let one = F::one(&ctx);

    let mut names = vec!["d".to_string()];
    names.extend(ring.names().iter().cloned());
    let big = Ring::new(&names, MonomialOrder::Grevlex, ctx.clone());
    let mut terms = Vec::new();
    for (k, mon) in support.iter().enumerate() {
        let ys: Vec<F> = values.iter().zip(&ds).map(|(v, d)| v.terms()[k].coeff.mul(&d.add(&one))).collect();
        let q = newton(&ds[..fit], &ys[..fit], &ctx);
        for h in fit..need {
            if horner(&q, &ds[h], &ctx) != ys[h] {
                return Err(MukaiError::ValidationMismatch(format_rational(good[h])));
            }
        }
        for (e, c) in q.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut exps = vec![e as u16];
            exps.extend((0..ring.nvars()).map(|v| mon.exp(v)));
            terms.push(Term { coeff: c, mon: Monomial::from_exponents(&exps) });
        }
    }
    let numerator = Polynomial::from_terms(&big, terms);
    let denominator = &big.var(0) + &big.one();
    Ok(DFamily { numerator, denominator })
}
