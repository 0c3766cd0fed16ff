//! Elimination, intersection, quotients and saturation.

use std::sync::Arc;

use crate::polycore::{Field, MonomialOrder, Polynomial, Ring};

use super::{GbConfig, GbError, Ideal};

/// `I ∩ k[x \ drop]`, via a block order with `drop` in front. The result
/// lives in the same ring and carries a basis when that ring is grevlex.
pub fn eliminate<F: Field>(ideal: &Ideal<F>, drop: &[usize], cfg: &GbConfig) -> Result<Ideal<F>, GbError> {
    let ring = ideal.ring();
    if drop.is_empty() {
        return ideal.groebner(cfg);
    }
    let block = MonomialOrder::block(ring.nvars(), drop);
    let big = ideal.groebner_in(block, cfg)?;
    let kept: Vec<Polynomial<F>> = big
        .basis()
        .unwrap()
        .iter()
        .filter(|g| g.terms().iter().all(|t| drop.iter().all(|&v| t.mon.exp(v) == 0)))
        .map(|g| g.reorder(ring))
        .collect();
    let mut out = Ideal::new(ring, kept)?;
    if *ring.order() == MonomialOrder::Grevlex {
        let mut b = out.gens.clone();
        b.sort_by(|a, c| ring.cmp(a.lm().unwrap(), c.lm().unwrap()));
        out.basis = Some(Arc::new(b));
    }
    Ok(out)
}

fn fresh_name<F: Field>(ring: &Ring<F>, stem: &str) -> String {
    let mut name = stem.to_string();
    let mut k = 0;
    while ring.index_of(&name).is_some() {
        k += 1;
        name = format!("{}{}", stem, k);
    }
    name
}

/// Appends one variable to the ring; returns the extended ring and its index.
fn extend<F: Field>(ring: &Arc<Ring<F>>, stem: &str) -> (Arc<Ring<F>>, usize) {
    let mut names = ring.names().to_vec();
    names.push(fresh_name(ring, stem));
    let n = names.len();
    (Ring::new(&names, MonomialOrder::block(n, &[n - 1]), ring.ctx().clone()), n - 1)
}

pub fn ideal_intersect<F: Field>(a: &Ideal<F>, b: &Ideal<F>, cfg: &GbConfig) -> Result<Ideal<F>, GbError> {
    let ring = a.ring();
    if !Ring::same(ring, b.ring()) {
        return Err(crate::polycore::PolyError::RingMismatch.into());
    }
    let (big, t) = extend(ring, "t");
    let map: Vec<usize> = (0..ring.nvars()).collect();
    let tv = big.var(t);
    let one_minus_t = &big.one() - &tv;
    let mut gens: Vec<Polynomial<F>> = a.gens().iter().map(|g| &tv * &g.remap(&big, &map)).collect();
    gens.extend(b.gens().iter().map(|g| &one_minus_t * &g.remap(&big, &map)));
    let elim = eliminate(&Ideal::new(&big, gens)?, &[t], cfg)?;
    let back: Vec<Polynomial<F>> = elim.gens().iter().map(|g| g.rename_into(ring)).collect::<Result<_, _>>()?;
    Ideal::new(ring, back)?.groebner(cfg)
}

/// `I : (g)`.
pub fn quotient_by<F: Field>(ideal: &Ideal<F>, g: &Polynomial<F>, cfg: &GbConfig) -> Result<Ideal<F>, GbError> {
    let ring = ideal.ring();
    if g.is_zero() {
        return Ok(Ideal::unit(ring));
    }
    if g.is_constant() {
        return ideal.groebner(cfg);
    }
    let principal = Ideal::new(ring, vec![g.clone()])?;
    let inter = ideal_intersect(ideal, &principal, cfg)?;
    let gens = inter.gens().iter().map(|h| h.div_exact(g)).collect::<Result<Vec<_>, _>>()?;
    Ideal::new(ring, gens)?.groebner(cfg)
}

/// `I : J`, as the intersection of the quotients by the generators of `J`.
pub fn ideal_quotient<F: Field>(ideal: &Ideal<F>, by: &Ideal<F>, cfg: &GbConfig) -> Result<Ideal<F>, GbError> {
    let mut acc: Option<Ideal<F>> = None;
    for g in by.gens() {
        let q = quotient_by(ideal, g, cfg)?;
        acc = Some(match acc {
            None => q,
            Some(prev) => ideal_intersect(&prev, &q, cfg)?,
        });
    }
    match acc {
        Some(q) => Ok(q),
        None => Ok(Ideal::unit(ideal.ring())),
    }
}

/// `I : J^∞` by iterated quotients until the chain stops growing.
pub fn saturate<F: Field>(ideal: &Ideal<F>, by: &Ideal<F>, cfg: &GbConfig) -> Result<Ideal<F>, GbError> {
    let mut cur = ideal.groebner(cfg)?;
    for _ in 0..cfg.max_saturation_steps {
        let next = ideal_quotient(&cur, by, cfg)?;
        if cur.contains_ideal(&next)? {
            return Ok(next);
        }
        cur = next;
    }
    Err(GbError::SaturationBudget(cfg.max_saturation_steps))
}
