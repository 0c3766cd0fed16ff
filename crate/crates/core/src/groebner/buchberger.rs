//! Buchberger's algorithm with the Gebauer–Möller pair criteria.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::polycore::{merge_scaled, Field, Monomial, Polynomial, Ring, Term};

use super::strategy::PairInfo;
use super::{GbConfig, GbError};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_processed: u64,
    pub pairs_discarded: u64,
    pub basis_size: usize,
}

/// Lookup structure for "first reducer whose leading monomial divides m".
struct Reducers<'a, F: Field> {
    polys: Vec<&'a Polynomial<F>>,
    masks: Vec<u64>,
}

impl<'a, F: Field> Reducers<'a, F> {
    fn new(polys: Vec<&'a Polynomial<F>>) -> Self {
        let masks = polys.iter().map(|p| p.lm().unwrap().support_mask()).collect();
        Reducers { polys, masks }
    }

    fn find(&self, m: &Monomial) -> Option<&'a Polynomial<F>> {
        let mm = m.support_mask();
        for (k, p) in self.polys.iter().enumerate() {
            if self.masks[k] & !mm == 0 && p.lm().unwrap().divides(m) {
                return Some(p);
            }
        }
        None
    }
}

/// Full reduction of `f` by a list of reducers (any leading coefficients).
fn reduce_by<F: Field>(f: &Polynomial<F>, reducers: &Reducers<'_, F>) -> Polynomial<F> {
    let ring = f.ring();
    let order = ring.order();
    let mut live: Vec<Term<F>> = f.terms().to_vec();
    let mut start = 0;
    let mut done: Vec<Term<F>> = Vec::new();
    while start < live.len() {
        let lead = &live[start];
        match reducers.find(&lead.mon) {
            Some(g) => {
                let gl = g.leading_term().unwrap();
                let m = gl.mon.quotient_of(&lead.mon);
                let c = lead.coeff.div(&gl.coeff).unwrap().neg();
                live = merge_scaled(order, &live[start + 1..], &g.terms()[1..], &c, Some(&m));
                start = 0;
            }
            None => {
                done.push(live[start].clone());
                start += 1;
            }
        }
    }
    Polynomial::from_terms(ring, done)
}

/// Remainder of `f` under full reduction by `basis`. For a Gröbner basis
/// this is the unique normal form.
pub fn reduce<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
    let reducers = Reducers::new(basis.iter().filter(|g| !g.is_zero()).collect());
    reduce_by(f, &reducers)
}

fn spoly<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, lcm: &Monomial) -> Polynomial<F> {
    let (lf, lg) = (f.leading_term().unwrap(), g.leading_term().unwrap());
    let mf = lf.mon.quotient_of(lcm);
    let mg = lg.mon.quotient_of(lcm);
    let a = f.mul_term(&lf.coeff.inv().unwrap(), &mf);
    a.add_scaled(g, &lg.coeff.inv().unwrap().neg(), Some(&mg))
}

/// Checks that every S-polynomial of the basis reduces to zero.
pub fn check_certificate<F: Field>(basis: &[Polynomial<F>]) -> bool {
    let reducers = Reducers::new(basis.iter().collect());
    for j in 0..basis.len() {
        for i in 0..j {
            let (a, b) = (basis[i].lm().unwrap(), basis[j].lm().unwrap());
            if a.is_coprime(b) {
                continue;
            }
            let s = spoly(&basis[i], &basis[j], &a.lcm(b));
            if !reduce_by(&s, &reducers).is_zero() {
                return false;
            }
        }
    }
    true
}

type PairKey = (u32, u32, usize, usize);

struct Engine<'c, F: Field> {
    ring: Arc<Ring<F>>,
    cfg: &'c GbConfig,
    polys: Vec<Polynomial<F>>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: BTreeMap<PairKey, Monomial>,
    stats: GbStats,
}

impl<'c, F: Field> Engine<'c, F> {
    fn key(&self, i: usize, j: usize, lcm: &Monomial) -> PairKey {
        let si = self.sugar[i] - self.polys[i].lm().unwrap().degree();
        let sj = self.sugar[j] - self.polys[j].lm().unwrap().degree();
        let info = PairInfo { lcm_degree: lcm.degree(), sugar: si.max(sj) + lcm.degree() };
        (self.cfg.strategy.rank(&info), lcm.degree(), j, i)
    }

    fn active_reducers(&self) -> Reducers<'_, F> {
        Reducers::new((0..self.polys.len()).filter(|&k| self.active[k]).map(|k| &self.polys[k]).collect())
    }

    /// Adds `h` (monic, reduced) and updates pairs by Gebauer–Möller.
    fn insert(&mut self, h: Polynomial<F>, sugar: u32) {
        let hi = self.polys.len();
        let lmh = h.lm().unwrap().clone();
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(true);

        let cands: Vec<(usize, Monomial, bool)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lg = self.polys[g].lm().unwrap();
                (g, lmh.lcm(lg), lmh.is_coprime(lg))
            })
            .collect();
        // chain criterion among the new pairs: keep (h,g) unless another
        // surviving new pair has an lcm dividing its lcm
        let mut alive = vec![true; cands.len()];
        for k in 0..cands.len() {
            if cands[k].2 {
                continue;
            }
            let dominated = (0..cands.len()).any(|l| l != k && alive[l] && cands[l].1.divides(&cands[k].1));
            if dominated {
                alive[k] = false;
            }
        }
        let before = self.pairs.len();
        let lmh_ref = &lmh;
        let polys = &self.polys;
        self.pairs.retain(|&(_, _, j, i), lcm| {
            if !lmh_ref.divides(lcm) {
                return true;
            }
            let li = polys[i].lm().unwrap().lcm(lmh_ref);
            let lj = polys[j].lm().unwrap().lcm(lmh_ref);
            li == *lcm || lj == *lcm
        });
        self.stats.pairs_discarded += (before - self.pairs.len()) as u64;
        for (k, (g, lcm, coprime)) in cands.into_iter().enumerate() {
            if alive[k] && !coprime {
                let key = self.key(g, hi, &lcm);
                self.pairs.insert(key, lcm);
            } else {
                self.stats.pairs_discarded += 1;
            }
        }
        for g in 0..hi {
            if self.active[g] && lmh.divides(self.polys[g].lm().unwrap()) {
                self.active[g] = false;
            }
        }
    }

    fn run(&mut self, gens: &[Polynomial<F>]) -> Result<(), GbError> {
        let mut input: Vec<Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        input.sort_by(|a, b| self.ring.cmp(a.lm().unwrap(), b.lm().unwrap()));
        for g in input {
            let r = reduce_by(&g, &self.active_reducers());
            if r.is_zero() {
                continue;
            }
            let deg = g.degree().unwrap().max(r.degree().unwrap());
            let is_unit = r.is_constant();
            self.insert(r.monic(), deg);
            if is_unit {
                return Ok(());
            }
        }
        while let Some((key, lcm)) = self.pairs.pop_first() {
            let (_, deg, j, i) = key;
            if let Some(cap) = self.cfg.max_degree {
                if deg > cap {
                    return Err(GbError::DegreeBudget { cap, found: deg });
                }
            }
            if let Some(limit) = self.cfg.max_steps {
                if self.stats.pairs_processed >= limit {
                    return Err(GbError::StepBudget(limit));
                }
            }
            self.stats.pairs_processed += 1;
            let s = spoly(&self.polys[i], &self.polys[j], &lcm);
            let r = reduce_by(&s, &self.active_reducers());
            if r.is_zero() {
                continue;
            }
            let si = self.sugar[i] - self.polys[i].lm().unwrap().degree();
            let sj = self.sugar[j] - self.polys[j].lm().unwrap().degree();
            let sugar = (si.max(sj) + lcm.degree()).max(r.degree().unwrap());
            let is_unit = r.is_constant();
            self.insert(r.monic(), sugar);
            if is_unit {
                return Ok(());
            }
        }
        Ok(())
    }

    fn finish(self) -> (Vec<Polynomial<F>>, GbStats) {
        let act: Vec<&Polynomial<F>> =
            (0..self.polys.len()).filter(|&k| self.active[k]).map(|k| &self.polys[k]).collect();
        if act.iter().any(|p| p.is_constant()) {
            let stats = GbStats { basis_size: 1, ..self.stats };
            return (vec![self.ring.one()], stats);
        }
        let out = interreduce(&self.ring, act);
        let stats = GbStats { basis_size: out.len(), ..self.stats };
        (out, stats)
    }
}

/// Minimal, tail-reduced, monic and sorted by ascending leading monomial.
fn interreduce<F: Field>(ring: &Arc<Ring<F>>, polys: Vec<&Polynomial<F>>) -> Vec<Polynomial<F>> {
    let minimal: Vec<&Polynomial<F>> = polys
        .iter()
        .enumerate()
        .filter(|(k, p)| {
            let lm = p.lm().unwrap();
            !polys.iter().enumerate().any(|(l, q)| {
                let lq = q.lm().unwrap();
                l != *k && lq.divides(lm) && (lq != lm || l < *k)
            })
        })
        .map(|(_, p)| *p)
        .collect();
    let mut out: Vec<Polynomial<F>> = (0..minimal.len())
        .map(|k| {
            let others = Reducers::new(minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, p)| *p).collect());
            reduce_by(minimal[k], &others).monic()
        })
        .collect();
    out.sort_by(|a, b| ring.cmp(a.lm().unwrap(), b.lm().unwrap()));
    out
}

/// Reduced Gröbner basis of `gens` for the order of `ring`.
pub(crate) fn groebner_basis<F: Field>(
    ring: &Arc<Ring<F>>,
    gens: &[Polynomial<F>],
    cfg: &GbConfig,
) -> Result<(Vec<Polynomial<F>>, GbStats), GbError> {
    let nonzero: Vec<&Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok((vec![], GbStats::default()));
    }
    let (basis, stats) = if cfg.trust_input {
        let monic: Vec<Polynomial<F>> = nonzero.iter().map(|g| g.monic()).collect();
        let b = interreduce(ring, monic.iter().collect());
        let n = b.len();
        (b, GbStats { basis_size: n, ..GbStats::default() })
    } else {
        let mut engine = Engine {
            ring: ring.clone(),
            cfg,
            polys: vec![],
            sugar: vec![],
            active: vec![],
            pairs: BTreeMap::new(),
            stats: GbStats::default(),
        };
        engine.run(gens)?;
        engine.finish()
    };
    if cfg.certify && !check_certificate(&basis) {
        return Err(GbError::CertificateFailed);
    }
    Ok((basis, stats))
}
