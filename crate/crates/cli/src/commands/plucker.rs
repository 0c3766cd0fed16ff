use fanocalc_core::grassmann::pluecker_ideal;
use fanocalc_core::groebner::hilbert_dim_degree;
use fanocalc_core::polycore::Field;
use serde_json::json;

use super::over_field;
use crate::{Assertion, CliError, Command, Outcome, RunConfig};

/// Above this many coordinates the Hilbert series is not attempted.
const HILBERT_LIMIT: usize = 35;

pub struct Plucker;

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of independent quadrics: all quadratic monomials minus the
/// dimension of the degree-two part of the coordinate ring, which is the
/// Weyl module of the k × 2 rectangle (hook content formula).
fn quadric_count(k: usize, n: usize) -> u128 {
    let coords = binomial(n as u128, k as u128);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        for j in 0..2 {
            num *= (n + j - i) as u128;
            den *= ((k - i) + (2 - j) - 1) as u128;
        }
    }
    binomial(coords + 1, 2) - num / den
}

/// Degree of `G(k, n)` by the hook length formula on the k × (n - k) box.
fn degree_formula(k: usize, n: usize) -> u128 {
    let m = n - k;
    let num: u128 = (1..=(k * m) as u128).product();
    let mut hooks: u128 = 1;
    for i in 0..k {
        for j in 0..m {
            hooks *= ((k - i) + (m - j) - 1) as u128;
        }
    }
    num / hooks
}

fn compute<F: Field>(cfg: &RunConfig, ctx: F::Ctx) -> Result<Outcome, CliError> {
    let (k, n) = (cfg.k, cfg.n);
    let g = pluecker_ideal::<F>(k, n, ctx)?;
    let coords = g.coords.len();
    let gens = g.ideal.gens().len();
    let mut assertions = vec![Assertion::eq("quadric count", quadric_count(k, n), gens)];
    let mut results = json!({ "k": k, "n": n, "coordinates": coords, "generators": gens });
    if coords <= HILBERT_LIMIT {
        let h = hilbert_dim_degree(&g.ideal, &cfg.gb().trusted(true).certified(true))?;
        results["dim"] = json!(h.dim);
        results["degree"] = json!(h.degree);
        assertions.push(Assertion::eq("dimension", k * (n - k), h.dim));
        assertions.push(Assertion::eq("degree", degree_formula(k, n), h.degree));
    } else {
        results["dim"] = json!(null);
        results["degree"] = json!(null);
    }
    Ok(Outcome { results, assertions, budget_exhausted: false })
}

impl Command for Plucker {
    fn name(&self) -> &'static str {
        "plucker"
    }

    fn about(&self) -> &'static str {
        "Plücker relations of the Grassmannian G(k, n) with its dimension and degree"
    }

    fn run(&self, cfg: &RunConfig) -> Result<Outcome, CliError> {
        if !(1 <= cfg.k && cfg.k < cfg.n && cfg.n <= 8) {
            return Err(CliError::Usage(format!("need 1 <= k < n <= 8, got k = {}, n = {}", cfg.k, cfg.n)));
        }
        over_field!(cfg, |F, ctx| compute::<F>(cfg, ctx))
    }
}
