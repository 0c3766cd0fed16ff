use std::collections::BTreeMap;

use fanocalc_core::grassmann::parse_coordinate_name;
use fanocalc_core::groebner::hilbert_dim_degree;
use fanocalc_core::mukai::{
    additive_plane, canonical_plane, coordinate_weight, fixed_divisor_spectrum, modulus_tau, v12_ideal, InvariantPlane,
    Symmetry,
};
use fanocalc_core::polycore::Field;
use serde_json::json;

use super::over_field;
use crate::{Assertion, CliError, Command, Outcome, RunConfig, Source};

pub struct BuildV12;

pub(crate) fn plane_for<F: Field>(cfg: &RunConfig, ctx: &F::Ctx) -> Result<InvariantPlane<F>, CliError> {
    Ok(match cfg.source {
        Source::Canonical => canonical_plane::<F>(&cfg.d, ctx)?,
        Source::Additive => additive_plane::<F>(ctx),
    })
}

/// Twelve isolated weights and a two dimensional weight zero space.
pub(crate) fn expected_spectrum() -> BTreeMap<i32, usize> {
    (-6..=6).map(|w| (w, if w == 0 { 2 } else { 1 })).collect()
}

fn spectrum_string(s: &BTreeMap<i32, usize>) -> String {
    let parts: Vec<String> = s.iter().map(|(w, m)| format!("{}:{}", w, m)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn compute<F: Field>(cfg: &RunConfig, ctx: F::Ctx) -> Result<Outcome, CliError> {
    let plane = plane_for::<F>(cfg, &ctx)?;
    let v = v12_ideal(&plane, &ctx)?;
    let free: Vec<_> = v
        .section
        .ring
        .names()
        .iter()
        .map(|name| json!({ "coordinate": name, "weight": coordinate_weight(&parse_coordinate_name(name).unwrap()) }))
        .collect();
    let h = hilbert_dim_degree(&v.ideal, &cfg.gb())?;
    let mut results = json!({
        "free_coordinates": free,
        "quadrics": v.ideal.gens().len(),
        "dim": h.dim,
        "degree": h.degree,
    });
    let mut assertions = vec![
        Assertion::eq("free coordinates", 14, free.len()),
        Assertion::eq("dimension", 3, h.dim),
        Assertion::eq("degree", 22, h.degree),
    ];
    if plane.symmetry == Symmetry::Torus {
        results["tau"] = json!(modulus_tau(&plane, &ctx)?.to_string());
        let spec = fixed_divisor_spectrum(&plane, &ctx)?;
        let twelve_and_line = spec == expected_spectrum();
        results["spectrum"] = json!(spec.iter().map(|(w, m)| (w.to_string(), *m)).collect::<BTreeMap<_, _>>());
        results["spectrum_summary"] = json!(if twelve_and_line { "12 points and a line" } else { "other" });
        assertions.push(Assertion::eq(
            "fixed divisor spectrum",
            spectrum_string(&expected_spectrum()),
            spectrum_string(&spec),
        ));
    }
    Ok(Outcome { results, assertions, budget_exhausted: false })
}

impl Command for BuildV12 {
    fn name(&self) -> &'static str {
        "build-v12"
    }

    fn about(&self) -> &'static str {
        "Equations of the threefold as a linear section of G(4, 7), with its invariants"
    }

    fn run(&self, cfg: &RunConfig) -> Result<Outcome, CliError> {
        over_field!(cfg, |F, ctx| compute::<F>(cfg, ctx))
    }
}
