use fanocalc_core::mukai::fixtures::{normalize, printed, printed_equation};
use fanocalc_core::mukai::{
    divisor_affine_equation, divisor_frame_plane, divisor_table, interpolate_in_d, v12_ideal, DivisorKind, DivisorSpec,
    MukaiError, V12,
};
use fanocalc_core::polycore::{format_rational, parse_poly_with, rat, Field};
use num_rational::BigRational;
use serde_json::{json, Value};

use super::over_field;
use crate::{Assertion, CliError, Command, Outcome, RunConfig};

pub struct Divisors;

/// Sample values of `d` for interpolation.
fn samples() -> Vec<BigRational> {
    (2..=11).map(|d| rat(d, 1)).collect()
}

pub(crate) fn select(cfg: &RunConfig, default: &[usize]) -> Result<Vec<DivisorSpec>, CliError> {
    let table = divisor_table();
    let items = cfg.items.clone().unwrap_or_else(|| default.to_vec());
    items
        .iter()
        .map(|i| {
            table
                .iter()
                .find(|s| s.item == *i)
                .cloned()
                .ok_or_else(|| CliError::Usage(format!("no divisor item {}", i)))
        })
        .collect()
}

fn verdict(graph: bool, smooth: bool) -> &'static str {
    match (graph, smooth) {
        (_, true) => "smooth",
        (true, false) => "singular",
        (false, _) => "not a graph",
    }
}

fn interpolate<F: Field>(
    spec: &DivisorSpec,
    cfg: &RunConfig,
    planes: &[V12<F>],
    assertions: &mut Vec<Assertion>,
) -> Result<Value, MukaiError> {
    let samples = samples();
    let gb = cfg.gb();
    let family = interpolate_in_d(&samples, |d| {
        let k = samples.iter().position(|s| s == d).unwrap();
        Ok(divisor_affine_equation(&planes[k], spec, Some(&cfg.b), &gb)?.equation)
    })?;
    let mut out = json!({
        "numerator": family.numerator.to_string(),
        "denominator": family.denominator.to_string(),
    });
    // printed coefficients that are polynomial in d compare symbolically
    let ring = family.numerator.ring();
    let b =
        F::from_rational(ring.ctx(), &cfg.b).ok_or_else(|| MukaiError::NotRepresentable(format_rational(&cfg.b)))?;
    let text = normalize(printed(spec.item).unwrap_or_default());
    match parse_poly_with(&text, ring, &[("b", b)]) {
        Ok(p) => {
            let scaled = &p * &family.denominator;
            let ok = scaled.equals_up_to_scalar(&family.numerator);
            out["printed"] = json!(if ok { "match" } else { "mismatch" });
            assertions.push(Assertion {
                name: format!("item {} dependence on d", spec.item),
                pass: ok,
                expected: scaled.canonical().to_string(),
                actual: family.numerator.canonical().to_string(),
            });
        }
        Err(e) => out["printed"] = json!(format!("not compared: {}", e)),
    }
    Ok(out)
}

fn compute<F: Field>(cfg: &RunConfig, ctx: F::Ctx) -> Result<Outcome, CliError> {
    let all: Vec<usize> = divisor_table().iter().map(|s| s.item).collect();
    let specs = select(cfg, &all)?;
    let gb = cfg.gb();
    let v = v12_ideal(&divisor_frame_plane::<F>(&cfg.d, &ctx)?, &ctx)?;
    let excluded = cfg.d == rat(-1, 1);
    let mut rows = Vec::new();
    let mut assertions = Vec::new();
    let mut budget = false;
    for spec in &specs {
        let rec = match divisor_affine_equation(&v, spec, Some(&cfg.b), &gb) {
            Ok(r) => r,
            Err(e) => {
                budget |= e.is_budget();
                rows.push(json!({ "item": spec.item, "error": e.to_string() }));
                if excluded {
                    continue;
                }
                assertions.push(Assertion {
                    name: format!("item {} computed", spec.item),
                    pass: false,
                    expected: "an equation".into(),
                    actual: e.to_string(),
                });
                continue;
            }
        };
        let mut row = json!({
            "item": spec.item,
            "cut": rec.cut.to_string(),
            "weight": rec.weight,
            "chart": rec.chart,
            "targets": rec.targets,
            "graph": rec.graph,
            "verdict": verdict(rec.graph, rec.smooth),
        });
        match spec.kind {
            DivisorKind::Equation => {
                row["equation"] = json!(rec.equation.to_string());
                let b = (spec.item == 13).then_some(&cfg.b);
                match printed_equation(spec.item, rec.equation.ring(), &cfg.d, b) {
                    Ok(p) => {
                        let ok = p.equals_up_to_scalar(&rec.equation);
                        row["printed"] = json!(if ok { "match" } else { "mismatch" });
                        if excluded {
                            // the printed family is stated for d != -1
                            row["printed_note"] = json!("d = -1 is outside the printed family");
                        } else {
                            assertions.push(Assertion {
                                name: format!("item {} printed equation", spec.item),
                                pass: ok,
                                expected: p.canonical().to_string(),
                                actual: rec.equation.to_string(),
                            });
                        }
                    }
                    Err(e) => row["printed"] = json!(format!("not compared: {}", e)),
                }
            }
            DivisorKind::Smoothness if !excluded => {
                assertions.push(Assertion::eq(
                    format!("item {} smooth in chart {} = 1", spec.item, rec.chart),
                    "smooth",
                    verdict(rec.graph, rec.smooth),
                ));
            }
            DivisorKind::Smoothness => {}
        }
        rows.push(row);
    }
    let mut results = json!({ "items": rows });
    if cfg.interpolate {
        let planes: Vec<V12<F>> =
            samples().iter().map(|d| v12_ideal(&divisor_frame_plane::<F>(d, &ctx)?, &ctx)).collect::<Result<_, _>>()?;
        let mut fam = Vec::new();
        for spec in specs.iter().filter(|s| s.kind == DivisorKind::Equation) {
            match interpolate(spec, cfg, &planes, &mut assertions) {
                Ok(mut v) => {
                    v["item"] = json!(spec.item);
                    fam.push(v);
                }
                Err(e) => {
                    budget |= e.is_budget();
                    fam.push(json!({ "item": spec.item, "error": e.to_string() }));
                }
            }
        }
        results["interpolated"] = json!({
            "samples": samples().iter().map(format_rational).collect::<Vec<_>>(),
            "families": fam,
        });
    }
    Ok(Outcome { results, assertions, budget_exhausted: budget })
}

impl Command for Divisors {
    fn name(&self) -> &'static str {
        "divisors"
    }

    fn about(&self) -> &'static str {
        "Affine equations and smoothness of the torus invariant divisors"
    }

    fn run(&self, cfg: &RunConfig) -> Result<Outcome, CliError> {
        over_field!(cfg, |F, ctx| compute::<F>(cfg, ctx))
    }
}
