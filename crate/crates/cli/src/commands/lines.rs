use fanocalc_core::lines_vsp::{classify, lines_quartic, ConicClass};
use fanocalc_core::polycore::{format_rational, rat, Field};
use serde_json::json;

use super::over_field;
use super::v12::plane_for;
use crate::{Assertion, CliError, Command, Outcome, RunConfig, Source};

pub struct LinesQuartic;

/// The class predicted for the configured plane, where one is known.
fn predicted(cfg: &RunConfig) -> Option<ConicClass> {
    match cfg.source {
        Source::Additive => Some(ConicClass::TangentAtOnePoint),
        Source::Canonical if cfg.d == rat(-1, 1) => Some(ConicClass::DoubleConic),
        // the two conics coincide also at d = -5
        Source::Canonical if cfg.d == rat(-5, 1) || cfg.d == rat(0, 1) => None,
        Source::Canonical => Some(ConicClass::TangentAtTwoPoints),
    }
}

fn compute<F: Field>(cfg: &RunConfig, ctx: F::Ctx) -> Result<Outcome, CliError> {
    let plane = plane_for::<F>(cfg, &ctx)?;
    let q = lines_quartic(&plane, &ctx)?;
    let r = classify(&q, &cfg.gb())?;
    let factors = r.factors.as_ref().map(|f| {
        let (a, b) = f.to_strings();
        json!({ "conics": [a, b], "extension": f.extension().map(|m| format!("sqrt({})", m)) })
    });
    let results = json!({
        "source": match cfg.source { Source::Canonical => "canonical", Source::Additive => "additive" },
        "d": (cfg.source == Source::Canonical).then(|| format_rational(&cfg.d)),
        "quartic": q.poly.to_string(),
        "class": r.class.name(),
        "profile": r.profile,
        "factors": factors,
    });
    let mut assertions = Vec::new();
    if let Some(c) = predicted(cfg) {
        assertions.push(Assertion::eq("class", c.name(), r.class.name()));
        if c == ConicClass::TangentAtTwoPoints {
            assertions.push(Assertion::eq("tangency profile", "[2, 2]", format!("{:?}", r.profile)));
        }
    }
    Ok(Outcome { results, assertions, budget_exhausted: false })
}

impl Command for LinesQuartic {
    fn name(&self) -> &'static str {
        "lines-quartic"
    }

    fn about(&self) -> &'static str {
        "The plane quartic of lines, split into conics and classified"
    }

    fn run(&self, cfg: &RunConfig) -> Result<Outcome, CliError> {
        over_field!(cfg, |F, ctx| compute::<F>(cfg, ctx))
    }
}
