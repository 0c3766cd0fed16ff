use std::path::PathBuf;

use clap::ArgMatches;
use fanocalc_core::groebner::{strategy_by_name, GbConfig};
use fanocalc_core::polycore::{format_rational, is_prime, parse_rational, Domain};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Which invariant plane a command starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Canonical,
    Additive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: String,
    pub d: BigRational,
    pub modulus: u32,
    /// Compute over the rationals instead of modulo `modulus`.
    pub exact: bool,
    pub items: Option<Vec<usize>>,
    pub interpolate: bool,
    pub format: Format,
    pub budget_steps: Option<u64>,
    pub strategy: String,
    pub output: Option<PathBuf>,
    pub k: usize,
    pub n: usize,
    pub source: Source,
    pub b: BigRational,
}

impl RunConfig {
    /// Defaults for `command`, as if no flag were given.
    pub fn new(command: &str) -> Self {
        RunConfig {
            command: command.to_string(),
            d: BigRational::from_integer(2.into()),
            modulus: Domain::DEFAULT_MODULUS,
            exact: false,
            items: None,
            interpolate: false,
            format: Format::Text,
            budget_steps: None,
            strategy: "normal".to_string(),
            output: None,
            k: 2,
            n: 4,
            source: Source::Canonical,
            b: BigRational::from_integer(1.into()),
        }
    }

    pub fn from_matches(command: &str, m: &ArgMatches) -> Result<Self, CliError> {
        let mut cfg = RunConfig::new(command);
        let text = |name: &str| m.get_one::<String>(name).cloned();
        let usage = |e: String| CliError::Usage(e);
        if let Some(d) = text("d") {
            cfg.d = parse_rational(&d).map_err(|e| usage(format!("--d {}: {}", d, e)))?;
        }
        if let Some(b) = text("b") {
            cfg.b = parse_rational(&b).map_err(|e| usage(format!("--b {}: {}", b, e)))?;
        }
        if let Some(p) = text("modulus") {
            cfg.modulus = p.parse().map_err(|_| usage(format!("--modulus {} is not an integer", p)))?;
        }
        if !is_prime(cfg.modulus as u64) {
            return Err(usage(format!("--modulus {} is not prime", cfg.modulus)));
        }
        cfg.exact = m.get_flag("exact");
        cfg.interpolate = m.get_flag("interpolate");
        if let Some(items) = text("items") {
            let parsed: Result<Vec<usize>, _> = items.split(',').map(|s| s.trim().parse::<usize>()).collect();
            cfg.items = Some(parsed.map_err(|_| usage(format!("--items {} is not a list of integers", items)))?);
        }
        cfg.format = match text("format").as_deref() {
            None | Some("text") => Format::Text,
            Some("json") => Format::Json,
            Some(other) => return Err(usage(format!("--format {} is not json or text", other))),
        };
        if let Some(s) = text("budget-steps") {
            cfg.budget_steps = Some(s.parse().map_err(|_| usage(format!("budget {} is not an integer", s)))?);
        }
        if let Some(s) = text("strategy") {
            if strategy_by_name(&s).is_none() {
                return Err(usage(format!("unknown strategy {}", s)));
            }
            cfg.strategy = s;
        }
        cfg.output = m.get_one::<String>("output").map(PathBuf::from);
        if let Some(k) = text("k") {
            cfg.k = k.parse().map_err(|_| usage(format!("--k {}", k)))?;
        }
        if let Some(n) = text("n") {
            cfg.n = n.parse().map_err(|_| usage(format!("--n {}", n)))?;
        }
        cfg.source = match text("source").as_deref() {
            None | Some("canonical") => Source::Canonical,
            Some("additive") => Source::Additive,
            Some(other) => return Err(usage(format!("--source {} is not canonical or additive", other))),
        };
        Ok(cfg)
    }

    pub fn gb(&self) -> GbConfig {
        GbConfig::default()
            .with_strategy(&self.strategy)
            .expect("strategy checked on parse")
            .with_max_steps(self.budget_steps)
    }

    pub fn domain(&self) -> Domain {
        if self.exact {
            Domain::Rational
        } else {
            Domain::Prime(self.modulus)
        }
    }

    /// The settings that determine a report's payload.
    pub fn echo(&self) -> Value {
        json!({
            "d": format_rational(&self.d),
            "b": format_rational(&self.b),
            "domain": self.domain().name(),
            "items": self.items,
            "interpolate": self.interpolate,
            "budget_steps": self.budget_steps,
            "strategy": self.strategy,
            "k": self.k,
            "n": self.n,
            "source": match self.source { Source::Canonical => "canonical", Source::Additive => "additive" },
        })
    }
}
