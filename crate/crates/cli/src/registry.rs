use std::time::Instant;

use clap::{Arg, ArgAction, ArgMatches};
use serde_json::Value;

use crate::commands;
use crate::{Assertion, CliError, Provenance, Report, RunConfig, Status};

/// What a command computed, before timing and config are attached.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub results: Value,
    pub assertions: Vec<Assertion>,
    /// Set when part of a batch ran out of budget.
    pub budget_exhausted: bool,
}

pub trait Command: Send + Sync {
    fn name(&self) -> &'static str;
    fn about(&self) -> &'static str;
    fn run(&self, cfg: &RunConfig) -> Result<Outcome, CliError>;
}

pub struct CommandRegistry {
    commands: Vec<Box<dyn Command>>,
}

impl Default for CommandRegistry {
    fn default() -> Self {
        let mut r = CommandRegistry { commands: Vec::new() };
        r.register(Box::new(commands::Plucker));
        r.register(Box::new(commands::BuildV12));
        r.register(Box::new(commands::Divisors));
        r.register(Box::new(commands::Lct));
        r.register(Box::new(commands::LinesQuartic));
        r
    }
}

fn shared_args() -> Vec<Arg> {
    let value = |name: &'static str, help: &'static str| {
        Arg::new(name).long(name).value_name("VALUE").allow_hyphen_values(true).help(help)
    };
    vec![
        value("d", "family parameter, n or n/m"),
        value("modulus", "prime modulus for modular arithmetic"),
        Arg::new("exact").long("exact").action(ArgAction::SetTrue).help("compute over the rationals"),
        value("items", "comma separated divisor items"),
        Arg::new("interpolate").long("interpolate").action(ArgAction::SetTrue).help("reconstruct the dependence on d"),
        value("format", "json or text"),
        value("budget-steps", "maximum S-pair reductions per basis").env("FANOCALC_BUDGET_STEPS"),
        Arg::new("output").short('o').long("output").value_name("PATH").help("write the report here"),
        value("k", "subspace dimension"),
        value("n", "ambient dimension"),
        value("source", "canonical or additive"),
        value("b", "pencil parameter for item 13"),
        value("strategy", "pair selection strategy"),
    ]
}

impl CommandRegistry {
    /// Adds a command, replacing any existing one with the same name.
    pub fn register(&mut self, c: Box<dyn Command>) {
        self.commands.retain(|e| e.name() != c.name());
        self.commands.push(c);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Command> {
        self.commands.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.commands.iter().map(|c| c.name()).collect()
    }

    pub fn clap(&self) -> clap::Command {
        let mut app = clap::Command::new("fanocalc")
            .version(env!("CARGO_PKG_VERSION"))
            .about("Genus twelve Fano threefolds: invariants, divisors, thresholds and lines")
            .subcommand_required(true)
            .arg_required_else_help(true);
        for c in &self.commands {
            app = app.subcommand(clap::Command::new(c.name()).about(c.about()).args(shared_args()));
        }
        app
    }

    /// Parses a full argument list, program name first.
    pub fn parse<I, T>(&self, args: I) -> Result<Result<RunConfig, CliError>, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let m: ArgMatches = self.clap().try_get_matches_from(args)?;
        let (name, sub) = m.subcommand().expect("subcommand required");
        Ok(RunConfig::from_matches(name, sub))
    }

    pub fn execute(&self, cfg: &RunConfig) -> Result<Report, CliError> {
        let cmd = self.get(&cfg.command).ok_or_else(|| CliError::Usage(format!("unknown command {}", cfg.command)))?;
        let start = Instant::now();
        let out = cmd.run(cfg)?;
        let status = if out.budget_exhausted {
            Status::BudgetExhausted
        } else if out.assertions.iter().all(|a| a.pass) {
            Status::Ok
        } else {
            Status::AssertionFailed
        };
        Ok(Report {
            command: cfg.command.clone(),
            config: cfg.echo(),
            results: out.results,
            assertions: out.assertions,
            status,
            version: env!("CARGO_PKG_VERSION").to_string(),
            provenance: Provenance {
                tool: format!("fanocalc {}", env!("CARGO_PKG_VERSION")),
                elapsed_ms: start.elapsed().as_millis() as u64,
            },
        })
    }
}
