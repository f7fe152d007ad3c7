//! Command-line front end for `omnisearch`.
//!
//! [`run`] does all the work and returns the exit status plus what should go
//! to stdout and stderr, so it can be driven in-process as well as from
//! `main`.

pub mod demos;
pub mod report;

use clap::{Args, Parser, Subcommand};
use omnisearch::budget::{self, FuelExhausted};
use omnisearch::dsl::{self, ParseError};
use omnisearch::search::{self, Search, SearchOutcome};
use omnisearch::taboo;
use omnisearch::{Classification, CoNat};

use demos::Demo;
use report::{ErrorReport, Report, Stats, Verdict, Witness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FUEL: i32 = 3;

pub const DEFAULT_FUEL: u64 = 10_000_000;
pub const DEFAULT_PREFIX: u64 = 16;

#[derive(Debug, Parser)]
#[command(
    name = "omnisearch",
    version,
    about = "Decide quantified predicates over the conatural numbers in finite time",
    after_help = "\
Predicates are written in a small language, e.g. \"!(bit(5) & !bit(6))\" or
\"all k < 8. bit(7) => bit(k)\". A value of 1 (true) means the predicate holds.

`forall EXPR` asks whether EXPR holds on every conatural. `find EXPR` looks
for a conatural on which EXPR is 0 (false); to find a point where EXPR is
true, search for a zero of its negation, `find \"!(EXPR)\"`.

Exit status: 0 holds/found, 1 counterexample/none, 2 usage or parse error,
3 step budget exhausted."
)]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Config {
    /// Step budget: maximum number of bit evaluations
    #[arg(long, global = true, default_value_t = DEFAULT_FUEL,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub fuel: u64,

    /// Number of witness bits to print
    #[arg(long, global = true, default_value_t = DEFAULT_PREFIX,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub prefix: u64,

    /// Emit a single JSON object instead of text
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether EXPR holds on every conatural
    Forall { expr: String },
    /// Look for a conatural on which EXPR is false
    Find { expr: String },
    /// Locate the first zero bit of ELEMENT: `omega`, a natural n, or an
    /// expression (meaning the selected candidate counterexample for it)
    Classify {
        element: String,
        /// Bits to inspect [default: twice the modulus for expressions, else 1024]
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        depth: Option<u64>,
    },
    /// Decide whether a built-in map into A + N∞ ever reaches A
    DecideSum {
        #[arg(value_enum)]
        name: Demo,
    },
}

/// What a finished invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Parse(ParseError),
    Fuel,
}

impl From<FuelExhausted> for Failure {
    fn from(_: FuelExhausted) -> Self {
        Failure::Fuel
    }
}

/// Runs the CLI on `args` (including the program name).
///
/// Installs the step budget from `--fuel` for the duration of the call.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let status = e.exit_code();
            return if status == 0 {
                Output {
                    status,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output {
                    status,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    budget::set_step_budget(Some(cli.config.fuel));
    let out = execute(&cli.command, &cli.config);
    budget::set_step_budget(None);
    out
}

fn query_text(command: &Command) -> String {
    match command {
        Command::Forall { expr } | Command::Find { expr } => expr.clone(),
        Command::Classify { element, .. } => element.clone(),
        Command::DecideSum { name } => name.as_str().to_owned(),
    }
}

fn execute(command: &Command, config: &Config) -> Output {
    let result = match command {
        Command::Forall { expr } => quantify(expr, config, false),
        Command::Find { expr } => quantify(expr, config, true),
        Command::Classify { element, depth } => classify(element, *depth, config),
        Command::DecideSum { name } => decide_sum(*name, config),
    };
    let query = query_text(command);
    match result {
        Ok((status, report)) => Output {
            status,
            stdout: if config.json {
                report.to_json()
            } else {
                report.to_text()
            },
            stderr: String::new(),
        },
        Err(failure) => {
            let (status, err) = match failure {
                Failure::Parse(e) => (EXIT_USAGE, ErrorReport::parse(query, &e)),
                Failure::Fuel => (EXIT_FUEL, ErrorReport::fuel(query)),
            };
            Output {
                status,
                stdout: if config.json {
                    err.to_json()
                } else {
                    String::new()
                },
                stderr: format!("error: {}\n", err.error.message),
            }
        }
    }
}

fn witness(
    p: &CoNat,
    classification: Classification,
    config: &Config,
) -> Result<Witness, FuelExhausted> {
    Ok(Witness {
        prefix: p.prefix_string(config.prefix)?,
        classification: classification.into(),
    })
}

fn quantify(expr: &str, config: &Config, exists: bool) -> Result<(i32, Report), Failure> {
    let e = dsl::parse(expr).map_err(Failure::Parse)?;
    let search = Search::new(&dsl::compile(&e));
    let outcome = search.outcome()?;
    let (status, verdict, witness) = match (&outcome, exists) {
        (SearchOutcome::HoldsEverywhere, false) => (EXIT_OK, Verdict::Holds, None),
        (SearchOutcome::HoldsEverywhere, true) => (EXIT_NEGATIVE, Verdict::None, None),
        (
            SearchOutcome::Counterexample {
                witness: w,
                classification,
            },
            exists,
        ) => (
            if exists { EXIT_OK } else { EXIT_NEGATIVE },
            if exists {
                Verdict::Found
            } else {
                Verdict::Counterexample
            },
            Some(witness(w, *classification, config)?),
        ),
    };
    Ok((
        status,
        Report {
            query: expr.to_owned(),
            verdict,
            witness,
            decision: None,
            stats: search.stats().into(),
        },
    ))
}

fn classify(element: &str, depth: Option<u64>, config: &Config) -> Result<(i32, Report), Failure> {
    let (value, default_depth, stats) = if element.trim() == "omega" {
        (CoNat::omega(), search::DEFAULT_CLASSIFY_FUEL, None)
    } else if let Ok(n) = element.trim().parse::<u64>() {
        (CoNat::finite(n), search::DEFAULT_CLASSIFY_FUEL, None)
    } else {
        let q = dsl::compile(&dsl::parse(element).map_err(Failure::Parse)?);
        let search = Search::new(&q);
        let w = search.witness().clone();
        (w, search::default_classify_fuel(&q), Some(search))
    };
    let classification = value.classify(depth.unwrap_or(default_depth))?;
    let witness = witness(&value, classification, config)?;
    Ok((
        EXIT_OK,
        Report {
            query: element.to_owned(),
            verdict: Verdict::Classified,
            witness: Some(witness),
            decision: None,
            stats: stats.map(|s| s.stats().into()).unwrap_or_default(),
        },
    ))
}

fn decide_sum(demo: Demo, config: &Config) -> Result<(i32, Report), Failure> {
    let search = Search::new(&taboo::left_indicator(demo.map()));
    let (status, verdict, witness) = match search.outcome()? {
        SearchOutcome::HoldsEverywhere => (EXIT_NEGATIVE, Verdict::None, None),
        SearchOutcome::Counterexample {
            witness: w,
            classification,
        } => (
            EXIT_OK,
            Verdict::Found,
            Some(witness(&w, classification, config)?),
        ),
    };
    let decision = if witness.is_some() {
        "inhabited"
    } else {
        "empty"
    };
    Ok((
        status,
        Report {
            query: demo.as_str().to_owned(),
            verdict,
            witness,
            decision: Some(decision),
            stats: Stats::from(search.stats()),
        },
    ))
}
