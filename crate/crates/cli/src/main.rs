//! `clutterkit`: command-line access to the clutter library.
//!
//! Every command reads a JSON clutter document (from `--input` or stdin)
//! and prints a JSON report. Exit status: 0 the property holds or the
//! construction succeeded, 1 it fails or nothing was found, 2 usage or
//! validation error, 3 a size guard refused the computation.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand};
use clutterkit::bipartite::IsolatedPolicy;
use clutterkit::generators::DEFAULT_SEED;
use clutterkit::Limits;

use commands::{Criterion, Method, MinorStep, Property, QuotientSource};
use report::{read_instance, Failure, Outcome, Report, Stopwatch};

#[derive(Parser)]
#[command(
    name = "clutterkit",
    version,
    about = "Unmixed clutters, shellings and admissible clutters"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Read the clutter document from this file instead of stdin.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Record the running time in the report.
    #[arg(long, global = true)]
    timing: bool,
    /// Largest vertex count for cover enumeration.
    #[arg(long, global = true)]
    max_vertices: Option<usize>,
    /// Largest facet count for the exhaustive shelling search.
    #[arg(long, global = true)]
    max_facets: Option<usize>,
}

impl Common {
    fn limits(&self) -> Limits {
        let mut limits = Limits::default();
        if let Some(n) = self.max_vertices {
            limits = limits.with_max_vertices(n);
        }
        if let Some(f) = self.max_facets {
            limits = limits.with_max_shelling_facets(f);
        }
        limits
    }
}

#[derive(Subcommand)]
enum Command {
    /// Test a property of the clutter.
    Check {
        #[arg(long, value_enum)]
        property: Property,
    },
    /// List the minimal vertex covers.
    Covers,
    /// Find a maximum matching, or a perfect matching of König type.
    Matching {
        /// Search for a perfect matching of König type instead.
        #[arg(long)]
        konig_type: bool,
    },
    /// Apply contractions and deletions, left to right.
    Minor {
        #[arg(long, value_name = "VERTEX", action = clap::ArgAction::Append)]
        contract: Vec<String>,
        #[arg(long, value_name = "VERTEX", action = clap::ArgAction::Append)]
        delete: Vec<String>,
    },
    /// Shell the Stanley–Reisner complex (or, for `lex`, the edges).
    Shell {
        #[arg(long, value_enum, default_value = "recursive")]
        method: Method,
    },
    /// Generate clutters.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// The clutter of minimal vertex covers.
    Dual,
    /// Complements of the edges.
    DualIdeal,
    /// Search for an ordering with linear quotients.
    LinearQuotients {
        #[arg(long, value_enum, default_value = "dual")]
        of: QuotientSource,
    },
    /// Criteria for bipartite graphs.
    Bipartite {
        #[arg(long, value_enum)]
        criterion: Criterion,
        /// Drop isolated vertices instead of rejecting the input.
        #[arg(long)]
        allow_isolated: bool,
    },
    /// Attach a pendant edge at every vertex of a graph.
    Whisker,
    /// Run the acceptance suite.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// The complete admissible clutter on the `d × g` grid.
    CompleteAdmissible {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        d: usize,
        /// Allow gaps between classes.
        #[arg(long)]
        relaxed: bool,
    },
}

/// Contract and delete flags in command-line order.
fn minor_steps(matches: &ArgMatches) -> Vec<MinorStep> {
    let mut steps: Vec<(usize, MinorStep)> = Vec::new();
    for (id, make) in [
        ("contract", MinorStep::Contract as fn(String) -> MinorStep),
        ("delete", MinorStep::Delete),
    ] {
        if let (Some(values), Some(indices)) =
            (matches.get_many::<String>(id), matches.indices_of(id))
        {
            steps.extend(indices.zip(values).map(|(i, v)| (i, make(v.clone()))));
        }
    }
    steps.sort_by_key(|(i, _)| *i);
    steps.into_iter().map(|(_, s)| s).collect()
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Check { .. } => "check",
        Command::Covers => "covers",
        Command::Matching { .. } => "matching",
        Command::Minor { .. } => "minor",
        Command::Shell { .. } => "shell",
        Command::Gen { .. } => "gen complete-admissible",
        Command::Dual => "dual",
        Command::DualIdeal => "dual-ideal",
        Command::LinearQuotients { .. } => "linear-quotients",
        Command::Bipartite { .. } => "bipartite",
        Command::Whisker => "whisker",
        Command::Selftest { .. } => "selftest",
    }
}

fn execute(cli: &Cli, matches: &ArgMatches) -> Result<Report, Failure> {
    let common = &cli.common;
    let limits = common.limits();
    let command = &cli.command;
    let watch = Stopwatch::start(common.timing);
    let (outcome, digest): (Outcome, Option<String>) = match command {
        Command::Gen {
            kind: GenKind::CompleteAdmissible { g, d, relaxed },
        } => (
            commands::gen_complete_admissible(*g, *d, *relaxed, &limits)?,
            None,
        ),
        Command::Selftest { seed } => (commands::run_selftest(*seed, common.timing)?, None),
        _ => {
            let (inst, digest) = read_instance(common.input.as_deref())?;
            let outcome = match command {
                Command::Check { property } => commands::check(&inst, *property, &limits)?,
                Command::Covers => commands::covers(&inst, &limits)?,
                Command::Matching { konig_type } => {
                    commands::matching(&inst, *konig_type, &limits)?
                }
                Command::Minor { .. } => {
                    let sub = matches
                        .subcommand_matches("minor")
                        .expect("minor was parsed");
                    commands::minor(&inst, &minor_steps(sub))?
                }
                Command::Shell { method } => commands::shell(&inst, *method, &limits)?,
                Command::Dual => commands::dual(&inst, &limits)?,
                Command::DualIdeal => commands::dual_ideal(&inst)?,
                Command::LinearQuotients { of } => commands::linear_quotients(&inst, *of, &limits)?,
                Command::Bipartite {
                    criterion,
                    allow_isolated,
                } => {
                    let policy = if *allow_isolated {
                        IsolatedPolicy::Ignore
                    } else {
                        IsolatedPolicy::Reject
                    };
                    commands::bipartite(&inst, *criterion, policy)?
                }
                Command::Whisker => commands::whiskered(&inst)?,
                Command::Gen { .. } | Command::Selftest { .. } => unreachable!("handled above"),
            };
            (outcome, Some(digest))
        }
    };
    Ok(Report {
        command: command_name(command).to_string(),
        input_digest: digest,
        outcome,
        elapsed_ms: watch.elapsed_ms(),
    })
}

fn main() -> ExitCode {
    let matches = Cli::command().get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match execute(&cli, &matches) {
        Ok(report) => {
            println!("{}", report.to_json());
            ExitCode::from(if report.outcome.holds { 0 } else { 1 })
        }
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
