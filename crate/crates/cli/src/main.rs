//! `tvacc`: threshold spread, dynamic monopolies and budgeted threshold
//! increases on trees.
//!
//! Exit codes: 0 success, 1 a checked statement fails, 2 unreadable or
//! malformed input, 3 invalid input, 4 infeasible budget, 5 instance too
//! large for an exhaustive method.

mod commands;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tvacc_core::oracle::VACC_SIZE_LIMIT;
use tvacc_core::spread::DYN_SIZE_LIMIT;
use tvacc_core::Error;

#[derive(Parser)]
#[command(name = "tvacc", version, about = "Threshold spread, dynamic monopolies and budgeted threshold increases on trees")]
struct Cli {
    /// Emit a key-sorted JSON record instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// Vertex-function arguments take a file path or the literal `const c`.
#[derive(Subcommand)]
enum Command {
    /// Closure of a seed set under threshold spread.
    Hull {
        graph: PathBuf,
        thresholds: String,
        seeds: Vec<usize>,
    },
    /// Largest minimum monopoly reachable by raising thresholds on a tree
    /// within a budget.
    Vacc {
        tree: PathBuf,
        thresholds: String,
        iota_max: String,
        #[arg(long, allow_hyphen_values = true)]
        budget: i64,
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// Write the optimal increment to this file after verifying it.
        #[arg(long, value_name = "PATH")]
        emit_increment: Option<PathBuf>,
    },
    /// Size of a minimum dynamic monopoly.
    Dyn {
        graph: PathBuf,
        thresholds: String,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[arg(long, default_value_t = DYN_SIZE_LIMIT)]
        size_limit: usize,
    },
    /// Check a statement on a small graph; exits 1 if it fails.
    #[command(subcommand)]
    Check(Statement),
    /// Print a graph from a standard family.
    Gen {
        #[arg(value_enum)]
        family: Family,
        n: usize,
        #[arg(default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Tree dynamic program.
    Tree,
    /// Exhaustive search with a size guard.
    Exact,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Star,
    Cycle,
    RandomTree,
}

#[derive(Subcommand)]
enum Statement {
    /// Sorted-degree formula against exhaustive search with capacities `d + 1`.
    Formula(FormulaArgs),
    /// On trees, some matching threshold within budget attains vacc.
    Khza(BoundArgs),
    /// vacc is at most twice the best matching threshold within budget.
    Conjecture1(BoundArgs),
    /// The matching bound on regular graphs, with its intermediate steps.
    Theorem2(BoundArgs),
}

#[derive(Args)]
struct FormulaArgs {
    graph: PathBuf,
    /// Single total to check; every admissible total when omitted.
    #[arg(long, allow_hyphen_values = true)]
    total: Option<i64>,
    #[arg(long, default_value_t = VACC_SIZE_LIMIT)]
    size_limit: usize,
}

#[derive(Args)]
struct BoundArgs {
    graph: PathBuf,
    /// Single budget to check; every admissible budget when omitted.
    #[arg(long, allow_hyphen_values = true)]
    budget: Option<i64>,
    #[arg(long, default_value_t = VACC_SIZE_LIMIT)]
    size_limit: usize,
}

#[derive(Debug)]
enum CliError {
    Core { error: Error, context: Option<String> },
    Read { path: PathBuf, source: std::io::Error },
    Write { path: PathBuf, source: std::io::Error },
    Invalid(String),
    SelfCheck(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core { error: Error::Parse { .. }, .. } | CliError::Read { .. } => 2,
            CliError::Core { error: Error::BudgetInfeasible { .. }, .. } => 4,
            CliError::Core { error: Error::InstanceTooLarge { .. }, .. } => 5,
            CliError::Core { .. } | CliError::Invalid(_) => 3,
            CliError::Write { .. } | CliError::SelfCheck(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core { error, context: Some(c) } => write!(f, "{c}: {error}"),
            CliError::Core { error, context: None } => write!(f, "{error}"),
            CliError::Read { path, source } => write!(f, "cannot read {}: {source}", path.display()),
            CliError::Write { path, source } => write!(f, "cannot write {}: {source}", path.display()),
            CliError::Invalid(msg) => write!(f, "{msg}"),
            CliError::SelfCheck(msg) => write!(f, "self-check failed: {msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        CliError::Core { error, context: None }
    }
}

/// What a command produced: a JSON record, its text rendering, and whether
/// every checked statement held.
pub struct Outcome {
    command: &'static str,
    inputs: Value,
    result: Value,
    text: String,
    holds: bool,
}

/// Rebuilds every object with sorted keys so output is stable whatever map
/// backend serde_json is compiled with.
fn sorted(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let mut entries: Vec<_> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(entries.into_iter().map(|(k, v)| (k, sorted(v))).collect())
        }
        Value::Array(items) => Value::Array(items.into_iter().map(sorted).collect()),
        other => other,
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Hull { graph, thresholds, seeds } => commands::hull(&graph, &thresholds, &seeds),
        Command::Vacc { tree, thresholds, iota_max, budget, root, emit_increment } => {
            commands::vacc(&tree, &thresholds, &iota_max, budget, root, emit_increment.as_deref())
        }
        Command::Dyn { graph, thresholds, mode, size_limit } => {
            commands::dyn_size(&graph, &thresholds, matches!(mode, Mode::Tree), size_limit)
        }
        Command::Check(Statement::Formula(a)) => commands::check_formula(&a.graph, a.total, a.size_limit),
        Command::Check(Statement::Khza(a)) => commands::check_bound(commands::Bound::Khza, &a.graph, a.budget, a.size_limit),
        Command::Check(Statement::Conjecture1(a)) => {
            commands::check_bound(commands::Bound::Conjecture1, &a.graph, a.budget, a.size_limit)
        }
        Command::Check(Statement::Theorem2(a)) => {
            commands::check_bound(commands::Bound::Theorem2, &a.graph, a.budget, a.size_limit)
        }
        Command::Gen { family, n, seed } => commands::generate(family, n, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(out) => {
            if json {
                let record = json!({ "command": out.command, "inputs": out.inputs, "result": out.result });
                println!("{}", serde_json::to_string_pretty(&sorted(record)).expect("values serialize"));
            } else {
                print!("{}", out.text);
            }
            if out.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
