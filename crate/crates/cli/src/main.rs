//! `gamma2`: build involutory representations, run identity sweeps, and print
//! Lucas tables from the command line.
//!
//! Exit codes: 0 ok, 2 usage or parse error, 3 invalid configuration,
//! 4 property failure.

mod commands;
mod report;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{Outcome, TableFormat, WordAction};
use report::{CliError, EXIT_OK};
use verify::{Suite, VerifyArgs};

#[derive(Parser)]
#[command(name = "gamma2", version, about = "Exact verification of involutory matrix representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the matrix image of a word under a configuration.
    Repr {
        /// Config file: one comma-separated tuple per line.
        config: PathBuf,
        /// Word such as "x1 x2^3 x1"; "e" is the identity.
        word: String,
        #[arg(long)]
        json: bool,
        /// Reject tuples that share a coordinate.
        #[arg(long)]
        strict: bool,
        /// Also print a floating-point approximation.
        #[arg(long)]
        approx: bool,
    },
    /// Run a seeded property sweep.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest power / index checked.
        #[arg(long, default_value_t = 30)]
        n: u64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Number of generators (homomorphism and sampled scan).
        #[arg(long, default_value_t = 2)]
        generators: usize,
        #[arg(long, env = "GAMMA2_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        cases: u64,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        /// Bound on sampled numerators and denominators.
        #[arg(long, default_value_t = 9)]
        bound: i64,
        /// Config file for the scan suite; sampled from the seed when absent.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the Lucas triangle.
    Lucas {
        #[arg(long, default_value_t = 10)]
        rows: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
        /// Append the row sums (Lucas numbers).
        #[arg(long)]
        numbers: bool,
        #[arg(long)]
        json: bool,
    },
    /// Reduce, invert, or classify a word.
    Word {
        #[arg(value_enum)]
        action: WordAction,
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Compare the closed-form and brute-force traces of T^n.
    Trace {
        config: PathBuf,
        #[arg(long, default_value_t = 2)]
        n: u64,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Repr { .. } => "repr",
            Command::Verify { .. } => "verify",
            Command::Lucas { .. } => "lucas",
            Command::Word { .. } => "word",
            Command::Trace { .. } => "trace",
        }
    }

    fn json(&self) -> bool {
        match self {
            Command::Repr { json, .. }
            | Command::Verify { json, .. }
            | Command::Lucas { json, .. }
            | Command::Word { json, .. }
            | Command::Trace { json, .. } => *json,
        }
    }

    fn run(self) -> Result<Outcome, CliError> {
        match self {
            Command::Repr { config, word, strict, approx, .. } => {
                commands::repr(&config, &word, strict, approx)
            }
            Command::Verify {
                suite,
                n,
                dim,
                generators,
                seed,
                cases,
                max_len,
                bound,
                config,
                strict,
                ..
            } => verify::run(&VerifyArgs {
                suite,
                n,
                dim,
                generators,
                seed,
                cases,
                max_len,
                bound,
                config,
                strict,
            }),
            Command::Lucas { rows, format, numbers, .. } => commands::lucas(rows, format, numbers),
            Command::Word { action, word, .. } => commands::word(action, &word),
            Command::Trace { config, n, strict, .. } => commands::trace(&config, n, strict),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.command.name();
    let json = cli.command.json();
    let mut stdout = std::io::stdout().lock();

    let code = match cli.command.run() {
        Ok(outcome) => {
            if json {
                let s = serde_json::to_string_pretty(&outcome.report).expect("report serializes");
                writeln!(stdout, "{s}").ok();
            } else {
                write!(stdout, "{}", outcome.text).ok();
            }
            outcome.report.exit_code()
        }
        Err(err) => {
            let code = err.code;
            if json {
                let s = serde_json::to_string_pretty(&err.into_report(name)).expect("report serializes");
                writeln!(stdout, "{s}").ok();
            } else {
                eprintln!("error: {}", err.message);
                for d in &err.details {
                    if let Some(v) = d.get("violation").and_then(|v| v.as_str()) {
                        eprintln!("  {v}");
                    }
                }
            }
            code
        }
    };
    if code == EXIT_OK {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(code)
    }
}
