//! `crystalkit`: command line access to the crystalkit library.
//!
//! Exit codes: 0 success, 1 bad input or domain error, 2 a verification
//! failed, 3 an element budget was exceeded.

mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use crystalkit::partitions::Partition;
use crystalkit::Error;

/// Budget used when `CRYSTALKIT_BUDGET` is unset.
const DEFAULT_BUDGET: usize = crystalkit::crystal::DEFAULT_BUDGET;

#[derive(Parser, Debug)]
#[command(
    name = "crystalkit",
    version,
    about = "Crystals, quantum wedges and socle multiplicities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A comma separated list of integers given as one flag value.
#[derive(Clone, Debug)]
struct IntList(Vec<i64>);

fn int_list(s: &str) -> Result<IntList, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()
        .map(IntList)
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Littlewood-Richardson coefficient c^λ_{μν}.
    Lr {
        #[arg(long, value_parser = partition)]
        lam: Partition,
        #[arg(long, value_parser = partition)]
        mu: Partition,
        #[arg(long, value_parser = partition)]
        nu: Partition,
        #[arg(long)]
        json: bool,
    },
    /// Decompose SST_N(μ) ⊗ SST∨_N(ν) into components labelled by pairs.
    TensorDecompose {
        #[arg(long, value_parser = partition, default_value = "")]
        mu: Partition,
        #[arg(long, value_parser = partition, default_value = "")]
        nu: Partition,
        /// Rank; defaults to |μ|+|ν|+2.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Count bitableaux of shape (μ,ν) and check the crystal isomorphism.
    Bitableaux {
        #[arg(long, value_parser = partition, default_value = "")]
        mu: Partition,
        #[arg(long, value_parser = partition, default_value = "")]
        nu: Partition,
        /// Rank; defaults to ℓ(μ)+ℓ(ν)+1.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Decompose the crystal of m×n 0-1 matrices under both actions.
    Howe {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// H-set for the step from (μ,ν) down to (ζ,η).
    HSet {
        #[arg(long, value_parser = partition, default_value = "")]
        mu: Partition,
        #[arg(long, value_parser = partition, default_value = "")]
        nu: Partition,
        #[arg(long, value_parser = partition, default_value = "")]
        zeta: Partition,
        #[arg(long, value_parser = partition, default_value = "")]
        eta: Partition,
        #[arg(long)]
        json: bool,
    },
    /// Expand a wedge word such as "(1,2),(2,1)" in standard monomials.
    Straighten {
        #[arg(long)]
        word: String,
        /// Number of rows; defaults to the largest row index in the word.
        #[arg(long)]
        m: Option<u32>,
        /// Number of columns; defaults to the largest column index.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Canonical basis of one bi-weight space, as a CSV base-change matrix.
    CanonicalBasis {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        /// Row sums, comma separated.
        #[arg(long, value_parser = int_list)]
        row_weight: IntList,
        /// Column sums, comma separated.
        #[arg(long, value_parser = int_list)]
        col_weight: IntList,
        #[arg(long)]
        json: bool,
    },
    /// DOT graph of a finite crystal.
    CrystalGraph {
        #[arg(long, value_enum)]
        kind: commands::GraphKind,
        #[arg(long, value_parser = partition, default_value = "")]
        mu: Partition,
        #[arg(long, value_parser = partition, default_value = "")]
        nu: Partition,
        /// Rank for tableau crystals, number of columns for matrices.
        #[arg(long)]
        n: u32,
        /// Number of rows for matrices.
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long)]
        json: bool,
    },
    /// Socle layers of V_{α,β} ⊗ V_{γ,δ}.
    Socle {
        #[arg(long, value_parser = partition, default_value = "")]
        a: Partition,
        #[arg(long, value_parser = partition, default_value = "")]
        b: Partition,
        #[arg(long, value_parser = partition, default_value = "")]
        g: Partition,
        #[arg(long, value_parser = partition, default_value = "")]
        d2: Partition,
        /// Only this layer; all layers when omitted.
        #[arg(long)]
        layer: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check that the two transition matrices are inverse up to a degree.
    TransitionCheck {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check a non-symmetric Cauchy identity on truncated series.
    CauchyVerify {
        /// E-E or E-H.
        #[arg(long)]
        kind: String,
        /// Number of x and of y variables.
        #[arg(long)]
        k: usize,
        /// Total degree cutoff.
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        json: bool,
    },
}

/// What a command prints and whether its check succeeded.
pub struct Outcome {
    pub stdout: String,
    pub failure: Option<String>,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Self {
            stdout,
            failure: None,
        }
    }
}

fn budget() -> Result<usize, Error> {
    match std::env::var("CRYSTALKIT_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::Parse(format!("CRYSTALKIT_BUDGET={v:?} is not a positive integer"))
        }),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn error_line(kind: &str, message: &str) -> String {
    serde_json::json!({ "error": kind, "message": message }).to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let msg = e.to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ");
            eprintln!("{}", error_line("usage", first));
            return ExitCode::from(1);
        }
    };
    let result = budget().and_then(|b| commands::run(cli.command, b));
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            match out.failure {
                None => ExitCode::SUCCESS,
                Some(msg) => {
                    eprintln!("{}", error_line("verification", &msg));
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            let (kind, code) = match &e {
                Error::Parse(_) => ("parse", 1),
                Error::Domain(_) => ("domain", 1),
                Error::Budget { .. } => ("budget", 3),
            };
            eprintln!("{}", error_line(kind, &e.to_string()));
            ExitCode::from(code)
        }
    }
}
