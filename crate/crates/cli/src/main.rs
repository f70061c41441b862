//! `pentasigma` — command-line front end.
//!
//! Subcommands: `sigma-seq`, `rho`, `partition`, `primes`, `matrix`,
//! `verify`, `bench`. Documents go to stdout (or `--out FILE`);
//! diagnostics go to stderr. Exit codes: 0 success, 1 computational
//! inconsistency or resource cap, 2 usage error.

mod bench;
mod output;
mod verify;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use output::{bench_document, list_document, matrix_document, sequence_document, OutputFormat};
use pentasigma::{
    apply, build_window, euler_inverse, partition_up_to, primes_up_to, rho_up_to, sigma_up_to,
    Error,
};
use verify::SuiteId;

/// The inverse-matrix route multiplies by the dense partition column and
/// is O(n²) in big integers; keep it at desk scale.
const INVERSE_MATRIX_CAP: usize = 8_192;

#[derive(Parser)]
#[command(
    name = "pentasigma",
    version,
    about = "Divisor counts, primes, and partitions via pentagonal-number recurrences and the sigma matrix"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    /// Unfold the pentagonal recurrence term by term.
    Recurrence,
    /// Apply the inverse Euler matrix to the sigma vector.
    InverseMatrix,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the sigma sequence sigma(0..n)
    #[command(name = "sigma-seq")]
    SigmaSeq {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Txt)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit rho(0..n): divisor counts with rho(0) = 1
    Rho {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Txt)]
        format: OutputFormat,
        #[arg(long, value_enum, default_value_t = Via::Recurrence)]
        via: Via,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the partition numbers p(0..n)
    Partition {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Txt)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the primes <= n detected through rho(n) = 2
    Primes {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Txt)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export a sigma-matrix window of rows 0..=rows, columns 0..=cols
    Matrix {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Txt)]
        format: OutputFormat,
        /// Tag each cell with its region (U, L1, L2; * marks the correction border)
        #[arg(long)]
        annotate: bool,
        /// Maximum number of cells the window may hold
        #[arg(long, default_value_t = 100_000_000)]
        cell_cap: u128,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run invariant suites against independent oracles; emits a JSON report
    Verify {
        #[arg(long)]
        n: u64,
        /// Comma-separated subset of the suites (default: all)
        #[arg(long, value_enum, value_delimiter = ',')]
        suites: Vec<SuiteId>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the main computations (reported as data, no pass/fail)
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Txt)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(document: String, out: Option<PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(&path, document)
            .map_err(|e| Error::Resource(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(document.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Error::Resource(format!("cannot write document: {e}")))
        }
    }
}

fn rho_document(n: usize, format: OutputFormat, via: Via) -> Result<String, Error> {
    let sigma = sigma_up_to(n)?;
    let values: Vec<i64> = match via {
        Via::Recurrence => rho_up_to(n, &sigma)?.values().to_vec(),
        Via::InverseMatrix => {
            if n > INVERSE_MATRIX_CAP {
                return Err(Error::Resource(format!(
                    "--via inverse-matrix is capped at n <= {INVERSE_MATRIX_CAP}, got {n}"
                )));
            }
            let sigma_vec: Vec<BigInt> = sigma.values().iter().map(|&v| BigInt::from(v)).collect();
            apply(&euler_inverse(n), &sigma_vec)?
                .iter()
                .map(|value| {
                    i64::try_from(value).map_err(|_| {
                        Error::Inconsistency(format!("rho value {value} does not fit i64"))
                    })
                })
                .collect::<Result<_, _>>()?
        }
    };
    let pairs: Vec<(u64, String)> = values
        .iter()
        .enumerate()
        .map(|(m, v)| (m as u64, v.to_string()))
        .collect();
    Ok(sequence_document("n", "rho", &pairs, format))
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::SigmaSeq { n, format, out } => {
            let sigma = sigma_up_to(n)?;
            let pairs: Vec<(u64, String)> = sigma
                .values()
                .iter()
                .enumerate()
                .map(|(m, v)| (m as u64, v.to_string()))
                .collect();
            emit(sequence_document("n", "sigma", &pairs, format), out)
        }
        Command::Rho {
            n,
            format,
            via,
            out,
        } => emit(rho_document(n, format, via)?, out),
        Command::Partition { n, format, out } => {
            let partitions = partition_up_to(n);
            let pairs: Vec<(u64, String)> = partitions
                .values()
                .iter()
                .enumerate()
                .map(|(m, p)| (m as u64, p.to_string()))
                .collect();
            emit(sequence_document("n", "p", &pairs, format), out)
        }
        Command::Primes { n, format, out } => {
            if n < 2 {
                return Err(Error::Usage("primes requires --n >= 2".into()));
            }
            let sigma = sigma_up_to(n)?;
            let rho = rho_up_to(n, &sigma)?;
            let primes = primes_up_to(n, &rho)?;
            emit(list_document("prime", &primes, format), out)
        }
        Command::Matrix {
            rows,
            cols,
            format,
            annotate,
            cell_cap,
            out,
        } => {
            let cells = (rows as u128 + 1) * (cols as u128 + 1);
            if cells > cell_cap {
                return Err(Error::Resource(format!(
                    "window of {cells} cells exceeds the cap of {cell_cap}"
                )));
            }
            let window = build_window(rows, cols)?;
            emit(matrix_document(&window, format, annotate), out)
        }
        Command::Verify { n, suites, out } => {
            let selected = if suites.is_empty() {
                SuiteId::ALL.to_vec()
            } else {
                suites
            };
            let report = verify::run(n, &selected)?;
            let all_pass = report.pass;
            emit(output::json_document(&report), out)?;
            if all_pass {
                Ok(())
            } else {
                Err(Error::Inconsistency(
                    "one or more verification suites failed".into(),
                ))
            }
        }
        Command::Bench { n, format, out } => {
            if n < 2 {
                return Err(Error::Usage("bench requires --n >= 2".into()));
            }
            let rows = bench::run(n)?;
            emit(bench_document(&rows, format), out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("pentasigma: {error}");
            match error {
                Error::Usage(_) => ExitCode::from(2),
                Error::Range(_) | Error::Inconsistency(_) | Error::Resource(_) => ExitCode::from(1),
            }
        }
    }
}
