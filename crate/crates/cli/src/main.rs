use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

mod compute;
mod records;
mod sweep;

use compute::Family;
use sweep::{Conjecture, SuiteArg};

#[derive(Debug, Parser)]
#[command(
    name = "qcong",
    version,
    about = "Exact q-Euler and q-Salie polynomials, congruence checks and conjecture sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, clap::Args)]
struct Output {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct BoundArgs {
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    m_max: Option<usize>,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long)]
    d_max: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a family for indices 0..=n (1..=n for divisor families).
    Compute {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Order for gen-euler; lower index for gauss (prints one value).
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Run theorem checks; exits 1 if any instance fails.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        bounds: BoundArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Sweep an open conjecture; failures are reported, not fatal.
    Explore {
        #[arg(long, value_enum)]
        conjecture: Conjecture,
        #[command(flatten)]
        bounds: BoundArgs,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Io(#[from] io::Error),
}

fn open_output(out: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Runs the command and returns whether every theorem check passed.
fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Compute {
            family,
            n,
            k,
            output,
        } => {
            let records = compute::records(family, n, k)?;
            let mut w = open_output(&output.out)?;
            compute::write(&mut w, &records, output.format == Format::Json)?;
            w.flush()?;
            Ok(true)
        }
        Command::Verify {
            suite,
            bounds,
            output,
        } => {
            let cap = sweep::env_cap()?;
            let summary = sweep::verify(suite, &bounds, cap)?;
            let mut w = open_output(&output.out)?;
            summary.write(&mut w, output.format == Format::Json)?;
            w.flush()?;
            Ok(summary.counts.failed == 0)
        }
        Command::Explore {
            conjecture,
            bounds,
            output,
        } => {
            let cap = sweep::env_cap()?;
            let summary = sweep::explore(conjecture, &bounds, cap)?;
            let mut w = open_output(&output.out)?;
            summary.write(&mut w, output.format == Format::Json)?;
            w.flush()?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
