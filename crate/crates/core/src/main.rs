use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use symgauge::harness::{self, Command, RunConfig};

/// Symmetric gauge norms, skew-Hermitian certificates, and commutator
/// generator recovery — a reproducible numerical laboratory.
#[derive(Debug, Parser)]
#[command(name = "symgauge", version, about)]
struct Cli {
    /// What to run.
    #[arg(long, value_enum)]
    command: Command,

    /// Gauge descriptor: lp:P (P >= 1 or inf), orlicz:pow:P, orlicz:exppow:P,
    /// lorentz:pow:A, lorentz:log, marcinkiewicz:pow:A, marcinkiewicz:log.
    #[arg(long, default_value = "lp:2")]
    gauge: String,

    /// Matrix dimension (2..=32).
    #[arg(long, default_value_t = 3)]
    dim: usize,

    /// Witness count per random family.
    #[arg(long, default_value_t = 100)]
    trials: usize,

    /// Seed for every pseudo-random fixture.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Override the skew-Hermitian verdict tolerance (default 1e-7).
    #[arg(long)]
    tolerance: Option<f64>,

    /// Write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Write a CSV of the check records here.
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig {
        command: cli.command,
        gauge: cli.gauge,
        dim: cli.dim,
        trials: cli.trials,
        seed: cli.seed,
        tolerance: cli.tolerance,
    };
    let report = match harness::run(&config) {
        Ok(report) => report,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };
    print!("{}", report.render_table());
    if let Some(path) = &cli.out {
        if let Err(err) = std::fs::write(path, report.to_json()) {
            eprintln!("error: cannot write {}: {err}", path.display());
            return ExitCode::from(2);
        }
    }
    if let Some(path) = &cli.csv {
        if let Err(err) = std::fs::write(path, report.to_csv()) {
            eprintln!("error: cannot write {}: {err}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
