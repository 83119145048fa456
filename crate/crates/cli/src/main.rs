//! `twosample`: run two-sample ECDF tests on data files, power studies and
//! timing benchmarks.
//!
//! Exit codes: 0 success, 1 output not written, 2 usage or parse error
//! (the message names the file and line), 3 input that parses but cannot be
//! tested, such as an empty or non-finite sample.

mod commands;
mod error;
mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use twosample::{ResampleMode, StatKind};

use crate::output::Format;

#[derive(Parser, Debug)]
#[command(
    name = "twosample",
    version,
    about = "Two-sample tests based on empirical CDFs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test whether two samples come from the same distribution.
    Test(TestArgs),
    /// Test a sample against a known distribution.
    OneSample(OneSampleArgs),
    /// Estimate rejection rates over a grid of data-generating processes.
    PowerSweep(SweepArgs),
    /// Time the DTS test as the sample size grows.
    Bench(BenchArgs),
}

/// `all` or one statistic name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    All,
    One(StatKind),
}

impl Method {
    pub fn kinds(self) -> Vec<StatKind> {
        match self {
            Method::All => StatKind::ALL.to_vec(),
            Method::One(k) => vec![k],
        }
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(Method::All);
        }
        s.parse()
            .map(Method::One)
            .map_err(|e: twosample::Error| e.to_string())
    }
}

#[derive(Args, Debug)]
pub struct PlanArgs {
    /// Number of resamples R.
    #[arg(long, default_value_t = 2000)]
    resamples: usize,
    /// Master seed.
    #[arg(long, env = "TWOSAMPLE_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "permutation")]
    mode: ResampleMode,
    /// Worker threads. Results do not depend on this.
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Comma-separated field holding the values: 1-based index or header name.
    #[arg(long)]
    col: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
pub struct TestArgs {
    /// ks, kuiper, cvm, ad, wass, dts or all.
    #[arg(long, default_value = "dts")]
    method: Method,
    /// First sample, one value per line.
    #[arg(long)]
    a: PathBuf,
    /// Second sample.
    #[arg(long)]
    b: PathBuf,
    /// Positive weights for the first sample, one per line.
    #[arg(long, requires = "weights_b")]
    weights_a: Option<PathBuf>,
    #[arg(long, requires = "weights_a")]
    weights_b: Option<PathBuf>,
    #[command(flatten)]
    plan: PlanArgs,
    #[command(flatten)]
    io: InputArgs,
}

#[derive(Args, Debug)]
pub struct OneSampleArgs {
    #[arg(long, default_value = "dts")]
    method: Method,
    #[arg(long)]
    a: PathBuf,
    /// `normal:MU,SIGMA` or `uniform:LO,HI`.
    #[arg(long = "ref")]
    reference: twosample::Reference,
    /// Reference draws per observation; 10 or 100 are typical.
    #[arg(long, default_value_t = 10)]
    k: usize,
    #[command(flatten)]
    plan: PlanArgs,
    #[command(flatten)]
    io: InputArgs,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// null, mean-shift, var-inflate, mean-and-var, mix-mean, mix-var or mix-both.
    #[arg(long)]
    dgp: String,
    /// Parameter grid LO:HI:STEP (mean-shift and var-inflate).
    #[arg(long, conflicts_with = "n_grid")]
    grid: Option<String>,
    /// Per-sample size.
    #[arg(long, conflicts_with = "n_grid")]
    n: Option<usize>,
    /// Per-sample sizes to sweep, comma-separated.
    #[arg(long)]
    n_grid: Option<String>,
    /// Tests to run, comma-separated; defaults to the six ECDF tests and a baseline.
    #[arg(long)]
    tests: Option<String>,
    #[arg(long, default_value_t = 2000)]
    sims: usize,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[command(flatten)]
    plan: PlanArgs,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write the table here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also render the curves as SVG.
    #[arg(long)]
    plot: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Pooled sample sizes, comma-separated.
    #[arg(long)]
    ns: String,
    #[arg(long, default_value_t = 5)]
    reps: usize,
    #[command(flatten)]
    plan: PlanArgs,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Test(args) => commands::test(&args),
        Command::OneSample(args) => commands::one_sample(&args),
        Command::PowerSweep(args) => commands::power_sweep(&args),
        Command::Bench(args) => commands::bench(&args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("twosample: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
