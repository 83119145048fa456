use std::io::Write as _;
use std::path::{Path, PathBuf};

use twosample::one_sample::reference_sample;
use twosample::weights::DEFAULT_MAX_K;
use twosample::{
    expand_weighted_pair, multi_test, ResamplePlan, Sample, TestResult, WeightedSample,
};
use twosample_sim::sweep::default_parameter_grid;
use twosample_sim::{
    bench_csv, bench_runtime, parameter_sweep, parse_grid, render_svg, run_power_sweep, size_sweep,
    Family, TestKind,
};

use crate::error::{CliError, Result};
use crate::input::{parse_list, read_values, Column};
use crate::output::{json, results_csv, results_text, Format};
use crate::{BenchArgs, OneSampleArgs, PlanArgs, SweepArgs, TestArgs};

/// Per-sample sizes swept when a family has no parameter and no sizes are given.
const MIXTURE_SIZES: [usize; 7] = [100, 200, 400, 800, 1600, 3200, 6400];
const DEFAULT_SIZES: [usize; 7] = [10, 20, 40, 80, 160, 320, 640];
const DEFAULT_N: usize = 50;

fn plan(p: &PlanArgs) -> Result<ResamplePlan> {
    let plan = ResamplePlan::default()
        .with_resamples(p.resamples)
        .with_seed(p.seed)
        .with_mode(p.mode)
        .with_workers(p.workers);
    plan.validate()?;
    Ok(plan)
}

fn sample(path: &Path, col: &Column) -> Result<Sample> {
    Ok(Sample::new(read_values(path, col)?)?)
}

fn weighted(values: &Path, weights: &Path, col: &Column) -> Result<WeightedSample> {
    Ok(WeightedSample::new(
        read_values(values, col)?,
        read_values(weights, col)?,
    )?)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|source| CliError::Write {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

fn render_results(results: &[TestResult], format: Format) -> String {
    match format {
        Format::Json => json(results),
        Format::Csv => results_csv(results),
        Format::Text => results_text(results),
    }
}

pub fn test(args: &TestArgs) -> Result<()> {
    let plan = plan(&args.plan)?;
    let col = Column::parse(args.io.col.as_deref())?;
    let (a, b) = match (&args.weights_a, &args.weights_b) {
        (Some(wa), Some(wb)) => {
            let wa = weighted(&args.a, wa, &col)?;
            let wb = weighted(&args.b, wb, &col)?;
            let (ea, eb) = expand_weighted_pair(&wa, &wb, DEFAULT_MAX_K)?;
            eprintln!(
                "twosample: weights expanded by k = {} ({} and {} pooled observations)",
                ea.k,
                ea.sample.len(),
                eb.sample.len()
            );
            (ea.sample, eb.sample)
        }
        _ => (sample(&args.a, &col)?, sample(&args.b, &col)?),
    };
    let results = multi_test(&a, &b, &args.method.kinds(), &plan)?;
    emit(&render_results(&results, args.io.format), None)
}

pub fn one_sample(args: &OneSampleArgs) -> Result<()> {
    let plan = plan(&args.plan)?;
    if args.k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    let col = Column::parse(args.io.col.as_deref())?;
    let a = sample(&args.a, &col)?;
    let n_b = args
        .k
        .checked_mul(a.len())
        .ok_or_else(|| CliError::Usage("--k times the sample size overflows".into()))?;
    let b = reference_sample(&args.reference, n_b, plan.seed)?;
    let results = multi_test(&a, &b, &args.method.kinds(), &plan)?;
    emit(&render_results(&results, args.io.format), None)
}

pub fn power_sweep(args: &SweepArgs) -> Result<()> {
    let plan = plan(&args.plan)?;
    let family: Family = args.dgp.parse()?;
    let tests = match &args.tests {
        Some(list) => parse_list::<TestKind>(list, "test")?,
        None => TestKind::defaults_for(&family),
    };
    let (sweep, points) = match (&args.grid, &args.n_grid, family.parameter()) {
        (Some(_), _, None) => {
            return Err(CliError::Usage(format!(
                "--grid needs a family with a parameter, `{family}` has none"
            )))
        }
        (Some(grid), None, Some(name)) => {
            let grid = parse_grid(grid)?;
            let n = args.n.unwrap_or(DEFAULT_N);
            (name, parameter_sweep(&family, &grid, n)?)
        }
        (None, Some(ns), _) => ("n", size_sweep(&family, &parse_list(ns, "size")?)?),
        (None, None, Some(name)) => {
            let grid = default_parameter_grid(&family).expect("parametric family has a grid");
            (
                name,
                parameter_sweep(&family, &grid, args.n.unwrap_or(DEFAULT_N))?,
            )
        }
        (None, None, None) => {
            let ns = match (args.n, &family) {
                (Some(n), _) => vec![n],
                (None, Family::MixMean | Family::MixVar | Family::MixBoth) => {
                    MIXTURE_SIZES.to_vec()
                }
                (None, _) => DEFAULT_SIZES.to_vec(),
            };
            ("n", size_sweep(&family, &ns)?)
        }
        (Some(_), Some(_), _) => unreachable!("clap rejects --grid with --n-grid"),
    };
    let curve = run_power_sweep(sweep, &points, &tests, args.alpha, args.sims, &plan)?;
    let table = match args.format {
        Format::Json => json(&[&curve]),
        Format::Csv => curve.to_csv(),
        Format::Text => {
            return Err(CliError::Usage("power-sweep writes json or csv".into()));
        }
    };
    if let Some(path) = &args.plot {
        emit(&render_svg(&curve), Some(path))?;
    }
    emit(&table, args.out.as_ref())
}

pub fn bench(args: &BenchArgs) -> Result<()> {
    let plan = plan(&args.plan)?;
    let ns: Vec<usize> = parse_list(&args.ns, "size")?;
    let rows = bench_runtime(&ns, &plan, args.reps)?;
    let table = match args.format {
        Format::Json => json(&[&rows]),
        Format::Csv => bench_csv(&rows),
        Format::Text => return Err(CliError::Usage("bench writes json or csv".into())),
    };
    emit(&table, args.out.as_ref())
}
