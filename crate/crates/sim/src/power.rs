//! Monte Carlo rejection-rate sweeps.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use twosample::rng::stream;
use twosample::{multi_test, ResamplePlan, StatKind};

use crate::baseline::{f_test, t_test};
use crate::dgp::{draw_dgp, DgpSpec, Family};
use crate::error::{Result, SimError};

/// A test in a power study: one of the resampling ECDF tests or a
/// parametric baseline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum TestKind {
    Ecdf(StatKind),
    TTest,
    FTest,
}

impl TestKind {
    pub fn name(self) -> &'static str {
        match self {
            TestKind::Ecdf(k) => k.name(),
            TestKind::TTest => "ttest",
            TestKind::FTest => "ftest",
        }
    }

    /// The six ECDF tests.
    pub fn ecdf_all() -> Vec<TestKind> {
        StatKind::ALL.into_iter().map(TestKind::Ecdf).collect()
    }

    /// The six ECDF tests plus the baseline that is optimal (or customary)
    /// for the family.
    pub fn defaults_for(family: &Family) -> Vec<TestKind> {
        let mut tests = TestKind::ecdf_all();
        match family {
            Family::VarInflate { .. } => tests.push(TestKind::FTest),
            Family::Null => tests.extend([TestKind::TTest, TestKind::FTest]),
            _ => tests.push(TestKind::TTest),
        }
        tests
    }
}

impl fmt::Display for TestKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TestKind {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ttest" | "t" => Ok(TestKind::TTest),
            "ftest" | "f" => Ok(TestKind::FTest),
            other => Ok(TestKind::Ecdf(other.parse()?)),
        }
    }
}

impl TryFrom<String> for TestKind {
    type Error = SimError;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<TestKind> for String {
    fn from(t: TestKind) -> String {
        t.name().to_string()
    }
}

/// One grid point of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub value: f64,
    pub spec: DgpSpec,
}

/// Rejection rates of each test at each grid point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerCurve {
    /// Name of the swept variable (`mu`, `sigma2`, `n`).
    pub sweep: String,
    pub grid: Vec<f64>,
    pub tests: Vec<TestKind>,
    /// `rates[g][t]`: rejection rate of `tests[t]` at `grid[g]`.
    pub rates: Vec<Vec<f64>>,
    /// Binomial standard errors, same layout as `rates`.
    pub se: Vec<Vec<f64>>,
    pub n_sims: usize,
    pub alpha: f64,
    pub seed: u64,
}

/// One CSV row.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerRow {
    pub sweep_value: f64,
    pub test: TestKind,
    pub rate: f64,
    pub se: f64,
    pub n_sims: usize,
}

/// `sqrt(rate (1 - rate) / n_sims)`.
pub fn standard_error(rate: f64, n_sims: usize) -> f64 {
    (rate * (1.0 - rate) / n_sims as f64).sqrt()
}

impl PowerCurve {
    fn test_index(&self, test: TestKind) -> Option<usize> {
        self.tests.iter().position(|&t| t == test)
    }

    pub fn rate(&self, grid_index: usize, test: TestKind) -> Option<f64> {
        Some(self.rates.get(grid_index)?[self.test_index(test)?])
    }

    pub fn standard_error(&self, grid_index: usize, test: TestKind) -> Option<f64> {
        Some(self.se.get(grid_index)?[self.test_index(test)?])
    }

    /// Rejection rates of one test across the grid.
    pub fn series(&self, test: TestKind) -> Option<Vec<f64>> {
        let t = self.test_index(test)?;
        Some(self.rates.iter().map(|row| row[t]).collect())
    }

    pub fn mean_power(&self, test: TestKind) -> Option<f64> {
        let s = self.series(test)?;
        Some(s.iter().sum::<f64>() / s.len() as f64)
    }

    /// Tests sorted by mean power across the grid, highest first.
    pub fn legend_order(&self) -> Vec<TestKind> {
        let mut order: Vec<(TestKind, f64)> = self
            .tests
            .iter()
            .map(|&t| (t, self.mean_power(t).unwrap_or(0.0)))
            .collect();
        order.sort_by(|x, y| y.1.total_cmp(&x.1));
        order.into_iter().map(|(t, _)| t).collect()
    }

    pub fn rows(&self) -> Vec<PowerRow> {
        let mut rows = Vec::with_capacity(self.grid.len() * self.tests.len());
        for (g, &value) in self.grid.iter().enumerate() {
            for (t, &test) in self.tests.iter().enumerate() {
                rows.push(PowerRow {
                    sweep_value: value,
                    test,
                    rate: self.rates[g][t],
                    se: self.se[g][t],
                    n_sims: self.n_sims,
                });
            }
        }
        rows
    }

    /// `sweep_value,test,rate,se,n_sims`, one row per grid point and test.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("sweep_value,test,rate,se,n_sims\n");
        for r in self.rows() {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                r.sweep_value, r.test, r.rate, r.se, r.n_sims
            );
        }
        out
    }
}

/// Runs one simulation: draws the data and reports, per test, whether it
/// rejected at `alpha`.
fn simulate_once(
    spec: &DgpSpec,
    tests: &[TestKind],
    ecdf: &[StatKind],
    alpha: f64,
    plan: &ResamplePlan,
    stream_index: u64,
) -> Result<Vec<bool>> {
    let mut rng = stream(plan.seed, stream_index);
    let (a, b) = draw_dgp(spec, &mut rng)?;
    let inner = plan.with_seed(rng.random()).with_workers(1);
    let ecdf_results = if ecdf.is_empty() {
        Vec::new()
    } else {
        multi_test(&a, &b, ecdf, &inner)?
    };
    tests
        .iter()
        .map(|&t| {
            let p = match t {
                TestKind::Ecdf(kind) => {
                    ecdf_results
                        .iter()
                        .find(|r| r.method == kind)
                        .unwrap()
                        .p_value
                }
                TestKind::TTest => t_test(&a, &b)?,
                TestKind::FTest => f_test(&a, &b)?,
            };
            Ok(p <= alpha)
        })
        .collect()
}

/// Estimates each test's rejection rate at each grid point from `n_sims`
/// simulated data sets.
///
/// Simulation `s` at grid point `g` draws from stream `(g << 32) | s` of
/// `plan.seed`, so the curve is a pure function of the inputs and does not
/// depend on `plan.workers`, which sets the number of threads simulations
/// are spread over.
pub fn run_power_sweep(
    sweep: &str,
    points: &[SweepPoint],
    tests: &[TestKind],
    alpha: f64,
    n_sims: usize,
    plan: &ResamplePlan,
) -> Result<PowerCurve> {
    plan.validate()?;
    if n_sims == 0 {
        return Err(SimError::InvalidInput("n_sims must be at least 1".into()));
    }
    if points.is_empty() || tests.is_empty() {
        return Err(SimError::InvalidInput("empty grid or test list".into()));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(SimError::InvalidInput(format!(
            "alpha {alpha} not in (0, 1)"
        )));
    }
    if n_sims >= 1 << 32 || points.len() >= 1 << 31 {
        return Err(SimError::InvalidInput("sweep too large".into()));
    }
    let ecdf: Vec<StatKind> = tests
        .iter()
        .filter_map(|t| match t {
            TestKind::Ecdf(k) => Some(*k),
            _ => None,
        })
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(plan.workers)
        .build()
        .map_err(|e| SimError::InvalidInput(format!("thread pool: {e}")))?;

    let mut rates = Vec::with_capacity(points.len());
    let mut se = Vec::with_capacity(points.len());
    for (g, point) in points.iter().enumerate() {
        let outcomes: Vec<Vec<bool>> = pool.install(|| {
            (0..n_sims)
                .into_par_iter()
                .map(|s| {
                    let index = ((g as u64) << 32) | s as u64;
                    simulate_once(&point.spec, tests, &ecdf, alpha, plan, index)
                })
                .collect::<Result<_>>()
        })?;
        let row: Vec<f64> = (0..tests.len())
            .map(|t| outcomes.iter().filter(|o| o[t]).count() as f64 / n_sims as f64)
            .collect();
        se.push(row.iter().map(|&r| standard_error(r, n_sims)).collect());
        rates.push(row);
    }

    Ok(PowerCurve {
        sweep: sweep.to_string(),
        grid: points.iter().map(|p| p.value).collect(),
        tests: tests.to_vec(),
        rates,
        se,
        n_sims,
        alpha,
        seed: plan.seed,
    })
}
