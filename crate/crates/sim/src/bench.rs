//! Wall-clock timing of the DTS resampling test as the pooled size grows.

use std::fmt::Write as _;
use std::time::Instant;

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use twosample::rng::stream;
use twosample::{two_sample_test, ResamplePlan, Sample, StatKind};

use crate::error::{Result, SimError};

/// Timing summary for one pooled size `n = n_a + n_b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub mean_seconds: f64,
    /// `mean ± 1.96 sd` across repetitions, the lower end clipped at 0.
    pub lo95: f64,
    pub hi95: f64,
}

fn normal_sample(rng: &mut impl Rng, n: usize) -> Sample {
    Sample::new((0..n).map(|_| rng.sample(StandardNormal)).collect())
        .expect("normal draws are finite")
}

/// Times `reps` runs of the DTS test at each pooled size, with `n / 2`
/// standard normal observations in each sample.
pub fn bench_runtime(n_grid: &[usize], plan: &ResamplePlan, reps: usize) -> Result<Vec<BenchRow>> {
    if reps == 0 {
        return Err(SimError::InvalidInput("reps must be at least 1".into()));
    }
    if let Some(n) = n_grid.iter().find(|&&n| n < 2) {
        return Err(SimError::InvalidInput(format!(
            "pooled size {n} is below 2"
        )));
    }
    plan.validate()?;

    n_grid
        .iter()
        .map(|&n| {
            let n_a = n / 2;
            let times = (0..reps)
                .map(|rep| {
                    let mut rng = stream(plan.seed, rep as u64);
                    let a = normal_sample(&mut rng, n_a);
                    let b = normal_sample(&mut rng, n - n_a);
                    let start = Instant::now();
                    two_sample_test(&a, &b, StatKind::Dts, plan)?;
                    Ok(start.elapsed().as_secs_f64())
                })
                .collect::<Result<Vec<f64>>>()?;
            Ok(summarize(n, &times))
        })
        .collect()
}

fn summarize(n: usize, times: &[f64]) -> BenchRow {
    let k = times.len() as f64;
    let mean = times.iter().sum::<f64>() / k;
    let sd = if times.len() > 1 {
        (times.iter().map(|t| (t - mean).powi(2)).sum::<f64>() / (k - 1.0)).sqrt()
    } else {
        0.0
    };
    BenchRow {
        n,
        mean_seconds: mean,
        lo95: (mean - 1.96 * sd).max(0.0),
        hi95: mean + 1.96 * sd,
    }
}

/// `n,mean_seconds,lo95,hi95`.
pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("n,mean_seconds,lo95,hi95\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{}", r.n, r.mean_seconds, r.lo95, r.hi95);
    }
    out
}
