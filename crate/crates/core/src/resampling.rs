//! Resampling p-values for any of the statistics.
//!
//! Under the null hypothesis the two samples are exchangeable, so every
//! re-split of the pooled sample into groups of the original sizes is a draw
//! from the statistic's null distribution. The p-value is the fraction of
//! resampled statistics at least as large as the observed one, with a floor
//! of `1 / (2R)` when none are.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::merge::Pool;
use crate::rng::StreamFamily;
use crate::sample::Sample;
use crate::stats::{all_stats, inverse_variance_table, scan, StatKind, Statistics};

/// How a resample is drawn from the pooled sample.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ResampleMode {
    /// Re-split the pooled sample without replacement.
    #[default]
    Permutation,
    /// Draw both groups independently, with replacement, from the pool.
    Bootstrap,
}

impl fmt::Display for ResampleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ResampleMode::Permutation => "permutation",
            ResampleMode::Bootstrap => "bootstrap",
        })
    }
}

impl FromStr for ResampleMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "permutation" => Ok(ResampleMode::Permutation),
            "bootstrap" => Ok(ResampleMode::Bootstrap),
            _ => Err(Error::InvalidInput(format!("unknown resample mode `{s}`"))),
        }
    }
}

/// Number of resamples, seed, mode and thread count for one test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResamplePlan {
    pub n_resamples: usize,
    pub seed: u64,
    pub mode: ResampleMode,
    pub workers: usize,
}

impl Default for ResamplePlan {
    fn default() -> Self {
        ResamplePlan {
            n_resamples: 2000,
            seed: 0,
            mode: ResampleMode::Permutation,
            workers: 1,
        }
    }
}

impl ResamplePlan {
    pub fn with_resamples(mut self, n_resamples: usize) -> Self {
        self.n_resamples = n_resamples;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_mode(mut self, mode: ResampleMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_resamples == 0 {
            return Err(Error::InvalidPlan("n_resamples must be at least 1".into()));
        }
        if self.workers == 0 {
            return Err(Error::InvalidPlan("workers must be at least 1".into()));
        }
        Ok(())
    }
}

/// Outcome of one resampling test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestResult {
    pub method: StatKind,
    pub statistic: f64,
    pub p_value: f64,
    pub n_resamples: usize,
    /// Resampled statistics `>=` the observed one.
    pub exceed_count: usize,
    pub seed: u64,
}

impl TestResult {
    pub fn from_counts(
        method: StatKind,
        statistic: f64,
        exceed_count: usize,
        n_resamples: usize,
        seed: u64,
    ) -> Self {
        TestResult {
            method,
            statistic,
            p_value: p_value_from_counts(exceed_count, n_resamples),
            n_resamples,
            exceed_count,
            seed,
        }
    }
}

/// `exceed / R`, or `1 / (2R)` when nothing was at least as extreme.
pub fn p_value_from_counts(exceed_count: usize, n_resamples: usize) -> f64 {
    if exceed_count == 0 {
        1.0 / (2.0 * n_resamples as f64)
    } else {
        exceed_count as f64 / n_resamples as f64
    }
}

/// Sequential selection of a uniformly random `n_a`-subset of positions
/// `0..n`: position `i` joins A with probability
/// `(still needed) / (positions left)`. Visiting positions in order lets the
/// engine draw a permutation resample while it scans the sorted pool.
struct Selector {
    need_a: usize,
    remaining: usize,
}

impl Selector {
    fn new(n_a: usize, n: usize) -> Self {
        Selector {
            need_a: n_a,
            remaining: n,
        }
    }

    #[inline]
    fn next_is_a<R: Rng + ?Sized>(&mut self, rng: &mut R) -> bool {
        let pick = if self.need_a == 0 {
            false
        } else if self.need_a == self.remaining {
            true
        } else {
            rng.random_range(0..self.remaining) < self.need_a
        };
        self.remaining -= 1;
        self.need_a -= pick as usize;
        pick
    }
}

/// Draws `n_a` then `n_b` positions uniformly with replacement from `0..n`.
fn draw_bootstrap<R: Rng + ?Sized>(
    rng: &mut R,
    n_a: usize,
    n_b: usize,
    mut to_a: impl FnMut(usize),
    mut to_b: impl FnMut(usize),
) {
    let n = n_a + n_b;
    for _ in 0..n_a {
        to_a(rng.random_range(0..n));
    }
    for _ in 0..n_b {
        to_b(rng.random_range(0..n));
    }
}

/// Draws one resample of sizes `n_a` and `n_b` from the pooled values.
///
/// Given the same generator state, the engine behind [`two_sample_test`]
/// draws the same resample from the sorted pool as this function does when
/// `joint` is sorted ascending.
pub fn resample_once<R: Rng + ?Sized>(
    joint: &[f64],
    n_a: usize,
    n_b: usize,
    mode: ResampleMode,
    rng: &mut R,
) -> Result<(Sample, Sample)> {
    if n_a == 0 || n_b == 0 {
        return Err(Error::EmptySample);
    }
    if n_a + n_b != joint.len() {
        return Err(Error::InvalidInput(format!(
            "sizes {n_a} + {n_b} do not match pooled size {}",
            joint.len()
        )));
    }
    if let Some((index, &value)) = joint.iter().enumerate().find(|(_, v)| !v.is_finite()) {
        return Err(Error::NonFinite { index, value });
    }

    let mut a = Vec::with_capacity(n_a);
    let mut b = Vec::with_capacity(n_b);
    match mode {
        ResampleMode::Permutation => {
            let mut sel = Selector::new(n_a, joint.len());
            for &x in joint {
                if sel.next_is_a(rng) {
                    a.push(x);
                } else {
                    b.push(x);
                }
            }
        }
        ResampleMode::Bootstrap => {
            draw_bootstrap(rng, n_a, n_b, |i| a.push(joint[i]), |i| b.push(joint[i]));
        }
    }
    Ok((Sample::from_vec_unchecked(a), Sample::from_vec_unchecked(b)))
}

/// Per-thread buffers reused across bootstrap resamples.
struct Scratch {
    count_a: Vec<u32>,
    count_b: Vec<u32>,
}

impl Scratch {
    fn new(pool: &Pool) -> Self {
        Scratch {
            count_a: vec![0; pool.distinct.len()],
            count_b: vec![0; pool.distinct.len()],
        }
    }
}

fn resampled_stats<R: Rng + ?Sized>(
    pool: &Pool,
    n_a: usize,
    n_b: usize,
    mode: ResampleMode,
    inv_var: &[f64],
    rng: &mut R,
    sc: &mut Scratch,
) -> Statistics {
    match mode {
        ResampleMode::Permutation => {
            let mut sel = Selector::new(n_a, pool.len());
            let groups = pool.distinct.iter().zip(&pool.sizes).map(|(&x, &size)| {
                let ca = (0..size).filter(|_| sel.next_is_a(rng)).count() as u32;
                (x, ca, size - ca)
            });
            scan(groups, n_a, n_b, inv_var)
        }
        ResampleMode::Bootstrap => {
            sc.count_a.fill(0);
            sc.count_b.fill(0);
            let (ca, cb) = (&mut sc.count_a, &mut sc.count_b);
            let group_of = &pool.group_of;
            draw_bootstrap(
                rng,
                n_a,
                n_b,
                |i| ca[group_of[i] as usize] += 1,
                |i| cb[group_of[i] as usize] += 1,
            );
            let groups = pool
                .distinct
                .iter()
                .zip(sc.count_a.iter().zip(&sc.count_b))
                .map(|(&x, (&a, &b))| (x, a, b))
                .filter(|&(_, a, b)| a + b > 0);
            scan(groups, n_a, n_b, inv_var)
        }
    }
}

/// Counts, for each kind, the resamples in `range` whose statistic is at
/// least the observed one. Resample `r` always uses stream `r` of the seed.
fn count_exceedances(
    pool: &Pool,
    n_a: usize,
    n_b: usize,
    plan: &ResamplePlan,
    kinds: &[StatKind],
    observed: &Statistics,
    range: Range<usize>,
) -> Vec<usize> {
    let streams = StreamFamily::new(plan.seed);
    let inv_var = inverse_variance_table(n_a + n_b);
    let mut scratch = Scratch::new(pool);
    let mut counts = vec![0usize; kinds.len()];
    for r in range {
        let mut rng = streams.get(r as u64);
        let stats = resampled_stats(pool, n_a, n_b, plan.mode, &inv_var, &mut rng, &mut scratch);
        for (count, &kind) in counts.iter_mut().zip(kinds) {
            if stats.get(kind) >= observed.get(kind) {
                *count += 1;
            }
        }
    }
    counts
}

/// Runs the resampling test for a single statistic.
pub fn two_sample_test(
    a: &Sample,
    b: &Sample,
    kind: StatKind,
    plan: &ResamplePlan,
) -> Result<TestResult> {
    Ok(multi_test(a, b, &[kind], plan)?[0])
}

/// Runs the resampling test for several statistics over one shared set of
/// resamples.
///
/// Each result is identical to what [`two_sample_test`] returns for that
/// statistic with the same plan. Resamples are split across `plan.workers`
/// threads; the output does not depend on the worker count.
pub fn multi_test(
    a: &Sample,
    b: &Sample,
    kinds: &[StatKind],
    plan: &ResamplePlan,
) -> Result<Vec<TestResult>> {
    plan.validate()?;
    if kinds.is_empty() {
        return Err(Error::InvalidInput("no statistics requested".into()));
    }
    let (n_a, n_b) = (a.len(), b.len());
    let observed = all_stats(a, b);
    let pool = Pool::new(a, b);

    let r = plan.n_resamples;
    let workers = plan.workers.min(r);
    let counts = if workers == 1 {
        count_exceedances(&pool, n_a, n_b, plan, kinds, &observed, 0..r)
    } else {
        let chunk = r.div_ceil(workers);
        let shards: Vec<Vec<usize>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let range = (w * chunk).min(r)..((w + 1) * chunk).min(r);
                    let pool = &pool;
                    let observed = &observed;
                    scope.spawn(move || {
                        count_exceedances(pool, n_a, n_b, plan, kinds, observed, range)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("resampling worker panicked"))
                .collect()
        });
        let mut total = vec![0usize; kinds.len()];
        for shard in shards {
            for (t, c) in total.iter_mut().zip(shard) {
                *t += c;
            }
        }
        total
    };

    Ok(kinds
        .iter()
        .zip(counts)
        .map(|(&kind, exceed)| {
            TestResult::from_counts(kind, observed.get(kind), exceed, r, plan.seed)
        })
        .collect())
}

/// Combines tests of the same data run independently (e.g. one per core)
/// into a single p-value.
///
/// This is the average of the shard p-values, weighted by resample count,
/// with floored shard p-values taken as 0 and the combined floor
/// `1 / (2 Σ R)`. It is computed from the exceedance counts, so it equals
/// exactly the p-value of one run with the summed counts.
pub fn combine_parallel_pvalues(shards: &[TestResult]) -> Result<f64> {
    if shards.is_empty() {
        return Err(Error::InvalidInput("no shard results to combine".into()));
    }
    let mut exceed = 0usize;
    let mut total = 0usize;
    for s in shards {
        if s.n_resamples == 0 || s.exceed_count > s.n_resamples {
            return Err(Error::InvalidInput(format!(
                "inconsistent shard: {} exceedances of {} resamples",
                s.exceed_count, s.n_resamples
            )));
        }
        exceed += s.exceed_count;
        total += s.n_resamples;
    }
    Ok(p_value_from_counts(exceed, total))
}
