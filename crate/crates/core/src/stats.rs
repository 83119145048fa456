//! The six ECDF statistics, computed together in one pass over the merged
//! sample.
//!
//! None of the statistics carries a sample-size normalization; they are the
//! raw sums and integrals, which is all a resampling p-value needs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::merge::Groups;
use crate::sample::Sample;

/// Which two-sample statistic to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StatKind {
    /// Kolmogorov-Smirnov: largest absolute ECDF difference.
    Ks,
    /// Kuiper: largest positive plus largest negative ECDF difference.
    Kuiper,
    /// Cramér-von Mises: sum of absolute differences over the pooled sample.
    Cvm,
    /// Anderson-Darling: CVM with each term divided by `D̂(1 - D̂)`.
    Ad,
    /// Wasserstein: area between the two ECDFs.
    Wass,
    /// Wasserstein area weighted by `1 / (D̂(1 - D̂))`.
    Dts,
}

impl StatKind {
    pub const ALL: [StatKind; 6] = [
        StatKind::Ks,
        StatKind::Kuiper,
        StatKind::Cvm,
        StatKind::Ad,
        StatKind::Wass,
        StatKind::Dts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatKind::Ks => "ks",
            StatKind::Kuiper => "kuiper",
            StatKind::Cvm => "cvm",
            StatKind::Ad => "ad",
            StatKind::Wass => "wass",
            StatKind::Dts => "dts",
        }
    }

    /// Computes this statistic for the pair of samples.
    pub fn compute(self, a: &Sample, b: &Sample) -> f64 {
        all_stats(a, b).get(self)
    }
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        StatKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(format!("unknown statistic `{s}`")))
    }
}

/// All six statistics for one pair of samples.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Statistics {
    pub ks: f64,
    pub kuiper: f64,
    pub cvm: f64,
    pub ad: f64,
    pub wass: f64,
    pub dts: f64,
}

impl Statistics {
    pub fn get(&self, kind: StatKind) -> f64 {
        match kind {
            StatKind::Ks => self.ks,
            StatKind::Kuiper => self.kuiper,
            StatKind::Cvm => self.cvm,
            StatKind::Ad => self.ad,
            StatKind::Wass => self.wass,
            StatKind::Dts => self.dts,
        }
    }
}

/// `1 / (D̂(1 - D̂))` for every pooled count `c` with `D̂ = c / n`; zero at
/// `c = 0` and `c = n`, where both ECDFs agree.
pub(crate) fn inverse_variance_table(n: usize) -> Vec<f64> {
    let nf = n as f64;
    (0..=n)
        .map(|c| {
            if c == 0 || c == n {
                0.0
            } else {
                let d = c as f64 / nf;
                1.0 / (d * (1.0 - d))
            }
        })
        .collect()
}

/// Computes every statistic from the pooled sample's tie groups, given in
/// ascending order as `(value, count in A, count in B)`. Groups must be
/// nonempty. `inv_var` comes from [`inverse_variance_table`] for
/// `n_a + n_b`.
///
/// Terms where `D̂(1 - D̂) = 0` (the maximum and beyond) contribute zero; both
/// ECDFs equal one there.
pub(crate) fn scan<I>(groups: I, n_a: usize, n_b: usize, inv_var: &[f64]) -> Statistics
where
    I: IntoIterator<Item = (f64, u32, u32)>,
{
    debug_assert_eq!(inv_var.len(), n_a + n_b + 1);
    let (inv_na, inv_nb) = (1.0 / n_a as f64, 1.0 / n_b as f64);
    let (mut ca, mut cb) = (0usize, 0usize);
    let (mut hi, mut lo) = (0.0f64, 0.0f64);
    let mut s = Statistics::default();
    // (value, |F̂ - Ê|, weighted difference) at the previous group; both
    // ECDFs are constant from there up to the current value.
    let mut prev: Option<(f64, f64, f64)> = None;

    for (x, ga, gb) in groups {
        if let Some((px, diff, wdiff)) = prev {
            let width = x - px;
            s.wass += diff * width;
            s.dts += wdiff * width;
        }
        ca += ga as usize;
        cb += gb as usize;
        let signed = cb as f64 * inv_nb - ca as f64 * inv_na;
        let diff = signed.abs();
        hi = hi.max(signed);
        lo = lo.min(signed);
        let wdiff = diff * inv_var[ca + cb];
        let multiplicity = (ga + gb) as f64;
        s.cvm += multiplicity * diff;
        s.ad += multiplicity * wdiff;
        prev = Some((x, diff, wdiff));
    }

    s.ks = hi.max(0.0 - lo);
    s.kuiper = hi - lo;
    s
}

/// Computes all six statistics with one sort and one pass.
pub fn all_stats(a: &Sample, b: &Sample) -> Statistics {
    let groups = Groups::from_samples(a, b);
    let inv_var = inverse_variance_table(a.len() + b.len());
    scan(groups.iter(), a.len(), b.len(), &inv_var)
}

/// `max |F̂ - Ê|` over the real line. In `[0, 1]`.
pub fn ks_stat(a: &Sample, b: &Sample) -> f64 {
    all_stats(a, b).ks
}

/// `max (F̂ - Ê) - min (F̂ - Ê)`, the sum of the two one-sided deviations.
/// In `[0, 2]`.
pub fn kuiper_stat(a: &Sample, b: &Sample) -> f64 {
    all_stats(a, b).kuiper
}

/// `Σ |F̂(x) - Ê(x)|` over every element `x` of the pooled sample, tied
/// elements each contributing a term.
pub fn cvm_stat(a: &Sample, b: &Sample) -> f64 {
    all_stats(a, b).cvm
}

/// `Σ |F̂(x) - Ê(x)| / (D̂(x)(1 - D̂(x)))` over the pooled sample.
pub fn ad_stat(a: &Sample, b: &Sample) -> f64 {
    all_stats(a, b).ad
}

/// `∫ |F̂ - Ê| dx`, exact for the step functions involved.
pub fn wass_stat(a: &Sample, b: &Sample) -> f64 {
    all_stats(a, b).wass
}

/// `∫ |F̂ - Ê| / (D̂(1 - D̂)) dx`: the Wasserstein area with each interval
/// weighted by the inverse variance of the pooled ECDF on it.
pub fn dts_stat(a: &Sample, b: &Sample) -> f64 {
    all_stats(a, b).dts
}
