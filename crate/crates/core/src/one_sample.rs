//! Testing one sample against a known distribution by comparing it with a
//! large simulated sample from that distribution.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::{Distribution, Normal, Uniform};

use crate::error::{Error, Result};
use crate::resampling::{two_sample_test, ResamplePlan, TestResult};
use crate::rng::{stream, REFERENCE_STREAM};
use crate::sample::Sample;
use crate::stats::StatKind;

/// A reference distribution that can be named on a command line.
#[derive(Debug, Clone, Copy)]
pub enum Reference {
    Normal {
        mean: f64,
        sd: f64,
        dist: Normal<f64>,
    },
    Uniform {
        lo: f64,
        hi: f64,
        dist: Uniform<f64>,
    },
}

impl Reference {
    pub fn normal(mean: f64, sd: f64) -> Result<Self> {
        let dist = Normal::new(mean, sd)
            .ok()
            .filter(|_| mean.is_finite() && sd.is_finite() && sd > 0.0)
            .ok_or_else(|| Error::InvalidInput(format!("invalid normal({mean}, {sd})")))?;
        Ok(Reference::Normal { mean, sd, dist })
    }

    pub fn uniform(lo: f64, hi: f64) -> Result<Self> {
        let dist = Uniform::new(lo, hi)
            .ok()
            .filter(|_| lo.is_finite() && hi.is_finite())
            .ok_or_else(|| Error::InvalidInput(format!("invalid uniform({lo}, {hi})")))?;
        Ok(Reference::Uniform { lo, hi, dist })
    }
}

impl Distribution<f64> for Reference {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self {
            Reference::Normal { dist, .. } => dist.sample(rng),
            Reference::Uniform { dist, .. } => dist.sample(rng),
        }
    }
}

impl fmt::Display for Reference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reference::Normal { mean, sd, .. } => write!(f, "normal:{mean},{sd}"),
            Reference::Uniform { lo, hi, .. } => write!(f, "uniform:{lo},{hi}"),
        }
    }
}

/// Parses `normal:MU,SIGMA` or `uniform:LO,HI`.
impl FromStr for Reference {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot parse reference distribution `{s}`"));
        let (name, params) = s.split_once(':').ok_or_else(bad)?;
        let params: Vec<f64> = params
            .split(',')
            .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let [x, y] = params[..] else {
            return Err(bad());
        };
        match name.trim().to_ascii_lowercase().as_str() {
            "normal" => Reference::normal(x, y),
            "uniform" => Reference::uniform(x, y),
            _ => Err(bad()),
        }
    }
}

/// Draws the `k * n_a` reference observations that [`one_sample_test`]
/// compares against.
pub fn reference_sample<D: Distribution<f64>>(
    reference: &D,
    n: usize,
    seed: u64,
) -> Result<Sample> {
    let mut rng = stream(seed, REFERENCE_STREAM);
    Sample::new((0..n).map(|_| reference.sample(&mut rng)).collect())
}

/// Tests whether `a` was drawn from `reference`.
///
/// Draws `k * n_a` values from the reference and runs the two-sample test.
/// The procedure stays valid; its null is effectively a mixture in which
/// `a`'s own distribution has weight [`contamination`]`(k)`, so power grows
/// with `k`. Use `k` of 10 or 100.
pub fn one_sample_test<D: Distribution<f64>>(
    a: &Sample,
    reference: &D,
    k: usize,
    kind: StatKind,
    plan: &ResamplePlan,
) -> Result<TestResult> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    plan.validate()?;
    let b = reference_sample(reference, k * a.len(), plan.seed)?;
    two_sample_test(a, &b, kind, plan)
}

/// Share of the pooled sample contributed by the tested sample when the
/// reference sample is `k` times larger: `1 / (k + 1)`.
pub fn contamination(k: usize) -> f64 {
    1.0 / (k as f64 + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_references() {
        let r: Reference = "normal:0,1".parse().unwrap();
        assert!(matches!(r, Reference::Normal { mean, sd, .. } if mean == 0.0 && sd == 1.0));
        let r: Reference = "uniform: -1, 2".parse().unwrap();
        assert_eq!(r.to_string(), "uniform:-1,2");
        for bad in [
            "normal:0",
            "normal:0,-1",
            "gamma:1,1",
            "uniform:2,1",
            "normal",
            "normal:a,b",
        ] {
            assert!(bad.parse::<Reference>().is_err(), "{bad}");
        }
    }

    #[test]
    fn reference_size_is_k_times() {
        let a = Sample::new((0..50).map(|i| i as f64 / 50.0).collect()).unwrap();
        let r = Reference::uniform(0.0, 1.0).unwrap();
        let b = reference_sample(&r, 10 * a.len(), 3).unwrap();
        assert_eq!(b.len(), 500);
        let res = one_sample_test(
            &a,
            &r,
            10,
            StatKind::Dts,
            &ResamplePlan::default().with_resamples(100),
        )
        .unwrap();
        assert_eq!(res.n_resamples, 100);
    }

    #[test]
    fn contamination_shares() {
        assert!((contamination(10) - 1.0 / 11.0).abs() < 1e-15);
        assert!((contamination(100) - 1.0 / 101.0).abs() < 1e-15);
    }

    #[test]
    fn zero_k_rejected() {
        let a = Sample::new(vec![0.0]).unwrap();
        let r = Reference::normal(0.0, 1.0).unwrap();
        assert!(one_sample_test(&a, &r, 0, StatKind::Ks, &ResamplePlan::default()).is_err());
    }
}
