//! Weighted observations, handled by replicating each value in proportion to
//! its weight.

use crate::error::{Error, Result};
use crate::sample::Sample;

/// Largest replication factor searched by default.
pub const DEFAULT_MAX_K: u64 = 10_000;

const NEAR_INTEGER: f64 = 0.1 + 1e-9;

/// Observations paired with positive weights.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedSample {
    values: Vec<f64>,
    weights: Vec<f64>,
}

impl WeightedSample {
    pub fn new(values: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if values.len() != weights.len() {
            return Err(Error::InvalidInput(format!(
                "{} values but {} weights",
                values.len(),
                weights.len()
            )));
        }
        Sample::new(values.clone())?;
        if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w > 0.0)) {
            return Err(Error::InvalidInput(format!(
                "weight {w} is not a positive finite number"
            )));
        }
        Ok(WeightedSample { values, weights })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

/// The replicated sample and the factor that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Expansion {
    pub sample: Sample,
    /// Smallest integer `k` such that `k * w / min(w)` is within 0.1 of an
    /// integer for every weight `w`.
    pub k: u64,
    /// `k / min(w)`: the factor applied to the raw weights.
    pub multiplier: f64,
}

/// Smallest `k <= max_k` bringing every normalized weight times `k` within
/// 0.1 of an integer.
fn find_k(normalized: &[f64], max_k: u64) -> Result<u64> {
    (1..=max_k)
        .find(|&k| {
            let k = k as f64;
            normalized.iter().all(|&w| {
                let x = k * w;
                (x - x.round()).abs() <= NEAR_INTEGER
            })
        })
        .ok_or(Error::NoFeasibleReplication { max_k })
}

fn normalize(weights: &[f64]) -> (Vec<f64>, f64) {
    let min = weights.iter().copied().fold(f64::INFINITY, f64::min);
    (weights.iter().map(|w| w / min).collect(), min)
}

fn replicate(values: &[f64], normalized: &[f64], k: u64) -> Sample {
    let mut out = Vec::new();
    for (&x, &w) in values.iter().zip(normalized) {
        let copies = (k as f64 * w).round() as usize;
        out.extend(std::iter::repeat_n(x, copies));
    }
    Sample::from_vec_unchecked(out)
}

/// Replicates each value `round(k * w / min(w))` times.
///
/// Weights are first divided by their minimum, so the lightest observation
/// appears `k` times.
pub fn expand_weights(ws: &WeightedSample, max_k: u64) -> Result<Expansion> {
    let (normalized, min) = normalize(&ws.weights);
    let k = find_k(&normalized, max_k)?;
    Ok(Expansion {
        sample: replicate(&ws.values, &normalized, k),
        k,
        multiplier: k as f64 / min,
    })
}

/// Expands two weighted samples with one shared factor, so relative weights
/// across the samples survive into the pooled sample.
pub fn expand_weighted_pair(
    a: &WeightedSample,
    b: &WeightedSample,
    max_k: u64,
) -> Result<(Expansion, Expansion)> {
    let all: Vec<f64> = a.weights.iter().chain(&b.weights).copied().collect();
    let (normalized, min) = normalize(&all);
    let k = find_k(&normalized, max_k)?;
    let (na, nb) = normalized.split_at(a.values.len());
    let multiplier = k as f64 / min;
    Ok((
        Expansion {
            sample: replicate(&a.values, na, k),
            k,
            multiplier,
        },
        Expansion {
            sample: replicate(&b.values, nb, k),
            k,
            multiplier,
        },
    ))
}
