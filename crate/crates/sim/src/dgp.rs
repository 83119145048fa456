//! Data-generating processes for the power studies. Sample A is always a
//! standard normal; sample B comes from a normal or a normal mixture.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use twosample::Sample;

use crate::error::{Result, SimError};

/// Pre-scaling variance divisor for the mean-and-variance mixture, as
/// published (the exact mixture variance is 1.76).
pub const MIX_BOTH_DIVISOR: f64 = 1.7607;

/// One normal component of a mixture.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Component {
    pub weight: f64,
    pub mean: f64,
    pub var: f64,
}

/// A finite mixture of normals. A single component is a plain normal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Mixture {
    components: Vec<Component>,
}

impl Mixture {
    pub fn new(components: Vec<Component>) -> Result<Self> {
        let total: f64 = components.iter().map(|c| c.weight).sum();
        let valid = !components.is_empty()
            && (total - 1.0).abs() < 1e-9
            && components
                .iter()
                .all(|c| c.weight > 0.0 && c.mean.is_finite() && c.var.is_finite() && c.var > 0.0);
        if !valid {
            return Err(SimError::InvalidInput(format!(
                "invalid mixture {components:?}"
            )));
        }
        Ok(Mixture { components })
    }

    pub fn normal(mean: f64, var: f64) -> Result<Self> {
        Mixture::new(vec![Component {
            weight: 1.0,
            mean,
            var,
        }])
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn mean(&self) -> f64 {
        self.components.iter().map(|c| c.weight * c.mean).sum()
    }

    pub fn variance(&self) -> f64 {
        let m = self.mean();
        self.components
            .iter()
            .map(|c| c.weight * (c.var + (c.mean - m).powi(2)))
            .sum()
    }

    /// Recentres to mean 0 and rescales to variance 1, analytically.
    pub fn standardized(&self) -> Mixture {
        let (m, v) = (self.mean(), self.variance());
        let sd = v.sqrt();
        Mixture {
            components: self
                .components
                .iter()
                .map(|c| Component {
                    weight: c.weight,
                    mean: (c.mean - m) / sd,
                    var: c.var / v,
                })
                .collect(),
        }
    }

    /// One uniform picks the component, then one standard normal is scaled.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let c = if self.components.len() == 1 {
            &self.components[0]
        } else {
            let u: f64 = rng.random();
            let mut acc = 0.0;
            self.components
                .iter()
                .find(|c| {
                    acc += c.weight;
                    u < acc
                })
                .unwrap_or_else(|| self.components.last().unwrap())
        };
        let z: f64 = rng.sample(StandardNormal);
        c.mean + c.var.sqrt() * z
    }
}

/// The distribution of sample B.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    /// N(0, 1).
    Null,
    /// N(mu, 1).
    MeanShift { mu: f64 },
    /// N(0, sigma2).
    VarInflate { sigma2: f64 },
    /// N(mu, sigma2); published as N(0.5, 2.25).
    MeanAndVar { mu: f64, sigma2: f64 },
    /// 0.2 N(0.8, 1) + 0.8 N(-0.2, 1), standardized.
    MixMean,
    /// 0.2 N(0, 0.625) + 0.8 N(0, 2.5), standardized.
    MixVar,
    /// 0.2 N(0.8/√1.7607, 4/1.7607) + 0.8 N(-0.2/√1.7607, 1/1.7607).
    MixBoth,
}

impl Family {
    pub const NAMES: [&'static str; 7] = [
        "null",
        "mean-shift",
        "var-inflate",
        "mean-and-var",
        "mix-mean",
        "mix-var",
        "mix-both",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Null => "null",
            Family::MeanShift { .. } => "mean-shift",
            Family::VarInflate { .. } => "var-inflate",
            Family::MeanAndVar { .. } => "mean-and-var",
            Family::MixMean => "mix-mean",
            Family::MixVar => "mix-var",
            Family::MixBoth => "mix-both",
        }
    }

    /// The name of this family's sweepable parameter, if it has one.
    pub fn parameter(&self) -> Option<&'static str> {
        match self {
            Family::MeanShift { .. } => Some("mu"),
            Family::VarInflate { .. } => Some("sigma2"),
            _ => None,
        }
    }

    /// Returns the family with its sweep parameter set to `value`.
    pub fn with_parameter(&self, value: f64) -> Result<Family> {
        match self {
            Family::MeanShift { .. } => Ok(Family::MeanShift { mu: value }),
            Family::VarInflate { .. } => Ok(Family::VarInflate { sigma2: value }),
            other => Err(SimError::InvalidInput(format!(
                "family `{}` has no sweep parameter",
                other.name()
            ))),
        }
    }

    /// Distribution of sample B.
    pub fn second(&self) -> Result<Mixture> {
        let c = |weight, mean, var| Component { weight, mean, var };
        match *self {
            Family::Null => Mixture::normal(0.0, 1.0),
            Family::MeanShift { mu } => Mixture::normal(mu, 1.0),
            Family::VarInflate { sigma2 } => Mixture::normal(0.0, sigma2),
            Family::MeanAndVar { mu, sigma2 } => Mixture::normal(mu, sigma2),
            Family::MixMean => {
                Ok(Mixture::new(vec![c(0.2, 0.8, 1.0), c(0.8, -0.2, 1.0)])?.standardized())
            }
            Family::MixVar => {
                Ok(Mixture::new(vec![c(0.2, 0.0, 0.625), c(0.8, 0.0, 2.5)])?.standardized())
            }
            Family::MixBoth => {
                let s = MIX_BOTH_DIVISOR;
                Mixture::new(vec![
                    c(0.2, 0.8 / s.sqrt(), 4.0 / s),
                    c(0.8, -0.2 / s.sqrt(), 1.0 / s),
                ])
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses a family name with its default parameters: `mean-shift` has
/// mu = 1, `var-inflate` has sigma2 = 4, `mean-and-var` is N(0.5, 2.25).
impl FromStr for Family {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "null" => Ok(Family::Null),
            "mean-shift" => Ok(Family::MeanShift { mu: 1.0 }),
            "var-inflate" => Ok(Family::VarInflate { sigma2: 4.0 }),
            "mean-and-var" => Ok(Family::MeanAndVar {
                mu: 0.5,
                sigma2: 2.25,
            }),
            "mix-mean" => Ok(Family::MixMean),
            "mix-var" => Ok(Family::MixVar),
            "mix-both" => Ok(Family::MixBoth),
            _ => Err(SimError::InvalidInput(format!(
                "unknown family `{s}` (expected one of {})",
                Family::NAMES.join(", ")
            ))),
        }
    }
}

/// A family and the two sample sizes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DgpSpec {
    pub family: Family,
    pub n_a: usize,
    pub n_b: usize,
}

impl DgpSpec {
    pub fn new(family: Family, n_a: usize, n_b: usize) -> Self {
        DgpSpec { family, n_a, n_b }
    }

    /// Equal sizes `n` for both samples.
    pub fn balanced(family: Family, n: usize) -> Self {
        DgpSpec::new(family, n, n)
    }
}

/// Draws sample A from N(0, 1) and then sample B from the family.
pub fn draw_dgp<R: Rng + ?Sized>(spec: &DgpSpec, rng: &mut R) -> Result<(Sample, Sample)> {
    if spec.n_a == 0 || spec.n_b == 0 {
        return Err(SimError::InvalidInput(
            "sample sizes must be positive".into(),
        ));
    }
    let second = spec.family.second()?;
    let a: Vec<f64> = (0..spec.n_a).map(|_| rng.sample(StandardNormal)).collect();
    let b: Vec<f64> = (0..spec.n_b).map(|_| second.sample(rng)).collect();
    Ok((Sample::new(a)?, Sample::new(b)?))
}
