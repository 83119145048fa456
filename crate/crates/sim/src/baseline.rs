//! Classical parametric baselines, with their usual reference distributions
//! rather than resampling.

use statrs::distribution::{ContinuousCDF, FisherSnedecor, StudentsT};
use twosample::Sample;

use crate::error::{Result, SimError};

fn mean_var(s: &Sample) -> (f64, f64) {
    let n = s.len() as f64;
    let mean = s.values().iter().sum::<f64>() / n;
    let var = s.values().iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var)
}

fn require_two(a: &Sample, b: &Sample) -> Result<()> {
    if a.len() < 2 || b.len() < 2 {
        return Err(SimError::InvalidInput(
            "both samples need at least two observations".into(),
        ));
    }
    Ok(())
}

/// Two-sided Welch (unequal-variance) t-test p-value.
pub fn t_test(a: &Sample, b: &Sample) -> Result<f64> {
    require_two(a, b)?;
    let (ma, va) = mean_var(a);
    let (mb, vb) = mean_var(b);
    let (qa, qb) = (va / a.len() as f64, vb / b.len() as f64);
    let se2 = qa + qb;
    if se2 <= 0.0 {
        return Err(SimError::Degenerate(
            "both samples have zero variance".into(),
        ));
    }
    let t = (ma - mb) / se2.sqrt();
    if t == 0.0 {
        return Ok(1.0);
    }
    let df = se2 * se2 / (qa * qa / (a.len() as f64 - 1.0) + qb * qb / (b.len() as f64 - 1.0));
    let dist = StudentsT::new(0.0, 1.0, df)
        .map_err(|e| SimError::Degenerate(format!("t distribution with df {df}: {e}")))?;
    Ok((2.0 * dist.sf(t.abs())).min(1.0))
}

/// Two-sided variance-ratio F-test p-value.
pub fn f_test(a: &Sample, b: &Sample) -> Result<f64> {
    require_two(a, b)?;
    let (_, va) = mean_var(a);
    let (_, vb) = mean_var(b);
    if va <= 0.0 || vb <= 0.0 {
        return Err(SimError::Degenerate("a sample has zero variance".into()));
    }
    let ratio = va / vb;
    let dist = FisherSnedecor::new(a.len() as f64 - 1.0, b.len() as f64 - 1.0)
        .map_err(|e| SimError::Degenerate(e.to_string()))?;
    Ok((2.0 * dist.cdf(ratio).min(dist.sf(ratio))).min(1.0))
}
