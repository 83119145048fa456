//! Building sweep grids.

use crate::dgp::{DgpSpec, Family};
use crate::error::{Result, SimError};
use crate::power::SweepPoint;

/// Parses `LO:HI:STEP` into `LO, LO + STEP, ...` up to and including `HI`.
/// Values are rounded to 12 decimals so `0:1.5:0.1` yields `0.3`, not
/// `0.30000000000000004`.
pub fn parse_grid(s: &str) -> Result<Vec<f64>> {
    let bad = |why: &str| SimError::InvalidInput(format!("invalid grid `{s}`: {why}"));
    let parts: Vec<f64> = s
        .split(':')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| bad("expected LO:HI:STEP"))
        })
        .collect::<Result<_>>()?;
    let [lo, hi, step] = parts[..] else {
        return Err(bad("expected LO:HI:STEP"));
    };
    if !(lo.is_finite() && hi.is_finite() && step.is_finite()) {
        return Err(bad("non-finite bound"));
    }
    if step <= 0.0 || hi < lo {
        return Err(bad("need STEP > 0 and HI >= LO"));
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    if count > 100_000 {
        return Err(bad("too many points"));
    }
    Ok((0..count)
        .map(|i| ((lo + i as f64 * step) * 1e12).round() / 1e12)
        .collect())
}

/// About `count` sample sizes spaced evenly in log scale from `lo` to `hi`,
/// rounded and deduplicated.
pub fn log_grid(lo: usize, hi: usize, count: usize) -> Vec<usize> {
    if count <= 1 || lo >= hi {
        return vec![lo.max(1)];
    }
    let (l, h) = ((lo.max(1) as f64).ln(), (hi as f64).ln());
    let mut out: Vec<usize> = (0..count)
        .map(|i| (l + (h - l) * i as f64 / (count - 1) as f64).exp().round() as usize)
        .collect();
    out.dedup();
    out
}

/// The published axis ranges: mu in 0..=1.5 by 0.1, sigma2 in 1..=6 by 0.5.
pub fn default_parameter_grid(family: &Family) -> Option<Vec<f64>> {
    match family {
        Family::MeanShift { .. } => parse_grid("0:1.5:0.1").ok(),
        Family::VarInflate { .. } => parse_grid("1:6:0.5").ok(),
        _ => None,
    }
}

/// Sweeps the family's parameter at fixed per-sample size `n`.
pub fn parameter_sweep(family: &Family, grid: &[f64], n: usize) -> Result<Vec<SweepPoint>> {
    grid.iter()
        .map(|&value| {
            let family = family.with_parameter(value)?;
            family.second()?;
            Ok(SweepPoint {
                value,
                spec: DgpSpec::balanced(family, n),
            })
        })
        .collect()
}

/// Sweeps the per-sample size (both samples equal).
pub fn size_sweep(family: &Family, ns: &[usize]) -> Result<Vec<SweepPoint>> {
    family.second()?;
    ns.iter()
        .map(|&n| {
            if n == 0 {
                return Err(SimError::InvalidInput("sample size 0 in grid".into()));
            }
            Ok(SweepPoint {
                value: n as f64,
                spec: DgpSpec::balanced(*family, n),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mean_grid_has_sixteen_points() {
        let g = parse_grid("0:1.5:0.1").unwrap();
        assert_eq!(g.len(), 16);
        assert_eq!(g[3], 0.3);
        assert_eq!(*g.last().unwrap(), 1.5);
    }

    #[test]
    fn variance_grid() {
        let g = parse_grid("1:6:0.5").unwrap();
        assert_eq!(g.len(), 11);
    }

    #[test]
    fn bad_grids() {
        for s in ["1:0:0.1", "0:1:0", "0:1", "a:b:c", "0:1:-1", "0:inf:1"] {
            assert!(parse_grid(s).is_err(), "{s}");
        }
    }

    #[test]
    fn log_spacing() {
        assert_eq!(log_grid(50, 800, 5), vec![50, 100, 200, 400, 800]);
        assert_eq!(log_grid(10, 10, 3), vec![10]);
    }

    #[test]
    fn sweeps() {
        let pts = parameter_sweep(&Family::MeanShift { mu: 1.0 }, &[0.0, 0.5], 50).unwrap();
        assert_eq!(pts[1].spec.family, Family::MeanShift { mu: 0.5 });
        assert!(parameter_sweep(&Family::VarInflate { sigma2: 1.0 }, &[0.0], 50).is_err());
        assert!(parameter_sweep(&Family::MixVar, &[1.0], 50).is_err());
        assert_eq!(
            size_sweep(&Family::MixVar, &[10, 20]).unwrap()[1].spec.n_b,
            20
        );
    }
}
