//! Rendering results as JSON, CSV or text.

use std::fmt::Write as _;

use clap::ValueEnum;
use twosample::TestResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A single result as a JSON object, several as an array.
pub fn json<T: serde::Serialize>(items: &[T]) -> String {
    let mut s = match items {
        [one] => serde_json::to_string_pretty(one),
        many => serde_json::to_string_pretty(many),
    }
    .expect("results serialize");
    s.push('\n');
    s
}

pub fn results_csv(results: &[TestResult]) -> String {
    let mut out = String::from("method,statistic,p_value,n_resamples,exceed_count,seed\n");
    for r in results {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.method, r.statistic, r.p_value, r.n_resamples, r.exceed_count, r.seed
        );
    }
    out
}

pub fn results_text(results: &[TestResult]) -> String {
    let mut out = String::new();
    for r in results {
        let _ = writeln!(
            out,
            "{:<7} statistic = {:<12} p = {:<12} ({} of {} resamples >= observed, seed {})",
            r.method.to_string(),
            sig6(r.statistic),
            sig6(r.p_value),
            r.exceed_count,
            r.n_resamples,
            r.seed
        );
    }
    out
}

/// `x` to 6 significant digits, trailing zeros dropped.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-4..15).contains(&magnitude) {
        let s = format!("{x:.5e}");
        let (mantissa, exp) = s.split_once('e').unwrap();
        return format!("{}e{exp}", trim_zeros(mantissa));
    }
    if magnitude > 5 {
        let scale = 10f64.powi(magnitude - 5);
        return format!("{:.0}", (x / scale).round() * scale);
    }
    let decimals = (5 - magnitude) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use twosample::StatKind;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(28.0 / 3.0), "9.33333");
        assert_eq!(sig6(0.5), "0.5");
        assert_eq!(sig6(0.00025), "0.00025");
        assert_eq!(sig6(1.0 / 3.0 * 1e-6), "3.33333e-7");
        assert_eq!(sig6(123456789.0), "123457000");
        assert_eq!(sig6(-2.0), "-2");
        assert_eq!(sig6(0.0), "0");
    }

    #[test]
    fn json_single_is_object_many_is_array() {
        let r = TestResult::from_counts(StatKind::Ks, 0.5, 10, 100, 7);
        assert!(json(&[r]).starts_with('{'));
        assert!(json(&[r, r]).starts_with('['));
        let back: TestResult = serde_json::from_str(&json(&[r])).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn csv_has_header_and_rows() {
        let r = TestResult::from_counts(StatKind::Dts, 28.0 / 3.0, 0, 4, 1);
        let csv = results_csv(&[r]);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[1], "dts,9.333333333333334,0.125,4,0,1");
    }
}
