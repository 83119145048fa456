//! Brute-force ECDF oracle. Evaluates every ECDF by direct counting at each
//! point, and integrates with the midpoint of each interval between distinct
//! pooled values. Shares no code with the single-pass kernel.

#![allow(dead_code)]

/// Fraction of `sample` that is `<= x`.
pub fn ecdf(sample: &[f64], x: f64) -> f64 {
    sample.iter().filter(|&&v| v <= x).count() as f64 / sample.len() as f64
}

/// `[ks, kuiper, cvm, ad, wass, dts]`, in the order of `StatKind::ALL`.
pub fn oracle(a: &[f64], b: &[f64]) -> [f64; 6] {
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let diff = |x: f64| ecdf(b, x) - ecdf(a, x);
    let weight = |x: f64| {
        let d = ecdf(&pooled, x);
        if d > 0.0 && d < 1.0 {
            1.0 / (d * (1.0 - d))
        } else {
            0.0
        }
    };

    let mut hi = 0.0f64;
    let mut lo = 0.0f64;
    let mut cvm = 0.0;
    let mut ad = 0.0;
    for &x in &pooled {
        let dx = diff(x);
        hi = hi.max(dx);
        lo = lo.min(dx);
        cvm += dx.abs();
        ad += dx.abs() * weight(x);
    }

    let mut distinct = pooled.clone();
    distinct.sort_by(|x, y| x.partial_cmp(y).unwrap());
    distinct.dedup();
    let mut wass = 0.0;
    let mut dts = 0.0;
    for w in distinct.windows(2) {
        let mid = 0.5 * (w[0] + w[1]);
        let width = w[1] - w[0];
        wass += diff(mid).abs() * width;
        dts += diff(mid).abs() * weight(mid) * width;
    }

    [hi.max(-lo), hi - lo, cvm, ad, wass, dts]
}

pub fn rel_close(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * x.abs().max(y.abs()).max(1e-300) || (x - y).abs() <= 1e-300
}
