//! Minimal SVG line charts of power curves.

use std::fmt::Write as _;

use crate::power::PowerCurve;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 60.0;
const RIGHT: f64 = 150.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 50.0;

const PALETTE: [&str; 8] = [
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666",
];

/// Renders rejection rate against the sweep variable, one polyline per test.
/// Sample-size sweeps use a log x axis. The legend lists tests by mean power,
/// highest first, and colours follow the legend order.
pub fn render_svg(curve: &PowerCurve) -> String {
    let log_x = curve.sweep == "n" && curve.grid.iter().all(|&v| v > 0.0);
    let tx = |v: f64| if log_x { v.ln() } else { v };
    let (xmin, xmax) = curve
        .grid
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(tx(v)), hi.max(tx(v)))
        });
    let span = if xmax > xmin { xmax - xmin } else { 1.0 };
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let px = |v: f64| LEFT + (tx(v) - xmin) / span * plot_w;
    let py = |r: f64| TOP + (1.0 - r) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);

    // Axes, gridlines and labels.
    for i in 0..=5 {
        let r = i as f64 / 5.0;
        let y = py(r);
        let _ = writeln!(
            svg,
            r##"<line x1="{LEFT}" y1="{y:.1}" x2="{:.1}" y2="{y:.1}" stroke="#dddddd"/><text x="{:.1}" y="{:.1}" text-anchor="end">{r:.1}</text>"##,
            LEFT + plot_w,
            LEFT - 6.0,
            y + 4.0
        );
    }
    for &v in &curve.grid {
        let x = px(v);
        let _ = writeln!(
            svg,
            r##"<line x1="{x:.1}" y1="{:.1}" x2="{x:.1}" y2="{:.1}" stroke="#999999"/><text x="{x:.1}" y="{:.1}" text-anchor="middle">{v}</text>"##,
            TOP + plot_h,
            TOP + plot_h + 5.0,
            TOP + plot_h + 18.0
        );
    }
    let _ = writeln!(
        svg,
        r##"<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="#333333"/>"##
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{}</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 10.0,
        if log_x {
            format!("{} (log scale)", curve.sweep)
        } else {
            curve.sweep.clone()
        }
    );
    let _ = writeln!(
        svg,
        r#"<text transform="translate(16 {:.1}) rotate(-90)" text-anchor="middle">rejection rate (alpha = {})</text>"#,
        TOP + plot_h / 2.0,
        curve.alpha
    );

    for (i, test) in curve.legend_order().into_iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let series = curve.series(test).unwrap_or_default();
        let points: Vec<String> = curve
            .grid
            .iter()
            .zip(&series)
            .map(|(&v, &r)| format!("{:.1},{:.1}", px(v), py(r)))
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline class="series" data-test="{test}" fill="none" stroke="{colour}" stroke-width="2" points="{}"/>"#,
            points.join(" ")
        );
        let ly = TOP + 10.0 + 18.0 * i as f64;
        let lx = LEFT + plot_w + 15.0;
        let _ = writeln!(
            svg,
            r#"<g class="legend"><line x1="{lx:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke="{colour}" stroke-width="3"/><text x="{:.1}" y="{:.1}">{test}</text></g>"#,
            lx + 20.0,
            lx + 26.0,
            ly + 4.0
        );
    }
    svg.push_str("</svg>\n");
    svg
}
