//! Monte Carlo studies for the `twosample` tests.
//!
//! Each simulation draws sample A from a standard normal and sample B from a
//! [`Family`]: a mean shift, a variance inflation, both, or one of three
//! normal mixtures standardized to mean 0 and variance 1. Every test runs on
//! the same draw, and rejection rates at `alpha` are collected into a
//! [`PowerCurve`]. The resampling ECDF tests are compared against the Welch
//! t-test and the F-test using their textbook reference distributions.

pub mod baseline;
pub mod bench;
pub mod dgp;
mod error;
pub mod plot;
pub mod power;
pub mod sweep;

pub use baseline::{f_test, t_test};
pub use bench::{bench_csv, bench_runtime, BenchRow};
pub use dgp::{draw_dgp, DgpSpec, Family, Mixture};
pub use error::{Result, SimError};
pub use plot::render_svg;
pub use power::{run_power_sweep, standard_error, PowerCurve, PowerRow, SweepPoint, TestKind};
pub use sweep::{log_grid, parameter_sweep, parse_grid, size_sweep};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/simulations.md")]
    mod simulations {}
    #[doc = include_str!("../../../book/src/performance.md")]
    mod performance {}
}
