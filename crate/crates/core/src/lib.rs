//! Two-sample tests built on empirical CDFs.
//!
//! Six statistics compare the ECDFs `Ê` (sample A) and `F̂` (sample B):
//! Kolmogorov-Smirnov, Kuiper, Cramér-von Mises, Anderson-Darling,
//! Wasserstein, and DTS, the Wasserstein area reweighted by the inverse
//! variance `1 / (D̂(1 - D̂))` of the pooled ECDF `D̂`. Each is computed with
//! one sort and one linear pass. P-values come from resampling the pooled
//! sample, which makes every statistic an exactly sized finite-sample test.
//!
//! ```
//! use twosample::{two_sample_test, ResamplePlan, Sample, StatKind};
//!
//! let a = Sample::new(vec![0.1, 0.4, 0.35, 0.8, 0.2]).unwrap();
//! let b = Sample::new(vec![1.3, 0.9, 1.7, 1.1, 2.0]).unwrap();
//! let plan = ResamplePlan::default().with_seed(7);
//! let result = two_sample_test(&a, &b, StatKind::Dts, &plan).unwrap();
//! assert!(result.p_value < 0.05);
//! ```

mod error;
pub mod merge;
pub mod one_sample;
pub mod resampling;
pub mod rng;
mod sample;
pub mod stats;
pub mod weights;

pub use error::{Error, Result};
pub use merge::{build_joint_merge, JointMerge};
pub use one_sample::{one_sample_test, Reference};
pub use resampling::{
    combine_parallel_pvalues, multi_test, resample_once, two_sample_test, ResampleMode,
    ResamplePlan, TestResult,
};
pub use sample::Sample;
pub use stats::{
    ad_stat, all_stats, cvm_stat, dts_stat, ks_stat, kuiper_stat, wass_stat, StatKind, Statistics,
};
pub use weights::{expand_weighted_pair, expand_weights, Expansion, WeightedSample};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/statistics.md")]
    mod statistics {}
    #[doc = include_str!("../../../book/src/resampling.md")]
    mod resampling {}
    #[doc = include_str!("../../../book/src/extensions.md")]
    mod extensions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
