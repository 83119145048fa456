//! The merged, sorted view of two samples that every statistic is read from.

use serde::{Deserialize, Serialize};

use crate::sample::Sample;

/// Both samples merged into one ascending sequence, with the empirical CDF
/// heights of each sample and of the pooled sample evaluated at every point.
///
/// Heights are right-continuous: `e_height[i]` is the fraction of sample A
/// that is `<= points[i]`. Tied observations share the heights reached after
/// the whole tie group has been absorbed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JointMerge {
    pub n_a: usize,
    pub n_b: usize,
    /// All `n_a + n_b` observations in ascending order, duplicates retained.
    pub points: Vec<f64>,
    /// Ê: ECDF of sample A.
    pub e_height: Vec<f64>,
    /// F̂: ECDF of sample B.
    pub f_height: Vec<f64>,
    /// D̂: ECDF of the pooled sample.
    pub d_height: Vec<f64>,
    /// Distance to the next distinct point; 0 for the maximum.
    pub gap: Vec<f64>,
}

/// Merges and sorts the two samples. `O(n log n)` time, `O(n)` memory.
pub fn build_joint_merge(a: &Sample, b: &Sample) -> JointMerge {
    let groups = Groups::from_samples(a, b);
    let (n_a, n_b) = (a.len(), b.len());
    let n = n_a + n_b;
    let mut merge = JointMerge {
        n_a,
        n_b,
        points: Vec::with_capacity(n),
        e_height: Vec::with_capacity(n),
        f_height: Vec::with_capacity(n),
        d_height: Vec::with_capacity(n),
        gap: Vec::with_capacity(n),
    };
    let (mut ca, mut cb) = (0usize, 0usize);
    for k in 0..groups.len() {
        let x = groups.values[k];
        ca += groups.count_a[k] as usize;
        cb += groups.count_b[k] as usize;
        let gap = groups.values.get(k + 1).map_or(0.0, |next| next - x);
        for _ in 0..groups.count_a[k] + groups.count_b[k] {
            merge.points.push(x);
            merge.e_height.push(ca as f64 / n_a as f64);
            merge.f_height.push(cb as f64 / n_b as f64);
            merge.d_height.push((ca + cb) as f64 / n as f64);
            merge.gap.push(gap);
        }
    }
    merge
}

impl JointMerge {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.points.len()
    }
}

/// The pooled sample collapsed to distinct values with per-sample counts.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Groups {
    pub values: Vec<f64>,
    pub count_a: Vec<u32>,
    pub count_b: Vec<u32>,
}

impl Groups {
    pub fn from_samples(a: &Sample, b: &Sample) -> Groups {
        let mut tagged: Vec<(f64, bool)> = a
            .values()
            .iter()
            .map(|&x| (x, true))
            .chain(b.values().iter().map(|&x| (x, false)))
            .collect();
        // Values are finite, so partial_cmp never fails; -0.0 and 0.0 tie.
        tagged.sort_unstable_by(|x, y| x.0.partial_cmp(&y.0).unwrap());

        let mut groups = Groups {
            values: Vec::new(),
            count_a: Vec::new(),
            count_b: Vec::new(),
        };
        for (x, from_a) in tagged {
            if groups.values.last() != Some(&x) {
                groups.values.push(x);
                groups.count_a.push(0);
                groups.count_b.push(0);
            }
            let k = groups.values.len() - 1;
            if from_a {
                groups.count_a[k] += 1;
            } else {
                groups.count_b[k] += 1;
            }
        }
        groups
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, u32, u32)> + '_ {
        self.values
            .iter()
            .zip(&self.count_a)
            .zip(&self.count_b)
            .map(|((&x, &ca), &cb)| (x, ca, cb))
    }
}

/// The pooled sample sorted once, with tie groups marked, so that resamples
/// can be expressed as labelings of fixed positions.
#[derive(Debug, Clone)]
pub(crate) struct Pool {
    /// All pooled values, ascending.
    pub sorted: Vec<f64>,
    /// Distinct values, ascending.
    pub distinct: Vec<f64>,
    /// Number of pooled observations equal to each distinct value.
    pub sizes: Vec<u32>,
    /// Group index of each sorted position.
    pub group_of: Vec<u32>,
}

impl Pool {
    pub fn new(a: &Sample, b: &Sample) -> Pool {
        let mut sorted: Vec<f64> = a.values().iter().chain(b.values()).copied().collect();
        sorted.sort_unstable_by(|x, y| x.partial_cmp(y).unwrap());
        let mut distinct = Vec::new();
        let mut sizes: Vec<u32> = Vec::new();
        let mut group_of = Vec::with_capacity(sorted.len());
        for &x in &sorted {
            if distinct.last() != Some(&x) {
                distinct.push(x);
                sizes.push(0);
            }
            *sizes.last_mut().unwrap() += 1;
            group_of.push((distinct.len() - 1) as u32);
        }
        Pool {
            sorted,
            distinct,
            sizes,
            group_of,
        }
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }
}
