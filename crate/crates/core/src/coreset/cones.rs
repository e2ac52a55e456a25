use std::f64::consts::{PI, TAU};

use crate::diameter::checked_eps;
use crate::error::Result;
use crate::kernel::DirectionArc;

/// `k = ⌈4π/ε⌉` equally spaced directions and the cones between them.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalCones {
    starts: Vec<f64>,
}

impl CanonicalCones {
    pub fn with_count(k: usize) -> Self {
        assert!(k > 0, "at least one cone");
        CanonicalCones {
            starts: (0..k).map(|j| TAU * j as f64 / k as f64).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }

    /// Angular width of every cone.
    pub fn width(&self) -> f64 {
        TAU / self.len() as f64
    }

    pub fn starts(&self) -> &[f64] {
        &self.starts
    }

    /// Cone `j`, from direction `j` to direction `j+1`.
    pub fn cone(&self, j: usize) -> DirectionArc {
        let (lo, hi) = self.bounds(j);
        DirectionArc::new(lo, hi - lo)
    }

    /// Cone `j` as `[lo, hi] ⊆ [0, 2π]`.
    pub fn bounds(&self, j: usize) -> (f64, f64) {
        let hi = self.starts.get(j + 1).copied().unwrap_or(TAU);
        (self.starts[j], hi)
    }

    /// Whether cone `j` meets the closed interval `[lo, hi] ⊆ [0, 2π]`,
    /// with `0` and `2π` identified.
    pub fn meets(&self, j: usize, lo: f64, hi: f64) -> bool {
        let (a, b) = self.bounds(j);
        (lo <= b && a <= hi) || (lo <= 0.0 && j + 1 == self.len()) || (hi >= TAU && j == 0)
    }

    /// Cones meeting `[lo, hi]` in the sense of [`Self::meets`], as an
    /// inclusive index range plus an optional extra cone across 0.
    pub(crate) fn range_for(&self, lo: f64, hi: f64) -> (usize, usize, Option<usize>) {
        let k = self.len();
        let first = self.starts.partition_point(|&s| s < lo).saturating_sub(1);
        let last = self.starts.partition_point(|&s| s <= hi).saturating_sub(1);
        let extra = if lo <= 0.0 && last < k - 1 {
            Some(k - 1)
        } else if hi >= TAU && first > 0 {
            Some(0)
        } else {
            None
        };
        (first, last, extra)
    }
}

pub fn canonical_cones(eps: f64) -> Result<CanonicalCones> {
    let eps = checked_eps(eps)?;
    Ok(CanonicalCones::with_count((4.0 * PI / eps).ceil() as usize))
}
