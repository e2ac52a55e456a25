//! The coreset itself: canonical cones, reach intervals, the cone-maximum
//! structure, and the per-piece and `B` selections.

mod builder;
mod cone_max;
mod cones;
mod reach;

pub use builder::{build_coreset, build_outlier_coreset, Construction, Coreset, CoresetPoint, Provenance, Tag};
pub use cone_max::{cone_max, cone_max_brute, ConeBest};
pub use cones::{canonical_cones, CanonicalCones};
pub use reach::{reach_by_sampling, reach_from_endpoints, reach_interval, ReachInterval, REACH_SAMPLES};
