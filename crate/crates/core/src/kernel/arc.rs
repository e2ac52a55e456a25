use std::f64::consts::{PI, TAU};

use super::point::{ccw_delta, normalize_angle};
use crate::error::{Error, Result};
use crate::tolerance::TAU_ANG;

/// Closed arc on the circle of directions, running counterclockwise from
/// `start` over `width` radians.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DirectionArc {
    start: f64,
    width: f64,
}

impl DirectionArc {
    /// `width` is clamped to `[0, 2π]`; a width of `2π` is the whole circle.
    pub fn new(start: f64, width: f64) -> Self {
        DirectionArc {
            start: normalize_angle(start),
            width: width.clamp(0.0, TAU),
        }
    }

    /// Degenerate arc holding a single direction.
    pub fn point(angle: f64) -> Self {
        DirectionArc::new(angle, 0.0)
    }

    pub fn full() -> Self {
        DirectionArc::new(0.0, TAU)
    }

    /// Counterclockwise arc from `from` to `to`.
    pub fn ccw(from: f64, to: f64) -> Self {
        DirectionArc::new(from, ccw_delta(from, to))
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn end(&self) -> f64 {
        normalize_angle(self.start + self.width)
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn is_full(&self) -> bool {
        self.width >= TAU
    }

    pub fn midpoint(&self) -> f64 {
        normalize_angle(self.start + 0.5 * self.width)
    }

    pub fn antipode(&self) -> DirectionArc {
        DirectionArc::new(self.start + PI, self.width)
    }

    /// Closed membership.
    pub fn contains(&self, angle: f64) -> bool {
        self.is_full() || ccw_delta(self.start, angle) <= self.width
    }

    /// Membership after widening both ends by `slack`.
    pub fn contains_with_slack(&self, angle: f64, slack: f64) -> bool {
        self.widened(slack).contains(angle)
    }

    pub fn widened(&self, slack: f64) -> DirectionArc {
        DirectionArc::new(self.start - slack, self.width + 2.0 * slack)
    }

    /// Shrinks both ends by `slack`; returns `None` when nothing is left.
    pub fn shrunk(&self, slack: f64) -> Option<DirectionArc> {
        if self.is_full() {
            return Some(*self);
        }
        if self.width < 2.0 * slack {
            return None;
        }
        Some(DirectionArc::new(self.start + slack, self.width - 2.0 * slack))
    }

    /// Two closed arcs intersect iff one contains the start of the other.
    pub fn intersects(&self, other: &DirectionArc) -> bool {
        self.contains(other.start) || other.contains(self.start)
    }

    /// `other ⊆ self`, allowing `slack` radians at either end.
    pub fn contains_arc(&self, other: &DirectionArc, slack: f64) -> bool {
        if self.is_full() {
            return true;
        }
        if other.is_full() {
            return false;
        }
        let wide = self.widened(slack);
        if wide.is_full() {
            return true;
        }
        let offset = ccw_delta(wide.start, other.start);
        offset <= wide.width && offset + other.width <= wide.width
    }

    /// Splits into at most two `[lo, hi]` intervals of `[0, 2π]` with `lo <= hi`.
    pub fn to_intervals(&self) -> Vec<(f64, f64)> {
        if self.is_full() {
            return vec![(0.0, TAU)];
        }
        let end = self.start + self.width;
        if end <= TAU {
            vec![(self.start, end)]
        } else {
            vec![(self.start, TAU), (0.0, end - TAU)]
        }
    }

    /// Smallest arc containing every direction in `angles`.
    pub fn hull_of(angles: &[f64]) -> Option<DirectionArc> {
        let mut sorted: Vec<f64> = angles.iter().map(|&a| normalize_angle(a)).collect();
        if sorted.is_empty() {
            return None;
        }
        sorted.sort_by(f64::total_cmp);
        // the complement of the largest gap is the hull
        let n = sorted.len();
        let mut best_gap = -1.0;
        let mut best_after = 0;
        for i in 0..n {
            let next = if i + 1 < n { sorted[i + 1] } else { sorted[0] + TAU };
            let gap = next - sorted[i];
            if gap > best_gap {
                best_gap = gap;
                best_after = (i + 1) % n;
            }
        }
        let start = sorted[best_after];
        Some(DirectionArc::new(start, (TAU - best_gap).max(0.0)))
    }
}

/// The smaller of the two arcs with endpoints `a` and `b`.
pub fn arc_between(a: f64, b: f64) -> Result<DirectionArc> {
    let d = ccw_delta(a, b);
    if (d - PI).abs() <= TAU_ANG {
        return Err(Error::AntipodalEndpoints);
    }
    if d < PI {
        Ok(DirectionArc::new(a, d))
    } else {
        Ok(DirectionArc::new(b, TAU - d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg(d: f64) -> f64 {
        d.to_radians()
    }

    #[test]
    fn arc_between_examples() {
        let a = arc_between(deg(10.0), deg(350.0)).unwrap();
        assert!((a.width() - deg(20.0)).abs() < 1e-12);
        assert!(a.contains(0.0));
        assert!((a.start() - deg(350.0)).abs() < 1e-12);

        let b = arc_between(deg(45.0), deg(71.565)).unwrap();
        assert!((b.start() - deg(45.0)).abs() < 1e-12);
        assert!((b.width() - deg(26.565)).abs() < 1e-12);

        assert!(matches!(arc_between(0.0, PI), Err(Error::AntipodalEndpoints)));
    }

    #[test]
    fn intervals_split_at_zero() {
        let a = DirectionArc::new(deg(350.0), deg(20.0));
        let iv = a.to_intervals();
        assert_eq!(iv.len(), 2);
        assert!((iv[0].0 - deg(350.0)).abs() < 1e-12 && iv[0].1 == TAU);
        assert!(iv[1].0 == 0.0 && (iv[1].1 - deg(10.0)).abs() < 1e-12);
    }

    #[test]
    fn hull_spans_wraparound() {
        let h = DirectionArc::hull_of(&[deg(350.0), deg(5.0), deg(20.0)]).unwrap();
        assert!((h.start() - deg(350.0)).abs() < 1e-12);
        assert!((h.width() - deg(30.0)).abs() < 1e-12);
        let single = DirectionArc::hull_of(&[1.0]).unwrap();
        assert_eq!(single.width(), 0.0);
    }

    #[test]
    fn containment_of_arcs() {
        let big = DirectionArc::new(deg(300.0), deg(120.0));
        assert!(big.contains_arc(&DirectionArc::new(deg(350.0), deg(20.0)), 0.0));
        assert!(!big.contains_arc(&DirectionArc::new(deg(50.0), deg(20.0)), 0.0));
        assert!(big.intersects(&DirectionArc::new(deg(50.0), deg(20.0))));
        assert!(!big.intersects(&DirectionArc::new(deg(100.0), deg(20.0))));
    }
}
