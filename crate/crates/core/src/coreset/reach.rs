use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geodesic::shortest_path;
use crate::kernel::{ccw_delta, orient, DirectionArc, Orientation, Point, Segment, SimplePolygon};
use crate::tolerance::{TAU_ANG, TAU_DIST};

/// Default number of edge samples when the endpoint rule is ambiguous.
pub const REACH_SAMPLES: usize = 8;

/// Directions in which point `point` can be reached from an anchor edge,
/// weighted by its distance to the anchor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReachInterval {
    pub point: usize,
    pub arc: DirectionArc,
    pub weight: f64,
}

impl ReachInterval {
    /// One interval, or two when the arc wraps past 0.
    pub fn intervals(&self) -> Vec<(f64, f64)> {
        self.arc.to_intervals()
    }
}

fn close(a: f64, b: f64) -> bool {
    let d = ccw_delta(a, b);
    d <= TAU_ANG || d >= 2.0 * PI - TAU_ANG
}

/// Arc between the first directions `da` (from `edge.a`) and `db` (from
/// `edge.b`) towards `p`, taken in the closed half-circle on `p`'s side of
/// the edge. `None` when that rule does not apply: `p` on the supporting
/// line, a direction outside the half-circle or along the edge, or equal
/// to one of the `blocked` directions (paths running on along `Γ`).
pub fn reach_from_endpoints(edge: Segment, p: Point, da: f64, db: f64, blocked: &[f64]) -> Option<DirectionArc> {
    let theta = edge.direction();
    let half_start = match orient(edge.a, edge.b, p) {
        Orientation::CounterClockwise => theta,
        Orientation::Clockwise => theta + PI,
        Orientation::Collinear => return None,
    };
    let mut offs = [0.0; 2];
    for (o, d) in offs.iter_mut().zip([da, db]) {
        if close(d, theta) || close(d, theta + PI) || blocked.iter().any(|&b| close(d, b)) {
            return None;
        }
        *o = ccw_delta(half_start, d);
        if *o > PI {
            return None;
        }
    }
    let (lo, hi) = (offs[0].min(offs[1]), offs[0].max(offs[1]));
    Some(DirectionArc::new(half_start + lo, hi - lo))
}

/// Hull of first directions of `π(x, p)` sampled at `samples` interior
/// points `x` of the edge, together with the endpoint directions.
pub fn reach_by_sampling(
    poly: &SimplePolygon,
    edge: Segment,
    p: Point,
    endpoint_dirs: &[f64],
    samples: usize,
) -> Result<Option<DirectionArc>> {
    let mut dirs = endpoint_dirs.to_vec();
    for i in 0..samples {
        let x = edge.at((i as f64 + 0.5) / samples as f64);
        let path = shortest_path(poly, x, p)?;
        if let Ok(d) = path.first_dir() {
            dirs.push(d);
        }
    }
    Ok(DirectionArc::hull_of(&dirs))
}

/// Reach interval of `p` from `edge` with weight `d(anchor, p)`, computing
/// the endpoint directions with two-point shortest paths.
pub fn reach_interval(
    poly: &SimplePolygon,
    edge: Segment,
    anchor: Point,
    point: usize,
    p: Point,
) -> Result<ReachInterval> {
    if edge.length() <= TAU_DIST {
        return Err(Error::DegenerateAnchor);
    }
    let pa = shortest_path(poly, edge.a, p)?;
    let pb = shortest_path(poly, edge.b, p)?;
    let (da, db) = (pa.first_dir()?, pb.first_dir()?);
    let arc = match reach_from_endpoints(edge, p, da, db, &[]) {
        Some(arc) => arc,
        None => reach_by_sampling(poly, edge, p, &[da, db], REACH_SAMPLES)?.unwrap_or(DirectionArc::point(da)),
    };
    let weight = shortest_path(poly, anchor, p)?.length();
    Ok(ReachInterval { point, arc, weight })
}
