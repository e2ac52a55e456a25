use crate::error::{Error, Result};
use crate::kernel::{orient, Orientation, Point, SimplePolygon};
use crate::tolerance::TAU_DIST;

use super::path::GeodesicPath;

/// Shortest path between two points of the closed polygon.
pub fn shortest_path(poly: &SimplePolygon, a: Point, b: Point) -> Result<GeodesicPath> {
    let tri = poly.triangulation();
    let ta = tri.locate(a, TAU_DIST).ok_or(Error::PointOutside(a))?;
    let tb = tri.locate(b, TAU_DIST).ok_or(Error::PointOutside(b))?;
    let pts = poly.vertices();
    if ta == tb || a == b {
        let corners = tri.triangle(ta).map(|c| pts[c]);
        return Ok(GeodesicPath::new(vec![a, b]).with_touched(corners));
    }
    let sleeve = tri.dual_path(ta, tb);
    let mut portals = Vec::with_capacity(sleeve.len() + 1);
    portals.push((a, a));
    for w in sleeve.windows(2) {
        let i = tri.shared_edge(w[0], w[1]).expect("sleeve triangles are adjacent");
        let t = tri.triangle(w[0]);
        portals.push((pts[t[(i + 1) % 3]], pts[t[i]]));
    }
    portals.push((b, b));
    let corners = sleeve.iter().flat_map(|&t| tri.triangle(t)).map(|c| pts[c]);
    Ok(GeodesicPath::new(string_pull(&portals)).with_touched(corners))
}

/// `p` lies left of the ray `apex -> d`, or on it (not behind the apex).
fn left_or_along(apex: Point, d: Point, p: Point) -> bool {
    match orient(apex, d, p) {
        Orientation::CounterClockwise => true,
        Orientation::Clockwise => false,
        Orientation::Collinear => (d - apex).dot(p - apex) >= 0.0,
    }
}

fn right_or_along(apex: Point, d: Point, p: Point) -> bool {
    match orient(apex, d, p) {
        Orientation::Clockwise => true,
        Orientation::CounterClockwise => false,
        Orientation::Collinear => (d - apex).dot(p - apex) >= 0.0,
    }
}

/// Funnel walk over `(left, right)` portals; the first and last portal are
/// the degenerate endpoints.
fn string_pull(portals: &[(Point, Point)]) -> Vec<Point> {
    let mut out = vec![portals[0].0];
    let mut apex = portals[0].0;
    let (mut left, mut right) = (apex, apex);
    let (mut left_i, mut right_i) = (0usize, 0usize);
    let mut i = 1;
    while i < portals.len() {
        let (pl, pr) = portals[i];
        if apex == right || left_or_along(apex, right, pr) {
            if apex == right || apex == left || !left_or_along(apex, left, pr) {
                right = pr;
                right_i = i;
            } else {
                out.push(left);
                apex = left;
                right = apex;
                right_i = left_i;
                i = left_i + 1;
                continue;
            }
        }
        if apex == left || right_or_along(apex, left, pl) {
            if apex == left || apex == right || !right_or_along(apex, right, pl) {
                left = pl;
                left_i = i;
            } else {
                out.push(right);
                apex = right;
                left = apex;
                left_i = right_i;
                i = right_i + 1;
                continue;
            }
        }
        i += 1;
    }
    out.push(portals[portals.len() - 1].0);
    out
}
