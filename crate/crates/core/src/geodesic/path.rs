use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::kernel::{on_segment, orient, DirectionArc, Orientation, Point, Segment, SimplePolygon};

/// A shortest path `v0 -> ... -> vk` inside a polygon.
///
/// Paths built by this crate list their endpoints plus every polygon vertex
/// they pass through, in order, including reflex vertices that are only
/// grazed. A path from a point to itself holds a single vertex and no edges.
#[derive(Clone, Debug, PartialEq)]
pub struct GeodesicPath {
    vertices: Vec<Point>,
    length: f64,
}

impl GeodesicPath {
    pub fn new(vertices: Vec<Point>) -> Self {
        let vertices = canonicalize(vertices);
        let length = vertices.windows(2).map(|w| w[0].dist(w[1])).sum();
        GeodesicPath { vertices, length }
    }

    /// Adds every candidate lying exactly on the interior of an edge.
    pub(crate) fn with_touched(self, candidates: impl IntoIterator<Item = Point>) -> GeodesicPath {
        let candidates: Vec<Point> = candidates.into_iter().collect();
        if self.is_degenerate() || candidates.is_empty() {
            return self;
        }
        let mut out = vec![self.vertices[0]];
        for w in self.vertices.windows(2) {
            let (a, b) = (w[0], w[1]);
            let seg = Segment::new(a, b);
            let mut hits: Vec<(f64, Point)> = candidates
                .iter()
                .filter(|&&c| c != a && c != b && on_segment(c, a, b))
                .map(|&c| (seg.project(c), c))
                .collect();
            hits.sort_by(|x, y| x.0.total_cmp(&y.0));
            hits.dedup_by(|x, y| x.1 == y.1);
            out.extend(hits.into_iter().map(|h| h.1));
            out.push(b);
        }
        GeodesicPath {
            vertices: out,
            length: self.length,
        }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn source(&self) -> Point {
        self.vertices[0]
    }

    pub fn target(&self) -> Point {
        *self.vertices.last().expect("paths are nonempty")
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 2
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        self.vertices.windows(2).map(|w| Segment::new(w[0], w[1]))
    }

    pub fn first_edge(&self) -> Result<Segment> {
        self.edges().next().ok_or(Error::DegeneratePath)
    }

    pub fn last_edge(&self) -> Result<Segment> {
        self.edges().last().ok_or(Error::DegeneratePath)
    }

    /// Direction of the first edge.
    pub fn first_dir(&self) -> Result<f64> {
        Ok(self.first_edge()?.direction())
    }

    /// Direction of the last edge.
    pub fn last_dir(&self) -> Result<f64> {
        Ok(self.last_edge()?.direction())
    }

    pub fn reversed(&self) -> GeodesicPath {
        let mut v = self.vertices.clone();
        v.reverse();
        GeodesicPath {
            vertices: v,
            length: self.length,
        }
    }

    /// Point at arc length `s` from the source, clamped to the path.
    pub fn point_at(&self, s: f64) -> Point {
        let mut remaining = s.max(0.0);
        for e in self.edges() {
            let len = e.length();
            if remaining <= len {
                return e.at(if len > 0.0 { remaining / len } else { 0.0 });
            }
            remaining -= len;
        }
        self.target()
    }

    /// Sub-path between arc lengths `from <= to`, keeping every vertex in
    /// between.
    pub fn sub_path(&self, from: f64, to: f64) -> GeodesicPath {
        let mut pts = vec![self.point_at(from)];
        let mut acc = 0.0;
        for w in self.vertices.windows(2) {
            acc += w[0].dist(w[1]);
            if acc > from && acc < to {
                pts.push(w[1]);
            }
        }
        pts.push(self.point_at(to));
        pts.dedup();
        let length = pts.windows(2).map(|w| w[0].dist(w[1])).sum();
        GeodesicPath { vertices: pts, length }
    }

    /// Arc length of every vertex.
    pub fn vertex_offsets(&self) -> Vec<f64> {
        let mut acc = 0.0;
        let mut out = vec![0.0];
        for w in self.vertices.windows(2) {
            acc += w[0].dist(w[1]);
            out.push(acc);
        }
        out
    }

    /// Smallest distance from `p` to the path.
    pub fn distance_to_point(&self, p: Point) -> f64 {
        if self.is_degenerate() {
            return self.source().dist(p);
        }
        self.edges()
            .map(|e| e.distance_to_point(p))
            .fold(f64::INFINITY, f64::min)
    }

    /// Whether the path comes within `tol` of segment `s`.
    pub fn meets_segment(&self, s: &Segment, tol: f64) -> bool {
        if self.is_degenerate() {
            return s.distance_to_point(self.source()) <= tol;
        }
        self.edges().any(|e| e.distance_to_segment(s) <= tol)
    }
}

fn canonicalize(mut v: Vec<Point>) -> Vec<Point> {
    v.dedup();
    if v.len() < 3 {
        return v;
    }
    let mut out: Vec<Point> = Vec::with_capacity(v.len());
    out.push(v[0]);
    for i in 1..v.len() - 1 {
        let prev = *out.last().unwrap();
        let (cur, next) = (v[i], v[i + 1]);
        let straight = orient(prev, cur, next) == Orientation::Collinear && (cur - prev).dot(next - cur) > 0.0;
        if !straight {
            out.push(cur);
        }
    }
    out.push(*v.last().unwrap());
    out
}

/// Backward extension: the segment from where the reversed first edge hits
/// the boundary (or stops after `cap`) back to the path's source.
pub fn ext_backward(poly: &SimplePolygon, path: &GeodesicPath, cap: Option<f64>) -> Result<Segment> {
    let dir = path.first_dir()?;
    let origin = path.source();
    let (hit, _) = poly.ray_shoot(origin, dir + PI, cap)?;
    Ok(Segment::new(hit, origin))
}

/// Forward extension: the segment from the path's target onwards along the
/// last edge until the boundary (or `cap`).
pub fn ext_forward(poly: &SimplePolygon, path: &GeodesicPath, cap: Option<f64>) -> Result<Segment> {
    let dir = path.last_dir()?;
    let origin = path.target();
    let (hit, _) = poly.ray_shoot(origin, dir, cap)?;
    Ok(Segment::new(origin, hit))
}

/// Union of the arcs swept between consecutive edge directions.
pub fn span(path: &GeodesicPath) -> Result<DirectionArc> {
    let mut dirs = path.edges().map(|e| e.direction());
    let first = dirs.next().ok_or(Error::DegeneratePath)?;
    let (mut lo, mut hi, mut cur) = (0.0f64, 0.0f64, 0.0f64);
    let mut prev = first;
    for d in dirs {
        // signed turn in (-π, π]
        let mut turn = (d - prev).rem_euclid(TAU);
        if turn > PI {
            turn -= TAU;
        }
        cur += turn;
        lo = lo.min(cur);
        hi = hi.max(cur);
        prev = d;
    }
    Ok(DirectionArc::new(first + lo, hi - lo))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn canonical_form_drops_straight_vertices() {
        let path = GeodesicPath::new(vec![p(0.0, 0.0), p(1.0, 1.0), p(1.0, 1.0), p(2.0, 2.0)]);
        assert_eq!(path.vertices(), &[p(0.0, 0.0), p(2.0, 2.0)]);
        let bent = GeodesicPath::new(vec![p(1.0, 1.0), p(2.0, 2.0), p(2.5, 3.5)]);
        assert_eq!(bent.edge_count(), 2);
        let point = GeodesicPath::new(vec![p(1.0, 1.0), p(1.0, 1.0)]);
        assert!(point.is_degenerate());
        assert_eq!(point.first_dir(), Err(Error::DegeneratePath));
    }

    #[test]
    fn span_examples() {
        let straight = GeodesicPath::new(vec![p(1.0, 1.0), p(2.0, 2.0), p(3.0, 3.0)]);
        let s = span(&straight).unwrap();
        assert_eq!(s.width(), 0.0);
        assert!((s.start() - 45f64.to_radians()).abs() < 1e-12);

        let bent = GeodesicPath::new(vec![p(1.0, 1.0), p(2.0, 2.0), p(2.5, 3.5)]);
        let s = span(&bent).unwrap();
        assert!((s.start() - 45f64.to_radians()).abs() < 1e-12);
        let end = 1.5f64.atan2(0.5);
        assert!((s.end() - end).abs() < 1e-12);
        assert!((s.end().to_degrees() - 71.565).abs() < 1e-3);

        let mut pts = vec![p(0.0, 0.0)];
        for deg in [10.0f64, 30.0, 50.0] {
            let last = *pts.last().unwrap();
            pts.push(last + Point::from_angle(deg.to_radians()));
        }
        let s = span(&GeodesicPath::new(pts)).unwrap();
        assert!((s.start() - 10f64.to_radians()).abs() < 1e-12);
        assert!((s.width() - 40f64.to_radians()).abs() < 1e-12);
    }

    #[test]
    fn sub_path_cuts_inside_edges() {
        let path = GeodesicPath::new(vec![p(0.0, 0.0), p(4.0, 0.0), p(4.0, 4.0)]);
        let sub = path.sub_path(2.0, 6.0);
        assert_eq!(sub.vertices(), &[p(2.0, 0.0), p(4.0, 0.0), p(4.0, 2.0)]);
        assert_eq!(sub.length(), 4.0);
    }
}
