use std::sync::OnceLock;

use super::point::Point;
use super::predicates::{orient, Orientation};
use super::segment::{line_segment_params, point_segment_distance, segments_intersect, Segment};
use super::triangulation::Triangulation;
use crate::error::{Error, Result};
use crate::tolerance::TAU_DIST;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Containment {
    Interior,
    Boundary,
    Exterior,
}

impl Containment {
    /// Inside the closed polygon.
    pub fn is_inside(self) -> bool {
        self != Containment::Exterior
    }
}

/// A validated simple polygon stored in counterclockwise order.
///
/// The triangulation is built on first use and then shared read-only.
#[derive(Clone, Debug)]
pub struct SimplePolygon {
    vertices: Vec<Point>,
    triangulation: OnceLock<Triangulation>,
}

impl SimplePolygon {
    /// Validates `vertices` as a simple polygon. Clockwise input is reversed.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let mut vertices = vertices;
        validate_vertices(&vertices)?;
        if signed_area(&vertices) < 0.0 {
            vertices.reverse();
        }
        Ok(SimplePolygon {
            vertices,
            triangulation: OnceLock::new(),
        })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i % self.vertices.len()]
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> Segment {
        Segment::new(self.vertex(i), self.vertex(i + 1))
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        (0..self.len()).map(move |i| self.edge(i))
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|e| e.length()).sum()
    }

    /// A vertex is reflex when its interior angle exceeds π.
    pub fn is_reflex(&self, i: usize) -> bool {
        let m = self.len();
        let prev = self.vertices[(i + m - 1) % m];
        let next = self.vertices[(i + 1) % m];
        orient(prev, self.vertices[i], next) == Orientation::Clockwise
    }

    pub fn triangulation(&self) -> &Triangulation {
        self.triangulation.get_or_init(|| Triangulation::new(&self.vertices))
    }

    /// Distance from `p` to the boundary.
    pub fn boundary_distance(&self, p: Point) -> f64 {
        self.edges()
            .map(|e| e.distance_to_point(p))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, p: Point) -> Containment {
        if self.boundary_distance(p) <= TAU_DIST {
            return Containment::Boundary;
        }
        let mut inside = false;
        let m = self.len();
        for i in 0..m {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % m];
            if (a.y > p.y) != (b.y > p.y) {
                let x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
                if p.x < x {
                    inside = !inside;
                }
            }
        }
        if inside {
            Containment::Interior
        } else {
            Containment::Exterior
        }
    }

    /// Shoots a ray from `origin` in direction `dir` (radians) and returns the
    /// first point where it leaves the closed polygon, together with the
    /// distance travelled. With `max_len`, travel stops early at that distance.
    pub fn ray_shoot(&self, origin: Point, dir: f64, max_len: Option<f64>) -> Result<(Point, f64)> {
        if !self.contains(origin).is_inside() {
            return Err(Error::OriginOutside(origin));
        }
        let d = Point::from_angle(dir);
        let mut params = vec![0.0];
        for e in self.edges() {
            params.extend(
                line_segment_params(origin, d, e.a, e.b)
                    .into_iter()
                    .filter(|&t| t > 0.0),
            );
        }
        params.sort_by(f64::total_cmp);
        params.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
        let mut exit = *params.last().unwrap_or(&0.0);
        for w in params.windows(2) {
            let mid = origin + d * (0.5 * (w[0] + w[1]));
            if !self.contains(mid).is_inside() {
                exit = w[0];
                break;
            }
        }
        let len = match max_len {
            Some(cap) if cap < exit => cap.max(0.0),
            _ => exit,
        };
        Ok((origin + d * len, len))
    }

    /// Whether the closed segment `ab` lies inside the closed polygon.
    pub fn segment_inside(&self, a: Point, b: Point) -> bool {
        if !self.contains(a).is_inside() || !self.contains(b).is_inside() {
            return false;
        }
        let d = b - a;
        if d.norm() == 0.0 {
            return true;
        }
        let mut params = vec![0.0, 1.0];
        for e in self.edges() {
            if !segments_intersect(a, b, e.a, e.b) {
                continue;
            }
            params.extend(
                line_segment_params(a, d, e.a, e.b)
                    .into_iter()
                    .filter(|t| (0.0..=1.0).contains(t)),
            );
        }
        params.sort_by(f64::total_cmp);
        params.dedup_by(|x, y| (*x - *y).abs() <= 1e-14);
        params
            .windows(2)
            .all(|w| self.contains(a + d * (0.5 * (w[0] + w[1]))).is_inside())
    }

    /// Arc length along the counterclockwise boundary from vertex 0 to a
    /// boundary point, or `None` if `p` is farther than `tol` from it.
    pub fn boundary_coordinate(&self, p: Point, tol: f64) -> Option<f64> {
        let (i, t) = self.boundary_position(p, tol)?;
        let before: f64 = (0..i).map(|j| self.edge(j).length()).sum();
        Some(before + t * self.edge(i).length())
    }

    /// Point at boundary coordinate `u` (taken modulo the perimeter).
    pub fn boundary_point(&self, u: f64) -> Point {
        let mut rest = u.rem_euclid(self.perimeter());
        for e in self.edges() {
            let len = e.length();
            if rest <= len {
                return e.at(rest / len);
            }
            rest -= len;
        }
        self.vertices[0]
    }

    /// Boundary chain walked counterclockwise from coordinate `from` to `to`,
    /// both endpoints included.
    pub fn boundary_walk(&self, from: f64, to: f64) -> Vec<Point> {
        let per = self.perimeter();
        let span = (to - from).rem_euclid(per);
        let mut out = vec![(0.0, self.boundary_point(from))];
        let mut acc = 0.0;
        for i in 0..self.len() {
            let off = (acc - from).rem_euclid(per);
            if off > 0.0 && off < span {
                out.push((off, self.vertices[i]));
            }
            acc += self.edge(i).length();
        }
        out.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut pts: Vec<Point> = out.into_iter().map(|x| x.1).collect();
        pts.push(self.boundary_point(to));
        pts.dedup();
        pts
    }

    /// Position of a boundary point as `(edge index, parameter along edge)`,
    /// or `None` if `p` is farther than `tol` from the boundary. Vertices
    /// report the edge they start.
    pub fn boundary_position(&self, p: Point, tol: f64) -> Option<(usize, f64)> {
        let m = self.len();
        for i in 0..m {
            if self.vertices[i].dist(p) <= tol {
                return Some((i, 0.0));
            }
        }
        let mut best: Option<(usize, f64, f64)> = None;
        for i in 0..m {
            let e = self.edge(i);
            let dist = point_segment_distance(p, e.a, e.b);
            if dist <= tol && best.is_none_or(|(_, _, bd)| dist < bd) {
                best = Some((i, e.project(p), dist));
            }
        }
        best.map(|(i, t, _)| (i, t))
    }
}

fn signed_area(vertices: &[Point]) -> f64 {
    let m = vertices.len();
    let mut twice = 0.0;
    for i in 0..m {
        twice += vertices[i].cross(vertices[(i + 1) % m]);
    }
    0.5 * twice
}

fn validate_vertices(v: &[Point]) -> Result<()> {
    let m = v.len();
    if m < 3 {
        return Err(Error::TooFewVertices(m));
    }
    if let Some(i) = v.iter().position(|p| !p.is_finite()) {
        return Err(Error::NonFiniteCoordinate(i));
    }
    for i in 0..m {
        for j in i + 1..m {
            if v[i].dist(v[j]) <= TAU_DIST {
                return Err(Error::DuplicateVertex(i, j));
            }
        }
    }
    for i in 0..m {
        let prev = v[(i + m - 1) % m];
        let next = v[(i + 1) % m];
        if orient(prev, v[i], next) == Orientation::Collinear {
            return Err(Error::CollinearRun(i));
        }
    }
    let boxes: Vec<[f64; 4]> = (0..m)
        .map(|i| {
            let a = v[i];
            let b = v[(i + 1) % m];
            [a.x.min(b.x), a.x.max(b.x), a.y.min(b.y), a.y.max(b.y)]
        })
        .collect();
    for i in 0..m {
        for j in i + 2..m {
            if i == 0 && j == m - 1 {
                continue;
            }
            let (bi, bj) = (boxes[i], boxes[j]);
            if bi[1] < bj[0] || bj[1] < bi[0] || bi[3] < bj[2] || bj[3] < bi[2] {
                continue;
            }
            if segments_intersect(v[i], v[(i + 1) % m], v[j], v[(j + 1) % m]) {
                return Err(Error::SelfIntersecting(i, j));
            }
        }
    }
    Ok(())
}

/// Signed area of a closed ring (positive when counterclockwise).
pub fn ring_signed_area(ring: &[Point]) -> f64 {
    let n = ring.len();
    (0..n).map(|i| ring[i].cross(ring[(i + 1) % n])).sum::<f64>() / 2.0
}

/// Even-odd containment of `p` in a closed ring.
pub fn ring_contains(ring: &[Point], p: Point) -> bool {
    let n = ring.len();
    let mut inside = false;
    for i in 0..n {
        let (a, b) = (ring[i], ring[(i + 1) % n]);
        if (a.y > p.y) != (b.y > p.y) {
            let x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if p.x < x {
                inside = !inside;
            }
        }
    }
    inside
}

/// Distance from `p` to the edges of a closed ring.
pub fn ring_distance(ring: &[Point], p: Point) -> f64 {
    let n = ring.len();
    (0..n)
        .map(|i| point_segment_distance(p, ring[i], ring[(i + 1) % n]))
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{l_shape, square};

    #[test]
    fn validates_examples() {
        assert_eq!(square().area(), 100.0);
        let l = l_shape();
        assert_eq!(l.len(), 6);
        assert!(l.is_reflex(4));
        assert_eq!(l.vertex(4), Point::new(2.0, 2.0));
        assert_eq!((0..6).filter(|&i| l.is_reflex(i)).count(), 1);
        let bowtie = vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 2.0),
            Point::new(2.0, 0.0),
            Point::new(0.0, 2.0),
        ];
        assert!(matches!(SimplePolygon::new(bowtie), Err(Error::SelfIntersecting(..))));
    }

    #[test]
    fn rejects_bad_input() {
        let two = vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0)];
        assert!(matches!(SimplePolygon::new(two), Err(Error::TooFewVertices(2))));
        let dup = vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 0.0),
        ];
        assert!(matches!(SimplePolygon::new(dup), Err(Error::DuplicateVertex(..))));
        let collinear = vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(1.0, 1.0),
        ];
        assert!(matches!(SimplePolygon::new(collinear), Err(Error::CollinearRun(1))));
        let nan = vec![Point::new(0.0, 0.0), Point::new(f64::NAN, 0.0), Point::new(1.0, 1.0)];
        assert!(matches!(SimplePolygon::new(nan), Err(Error::NonFiniteCoordinate(1))));
    }

    #[test]
    fn clockwise_input_is_reversed() {
        let cw = vec![
            Point::new(0.0, 0.0),
            Point::new(0.0, 10.0),
            Point::new(10.0, 10.0),
            Point::new(10.0, 0.0),
        ];
        let poly = SimplePolygon::new(cw).unwrap();
        assert_eq!(poly.area(), 100.0);
    }

    #[test]
    fn containment_examples() {
        let l = l_shape();
        assert_eq!(l.contains(Point::new(3.0, 1.0)), Containment::Interior);
        assert_eq!(l.contains(Point::new(1.0, 3.0)), Containment::Exterior);
        assert_eq!(l.contains(Point::new(2.0, 3.0)), Containment::Boundary);
    }

    #[test]
    fn ray_shoot_examples() {
        let l = l_shape();
        let (hit, len) = l.ray_shoot(Point::new(1.0, 1.0), 0.0, None).unwrap();
        assert!(hit.approx_eq(Point::new(4.0, 1.0), 1e-12) && (len - 3.0).abs() < 1e-12);
        let (hit, len) = l.ray_shoot(Point::new(1.0, 1.0), 225f64.to_radians(), None).unwrap();
        assert!(hit.approx_eq(Point::new(0.0, 0.0), 1e-12));
        assert!((len - 2f64.sqrt()).abs() < 1e-12);
        let sq = square();
        let (hit, len) = sq
            .ray_shoot(Point::new(5.0, 5.0), 90f64.to_radians(), Some(2.0))
            .unwrap();
        assert!(hit.approx_eq(Point::new(5.0, 7.0), 1e-12) && len == 2.0);
        assert!(matches!(
            l.ray_shoot(Point::new(1.0, 3.0), 0.0, None),
            Err(Error::OriginOutside(_))
        ));
    }

    #[test]
    fn ray_from_boundary_pointing_out_has_zero_length() {
        let sq = square();
        let (hit, len) = sq.ray_shoot(Point::new(0.0, 5.0), std::f64::consts::PI, None).unwrap();
        assert_eq!(len, 0.0);
        assert_eq!(hit, Point::new(0.0, 5.0));
    }

    #[test]
    fn ray_grazing_a_reflex_vertex_continues() {
        let l = l_shape();
        // passes exactly through the reflex corner (2,2) and stays inside
        let (hit, _) = l.ray_shoot(Point::new(1.0, 1.0), 45f64.to_radians(), None).unwrap();
        assert!(hit.approx_eq(Point::new(4.0, 4.0), 1e-9));
    }

    #[test]
    fn segment_visibility() {
        let l = l_shape();
        assert!(l.segment_inside(Point::new(1.0, 1.0), Point::new(3.0, 3.0)));
        assert!(!l.segment_inside(Point::new(1.0, 1.5), Point::new(3.0, 3.0)));
        assert!(l.segment_inside(Point::new(0.0, 0.0), Point::new(4.0, 0.0)));
    }

    #[test]
    fn boundary_walk_runs_counterclockwise() {
        let sq = square();
        let from = sq.boundary_coordinate(Point::new(5.0, 0.0), 1e-9).unwrap();
        let to = sq.boundary_coordinate(Point::new(0.0, 5.0), 1e-9).unwrap();
        assert_eq!(from, 5.0);
        let walk = sq.boundary_walk(from, to);
        assert_eq!(
            walk,
            vec![
                Point::new(5.0, 0.0),
                Point::new(10.0, 0.0),
                Point::new(10.0, 10.0),
                Point::new(0.0, 10.0),
                Point::new(0.0, 5.0)
            ]
        );
        assert_eq!(sq.boundary_walk(to, from).len(), 3);
        assert_eq!(ring_signed_area(&walk), 87.5);
    }
}
