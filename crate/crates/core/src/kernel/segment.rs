use super::point::Point;
use super::predicates::{orient, Orientation};

/// Directed segment `a -> b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub const fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    pub fn length(&self) -> f64 {
        self.a.dist(self.b)
    }

    pub fn direction(&self) -> f64 {
        self.a.angle_to(self.b)
    }

    pub fn at(&self, t: f64) -> Point {
        self.a.lerp(self.b, t)
    }

    pub fn reversed(&self) -> Segment {
        Segment::new(self.b, self.a)
    }

    pub fn is_degenerate(&self, tol: f64) -> bool {
        self.length() <= tol
    }

    pub fn distance_to_point(&self, p: Point) -> f64 {
        point_segment_distance(p, self.a, self.b)
    }

    /// Parameter of the orthogonal projection of `p`, clamped to `[0, 1]`.
    pub fn project(&self, p: Point) -> f64 {
        let d = self.b - self.a;
        let len2 = d.dot(d);
        if len2 == 0.0 {
            return 0.0;
        }
        ((p - self.a).dot(d) / len2).clamp(0.0, 1.0)
    }

    /// Euclidean distance between two closed segments.
    pub fn distance_to_segment(&self, other: &Segment) -> f64 {
        if segments_intersect(self.a, self.b, other.a, other.b) {
            return 0.0;
        }
        self.distance_to_point(other.a)
            .min(self.distance_to_point(other.b))
            .min(other.distance_to_point(self.a))
            .min(other.distance_to_point(self.b))
    }
}

pub fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let d = b - a;
    let len2 = d.dot(d);
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(d) / len2).clamp(0.0, 1.0);
    p.dist(a + d * t)
}

/// Exact test for `p` lying on the closed segment `ab`.
pub fn on_segment(p: Point, a: Point, b: Point) -> bool {
    orient(a, b, p) == Orientation::Collinear && within_box(p, a, b)
}

fn within_box(p: Point, a: Point, b: Point) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Exact test for intersection of the closed segments `ab` and `cd`.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 != o2
        && o3 != o4
        && o1 != Orientation::Collinear
        && o2 != Orientation::Collinear
        && o3 != Orientation::Collinear
        && o4 != Orientation::Collinear
    {
        return true;
    }
    (o1 == Orientation::Collinear && within_box(c, a, b))
        || (o2 == Orientation::Collinear && within_box(d, a, b))
        || (o3 == Orientation::Collinear && within_box(a, c, d))
        || (o4 == Orientation::Collinear && within_box(b, c, d))
}

/// Exact test for a proper crossing: the interiors meet in a single point and
/// no endpoint lies on the other segment.
pub fn segments_cross_properly(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o1 = orient(a, b, c).signum();
    let o2 = orient(a, b, d).signum();
    let o3 = orient(c, d, a).signum();
    let o4 = orient(c, d, b).signum();
    o1 * o2 < 0 && o3 * o4 < 0
}

/// Parameters along the line `origin + t * dir` at which it meets the closed
/// segment `cd`. A collinear overlap reports both ends of the overlap.
pub fn line_segment_params(origin: Point, dir: Point, c: Point, d: Point) -> Vec<f64> {
    let e = d - c;
    let denom = dir.cross(e);
    let w = c - origin;
    let scale = dir.norm() * e.norm();
    if denom.abs() <= 1e-14 * scale {
        // parallel; only collinear overlaps matter
        if w.cross(dir).abs() > 1e-12 * dir.norm() * (1.0 + w.norm()) {
            return Vec::new();
        }
        let len2 = dir.dot(dir);
        return vec![w.dot(dir) / len2, (d - origin).dot(dir) / len2];
    }
    let t = w.cross(e) / denom;
    let u = w.cross(dir) / denom;
    if (-1e-12..=1.0 + 1e-12).contains(&u) {
        vec![t]
    } else {
        Vec::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn crossing_and_touching() {
        assert!(segments_intersect(p(0.0, 0.0), p(2.0, 2.0), p(0.0, 2.0), p(2.0, 0.0)));
        assert!(segments_cross_properly(
            p(0.0, 0.0),
            p(2.0, 2.0),
            p(0.0, 2.0),
            p(2.0, 0.0)
        ));
        // T-junction touches but does not cross
        assert!(segments_intersect(p(0.0, 0.0), p(2.0, 0.0), p(1.0, 0.0), p(1.0, 1.0)));
        assert!(!segments_cross_properly(
            p(0.0, 0.0),
            p(2.0, 0.0),
            p(1.0, 0.0),
            p(1.0, 1.0)
        ));
        assert!(!segments_intersect(p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0), p(3.0, 0.0)));
        assert!(segments_intersect(p(0.0, 0.0), p(2.0, 0.0), p(1.0, 0.0), p(3.0, 0.0)));
    }

    #[test]
    fn distances() {
        let s = Segment::new(p(0.0, 0.0), p(4.0, 0.0));
        assert_eq!(s.distance_to_point(p(2.0, 3.0)), 3.0);
        assert_eq!(s.distance_to_point(p(-3.0, 4.0)), 5.0);
        let t = Segment::new(p(0.0, 1.0), p(4.0, 1.0));
        assert_eq!(s.distance_to_segment(&t), 1.0);
    }

    #[test]
    fn line_params() {
        let t = line_segment_params(p(0.0, 0.0), p(1.0, 0.0), p(3.0, -1.0), p(3.0, 1.0));
        assert_eq!(t, vec![3.0]);
        let t = line_segment_params(p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0), p(5.0, 0.0));
        assert_eq!(t, vec![2.0, 5.0]);
    }
}
