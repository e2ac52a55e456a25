use crate::kernel::{line_segment_params, Point, Segment, SimplePolygon};
use crate::tolerance::TAU_DIST;

use super::gamma::GammaStar;

/// Where a segment of `B` comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BSource {
    /// `s_i ∩ σ` for `i` in {1, 2}.
    Extension(u8),
    /// Part of the component of `∂σ ∩ P` through the exit point of `s_i`.
    SquareBoundary(u8),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BSegment {
    pub segment: Segment,
    pub source: BSource,
}

/// Segments guarding the region outside the square `σ`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundarySet {
    pub segments: Vec<BSegment>,
    /// Corners of `σ`, counterclockwise.
    pub sigma: [Point; 4],
}

fn square_around(p1: Point, p2: Point, half: f64) -> [Point; 4] {
    let theta = if p1 == p2 { 0.0 } else { p1.angle_to(p2) };
    let c = p1.midpoint(p2);
    [(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)].map(|(x, y)| c + Point::new(x * half, y * half).rotate(theta))
}

/// Position along the square perimeter, `0..4` with one unit per side.
fn perimeter_param(sigma: &[Point; 4], p: Point) -> f64 {
    (0..4)
        .map(|i| {
            let s = Segment::new(sigma[i], sigma[(i + 1) % 4]);
            (s.distance_to_point(p), i as f64 + s.project(p))
        })
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .unwrap()
        .1
}

fn perimeter_point(sigma: &[Point; 4], t: f64) -> Point {
    let t = t.rem_euclid(4.0);
    let i = (t.floor() as usize).min(3);
    sigma[i].lerp(sigma[(i + 1) % 4], t - i as f64)
}

fn inside_square(sigma: &[Point; 4], p: Point) -> bool {
    (0..4).all(|i| (sigma[(i + 1) % 4] - sigma[i]).cross(p - sigma[i]) >= -TAU_DIST)
}

/// Builds `B` from `s_1`, `s_2` and the square of side `2‖Γ‖` centred on
/// the midpoint of `p1 p2`, axis-aligned in the frame where `p1 p2` is
/// horizontal.
pub fn build_b(poly: &SimplePolygon, gamma_length: f64, star: &GammaStar) -> BoundarySet {
    let (p1, p2) = (star.s1.b, star.s2.a);
    let sigma = square_around(p1, p2, gamma_length);
    let mut segments = Vec::new();
    let exts = [(1u8, star.s1.reversed()), (2u8, star.s2)];
    for (i, s) in exts {
        if s.length() <= TAU_DIST {
            continue;
        }
        let exit = if inside_square(&sigma, s.b) {
            None
        } else {
            let t = (0..4)
                .flat_map(|k| line_segment_params(s.a, s.b - s.a, sigma[k], sigma[(k + 1) % 4]))
                .filter(|t| (0.0..=1.0).contains(t))
                .fold(f64::INFINITY, f64::min);
            t.is_finite().then(|| s.at(t))
        };
        let clipped = Segment::new(s.a, exit.unwrap_or(s.b));
        if clipped.length() > TAU_DIST {
            segments.push(BSegment {
                segment: clipped,
                source: BSource::Extension(i),
            });
        }
        if let Some(x) = exit {
            for seg in square_component(poly, &sigma, x) {
                segments.push(BSegment {
                    segment: seg,
                    source: BSource::SquareBoundary(i),
                });
            }
        }
    }
    BoundarySet { segments, sigma }
}

/// The connected stretch of `∂σ ∩ P` through `x`, cut at square corners.
fn square_component(poly: &SimplePolygon, sigma: &[Point; 4], x: Point) -> Vec<Segment> {
    let mut cuts: Vec<f64> = vec![0.0, 1.0, 2.0, 3.0];
    for k in 0..4 {
        let (a, b) = (sigma[k], sigma[(k + 1) % 4]);
        for e in poly.edges() {
            for t in line_segment_params(a, b - a, e.a, e.b) {
                if (0.0..=1.0).contains(&t) {
                    cuts.push(k as f64 + t);
                }
            }
        }
    }
    cuts.iter_mut().for_each(|t| *t = t.rem_euclid(4.0));
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
    let n = cuts.len();
    let interval = |i: usize| {
        let (a, b) = (cuts[i], if i + 1 < n { cuts[i + 1] } else { cuts[0] + 4.0 });
        (a, b)
    };
    let inside: Vec<bool> = (0..n)
        .map(|i| {
            let (a, b) = interval(i);
            poly.contains(perimeter_point(sigma, 0.5 * (a + b))).is_inside()
        })
        .collect();
    let tx = perimeter_param(sigma, x);
    let start = (0..n)
        .find(|&i| {
            let (a, b) = interval(i);
            (a <= tx && tx <= b) || (a <= tx + 4.0 && tx + 4.0 <= b)
        })
        .unwrap_or(0);
    if !inside[start] {
        return Vec::new();
    }
    if inside.iter().all(|&b| b) {
        return (0..4).map(|k| Segment::new(sigma[k], sigma[(k + 1) % 4])).collect();
    }
    let (mut lo, mut hi) = (start, start);
    while inside[(lo + n - 1) % n] {
        lo = (lo + n - 1) % n;
    }
    while inside[(hi + 1) % n] {
        hi = (hi + 1) % n;
    }
    let from = cuts[lo];
    let mut to = interval(hi).1;
    if to < from {
        to += 4.0;
    }
    let mut out = Vec::new();
    let mut t = from;
    while t < to - 1e-12 {
        let next = (t.floor() + 1.0).min(to);
        let seg = Segment::new(perimeter_point(sigma, t), perimeter_point(sigma, next));
        if seg.length() > TAU_DIST {
            out.push(seg);
        }
        t = next;
    }
    out
}
