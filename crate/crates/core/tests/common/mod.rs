#![allow(dead_code)]

use geocoreset::{Point, SimplePolygon};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Star-shaped polygon around (500, 500) with `n` random spokes.
pub fn star_polygon(rng: &mut impl Rng, n: usize) -> SimplePolygon {
    loop {
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let pts: Vec<Point> = angles
            .iter()
            .map(|&a| Point::new(500.0, 500.0) + Point::from_angle(a) * rng.gen_range(60.0..500.0))
            .collect();
        if let Ok(poly) = SimplePolygon::new(pts) {
            return poly;
        }
    }
}

/// Uniform-ish random point in the polygon by rejection from the bounding box.
pub fn inside_point(rng: &mut impl Rng, poly: &SimplePolygon) -> Point {
    let (mut lo, mut hi) = (poly.vertex(0), poly.vertex(0));
    for v in poly.vertices() {
        lo = Point::new(lo.x.min(v.x), lo.y.min(v.y));
        hi = Point::new(hi.x.max(v.x), hi.y.max(v.y));
    }
    loop {
        let p = Point::new(rng.gen_range(lo.x..hi.x), rng.gen_range(lo.y..hi.y));
        if poly.contains(p).is_inside() {
            return p;
        }
    }
}
