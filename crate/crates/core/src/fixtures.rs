//! Small hand-built polygons used throughout the tests and examples.

use std::f64::consts::TAU;

use crate::kernel::{Point, SimplePolygon};

fn poly(coords: &[(f64, f64)]) -> SimplePolygon {
    SimplePolygon::new(coords.iter().map(|&c| Point::from(c)).collect()).expect("fixture polygons are valid")
}

/// The square `[0,10]²`.
pub fn square() -> SimplePolygon {
    poly(&[(0.0, 0.0), (10.0, 0.0), (10.0, 10.0), (0.0, 10.0)])
}

/// L-shaped hexagon with its reflex vertex at `(2,2)`.
pub fn l_shape() -> SimplePolygon {
    poly(&[(0.0, 0.0), (4.0, 0.0), (4.0, 4.0), (2.0, 4.0), (2.0, 2.0), (0.0, 2.0)])
}

/// Regular `m`-gon inscribed in the circle of radius `radius` around
/// `(radius, radius)`.
pub fn regular_polygon(m: usize, radius: f64) -> SimplePolygon {
    let pts = (0..m)
        .map(|i| {
            let a = TAU * i as f64 / m as f64;
            Point::new(radius + radius * a.cos(), radius + radius * a.sin())
        })
        .collect();
    SimplePolygon::new(pts).expect("regular polygon is valid")
}

/// Comb with `teeth` rectangular teeth hanging below a horizontal spine.
///
/// The spine occupies `y ∈ [0, h]` for `x ∈ [0, width]`; every tooth is
/// `10h` deep. The leftmost tooth is flush with the left end of the spine, so
/// the polygon has `4 * teeth + 2` vertices.
pub fn comb(teeth: usize, width: f64, spine_height: f64) -> SimplePolygon {
    assert!(teeth >= 1);
    let h = spine_height;
    let depth = 10.0 * h;
    // teeth and gaps alternate; the right end of the spine overhangs by one gap
    let slot = width / (2 * teeth) as f64;
    let mut pts = vec![Point::new(0.0, h)];
    for t in 0..teeth {
        let x0 = 2.0 * slot * t as f64;
        let x1 = x0 + slot;
        if t > 0 {
            pts.push(Point::new(x0, 0.0));
        }
        pts.push(Point::new(x0, -depth));
        pts.push(Point::new(x1, -depth));
        pts.push(Point::new(x1, 0.0));
    }
    pts.push(Point::new(width, 0.0));
    pts.push(Point::new(width, h));
    SimplePolygon::new(pts).expect("comb is valid")
}

/// A `[0,10]²` room with a long corridor `[-100,0] × [4,6]` leaving to the
/// left.
pub fn corridor() -> SimplePolygon {
    poly(&[
        (-100.0, 4.0),
        (0.0, 4.0),
        (0.0, 0.0),
        (10.0, 0.0),
        (10.0, 10.0),
        (0.0, 10.0),
        (0.0, 6.0),
        (-100.0, 6.0),
    ])
}

/// `[0,100]²` with a spike rising from the floor to `(48,52)` and one
/// hanging from the ceiling to `(52,48)`. The shortest path from `(1,1)` to
/// `(99,99)` bends around both tips.
pub fn crossing_spikes() -> SimplePolygon {
    poly(&[
        (0.0, 0.0),
        (46.0, 0.0),
        (48.0, 52.0),
        (50.0, 0.0),
        (100.0, 0.0),
        (100.0, 100.0),
        (54.0, 100.0),
        (52.0, 48.0),
        (50.0, 100.0),
        (0.0, 100.0),
    ])
}
