//! Orientation predicate with a floating-point filter and an exact fallback.
//!
//! The fast path evaluates the 2x2 determinant in plain `f64` and accepts the
//! sign whenever the magnitude clears a forward error bound. Otherwise the
//! determinant is expanded into six products of input coordinates, each
//! product is split exactly with an FMA, and the twelve parts are summed into
//! a nonoverlapping floating-point expansion whose most significant component
//! carries the exact sign.

use super::point::Point;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn signum(self) -> i32 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::CounterClockwise => Orientation::Clockwise,
        }
    }

    fn of(value: f64) -> Self {
        if value > 0.0 {
            Orientation::CounterClockwise
        } else if value < 0.0 {
            Orientation::Clockwise
        } else {
            Orientation::Collinear
        }
    }
}

const EPSILON: f64 = f64::EPSILON * 0.5;
const CCW_ERR_BOUND: f64 = (3.0 + 16.0 * EPSILON) * EPSILON;

/// Doubled signed area of `(a, b, c)` in plain floating point, together with
/// the bound below which its sign cannot be trusted.
pub fn orient_filtered(a: Point, b: Point, c: Point) -> (f64, f64) {
    let det_left = (a.x - c.x) * (b.y - c.y);
    let det_right = (a.y - c.y) * (b.x - c.x);
    let det = det_left - det_right;
    let bound = CCW_ERR_BOUND * (det_left.abs() + det_right.abs());
    (det, bound)
}

/// Sign of the doubled signed area of triangle `(a, b, c)`.
///
/// `CounterClockwise` means `c` lies to the left of the directed line `a -> b`.
pub fn orient(a: Point, b: Point, c: Point) -> Orientation {
    let (det, bound) = orient_filtered(a, b, c);
    if det.abs() > bound {
        return Orientation::of(det);
    }
    orient_exact(a, b, c)
}

/// Exact orientation, bypassing the floating-point filter.
pub fn orient_exact(a: Point, b: Point, c: Point) -> Orientation {
    // (a - c) x (b - c) = ax*by - ax*cy - by*cx - ay*bx + ay*cx + bx*cy
    let terms = [
        (a.x, b.y),
        (-a.x, c.y),
        (-b.y, c.x),
        (-a.y, b.x),
        (a.y, c.x),
        (b.x, c.y),
    ];
    let mut expansion: Vec<f64> = Vec::with_capacity(12);
    for (u, v) in terms {
        let (hi, lo) = two_product(u, v);
        grow_expansion(&mut expansion, lo);
        grow_expansion(&mut expansion, hi);
    }
    let top = expansion.iter().rev().find(|&&e| e != 0.0).copied().unwrap_or(0.0);
    Orientation::of(top)
}

#[inline]
fn two_product(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bv = s - a;
    let av = s - bv;
    let err = (a - av) + (b - bv);
    (s, err)
}

/// Adds `b` to a nonoverlapping expansion ordered by increasing magnitude,
/// dropping zero components.
fn grow_expansion(e: &mut Vec<f64>, b: f64) {
    let mut q = b;
    let mut out = Vec::with_capacity(e.len() + 1);
    for &component in e.iter() {
        let (sum, err) = two_sum(q, component);
        if err != 0.0 {
            out.push(err);
        }
        q = sum;
    }
    if q != 0.0 {
        out.push(q);
    }
    *e = out;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn basic_signs() {
        assert_eq!(orient(p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0)).signum(), 1);
        assert_eq!(orient(p(0.0, 0.0), p(1.0, 1.0), p(2.0, 2.0)).signum(), 0);
        assert_eq!(orient(p(0.0, 0.0), p(0.0, 1.0), p(1.0, 0.0)).signum(), -1);
    }

    #[test]
    fn near_degenerate_resolved_exactly() {
        // Classic failure case for naive evaluation: points nearly on y = x.
        let a = p(0.5, 0.5);
        let b = p(12.0, 12.0);
        let c = p(24.0, 24.0);
        assert_eq!(orient(a, b, c), Orientation::Collinear);
        let c2 = p(24.0, 24.0 + f64::EPSILON * 16.0);
        assert_eq!(orient(a, b, c2), Orientation::CounterClockwise);
        let c3 = p(24.0, 24.0 - f64::EPSILON * 16.0);
        assert_eq!(orient(a, b, c3), Orientation::Clockwise);
    }

    #[test]
    fn exact_matches_filter_on_tiny_perturbations() {
        let base = p(0.1, 0.1);
        let dir = p(0.3, 0.7);
        for k in -20i32..=20 {
            let off = f64::from(k) * 1e-17;
            let c = p(base.x + 2.0 * dir.x, base.y + 2.0 * dir.y + off);
            let (det, bound) = orient_filtered(base, base + dir, c);
            let exact = orient_exact(base, base + dir, c);
            if det.abs() > bound {
                assert_eq!(Orientation::of(det), exact);
            }
            assert_eq!(orient(base, base + dir, c), exact);
        }
    }
}
