use std::f64::consts::PI;

use crate::error::Result;
use crate::kernel::{arc_between, orient, ring_contains, ring_signed_area, Orientation, Point, SimplePolygon};
use crate::tolerance::{TAU_ANG, TAU_DIST};

use super::funnel::shortest_path;
use super::path::{ext_forward, span, GeodesicPath};

/// Pseudo-triangle spanned by the pairwise shortest paths of three points.
///
/// `sides` are `π(p,q)`, `π(q,r)`, `π(r,p)` between the split points
/// `corners = [p, q, r]`.
#[derive(Clone, Debug)]
pub struct PseudoTriangle {
    pub corners: [Point; 3],
    pub sides: [GeodesicPath; 3],
    /// Set when split points coincide, the sides overlap or the region is
    /// flat. Such triangles carry no guarantees.
    pub degenerate: bool,
}

impl PseudoTriangle {
    /// Closed boundary loop `p -> q -> r -> p` without the repeated corners.
    pub fn boundary(&self) -> Vec<Point> {
        let mut out = Vec::new();
        for s in &self.sides {
            let v = s.vertices();
            out.extend_from_slice(&v[..v.len() - 1]);
        }
        out
    }

    pub fn signed_area(&self) -> f64 {
        ring_signed_area(&self.boundary())
    }

    /// Even-odd containment in the region bounded by the sides.
    pub fn contains(&self, u: Point) -> bool {
        ring_contains(&self.boundary(), u)
    }

    /// Checks the side spans: each narrower than `π`, pairwise disjoint, no
    /// span meeting the antipode of another, and the reversed third side's
    /// span inside the arc between any direction of the first side and any
    /// direction of the second (sampled at the span ends and midpoints).
    /// Everything is shrunk by `τ_ang` first.
    pub fn spans_consistent(&self) -> Result<bool> {
        let mut spans = Vec::with_capacity(3);
        for s in &self.sides {
            spans.push(span(s)?);
        }
        for i in 0..3 {
            if spans[i].width() >= PI {
                return Ok(false);
            }
            for j in 0..3 {
                if let (Some(a), Some(b)) = (spans[i].shrunk(TAU_ANG), spans[j].shrunk(TAU_ANG)) {
                    if i != j && a.intersects(&b) {
                        return Ok(false);
                    }
                    if a.intersects(&b.antipode()) && !(i == j && a.width() == 0.0) {
                        return Ok(false);
                    }
                }
            }
        }
        let third = span(&self.sides[2].reversed())?;
        let samples = |a: &crate::kernel::DirectionArc| [a.start(), a.midpoint(), a.end()];
        for f1 in samples(&spans[0]) {
            for f2 in samples(&spans[1]) {
                match arc_between(f1, f2) {
                    Ok(arc) if arc.contains_arc(&third, TAU_ANG) => {}
                    _ => return Ok(false),
                }
            }
        }
        Ok(true)
    }

    /// For `u` strictly inside, away from side `qr` and from `p`: whether the
    /// forward extension of `π(p, u)` meets side `qr`. `None` when `u` does
    /// not qualify.
    pub fn extension_meets_opposite(&self, poly: &SimplePolygon, u: Point) -> Result<Option<bool>> {
        if !self.contains(u) || self.sides[1].distance_to_point(u) <= TAU_DIST || u.dist(self.corners[0]) <= TAU_DIST {
            return Ok(None);
        }
        let path = shortest_path(poly, self.corners[0], u)?;
        let ext = ext_forward(poly, &path, None)?;
        Ok(Some(self.sides[1].meets_segment(&ext, TAU_DIST)))
    }
}

/// Index of the last common vertex of two paths with the same source, and
/// whether the paths run on together along a shared line past it.
fn split(a: &GeodesicPath, b: &GeodesicPath) -> (usize, bool) {
    let (va, vb) = (a.vertices(), b.vertices());
    let mut i = 0;
    while i + 1 < va.len() && i + 1 < vb.len() && va[i + 1] == vb[i + 1] {
        i += 1;
    }
    let overlap = i + 1 < va.len()
        && i + 1 < vb.len()
        && orient(va[i], va[i + 1], vb[i + 1]) == Orientation::Collinear
        && (va[i + 1] - va[i]).dot(vb[i + 1] - va[i]) > 0.0;
    (i, overlap)
}

pub fn pseudo_triangle(poly: &SimplePolygon, p0: Point, q0: Point, r0: Point) -> Result<PseudoTriangle> {
    let pq = shortest_path(poly, p0, q0)?;
    let pr = shortest_path(poly, p0, r0)?;
    let qr = shortest_path(poly, q0, r0)?;
    let (qp, rp, rq) = (pq.reversed(), pr.reversed(), qr.reversed());
    let (ip, op) = split(&pq, &pr);
    let (iq, oq) = split(&qp, &qr);
    let (ir, or) = split(&rp, &rq);
    let corners = [pq.vertices()[ip], qp.vertices()[iq], rp.vertices()[ir]];
    let cut = |path: &GeodesicPath, from: usize, back: usize| {
        let v = path.vertices();
        let to = v.len() - 1 - back;
        if from < to {
            GeodesicPath::new(v[from..=to].to_vec())
        } else {
            GeodesicPath::new(vec![v[from.min(v.len() - 1)]])
        }
    };
    let sides = [cut(&pq, ip, iq), cut(&qr, iq, ir), cut(&rp, ir, ip)];
    let mut tri = PseudoTriangle {
        corners,
        sides,
        degenerate: op || oq || or,
    };
    let [p, q, r] = corners;
    let perimeter: f64 = tri.sides.iter().map(|s| s.length()).sum();
    tri.degenerate |= p.dist(q) <= TAU_DIST
        || q.dist(r) <= TAU_DIST
        || r.dist(p) <= TAU_DIST
        || tri.sides.iter().any(|s| s.is_degenerate())
        || tri.signed_area().abs() <= TAU_DIST * (1.0 + perimeter);
    Ok(tri)
}
