use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::kernel::{Point, SimplePolygon};

/// Visibility graph over the polygon vertices, for brute-force distances.
#[derive(Clone, Debug)]
pub struct VisibilityGraph<'a> {
    poly: &'a SimplePolygon,
    adj: Vec<Vec<(usize, f64)>>,
}

#[derive(PartialEq)]
struct Entry(f64, usize);

impl Eq for Entry {}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then(other.1.cmp(&self.1))
    }
}

impl<'a> VisibilityGraph<'a> {
    pub fn new(poly: &'a SimplePolygon) -> Self {
        let m = poly.len();
        let mut adj = vec![Vec::new(); m];
        for i in 0..m {
            for j in i + 1..m {
                let (a, b) = (poly.vertex(i), poly.vertex(j));
                if poly.segment_inside(a, b) {
                    adj[i].push((j, a.dist(b)));
                    adj[j].push((i, a.dist(b)));
                }
            }
        }
        VisibilityGraph { poly, adj }
    }

    /// Geodesic distance from `a` to `b` by Dijkstra over vertices plus the
    /// two query points.
    pub fn distance(&self, a: Point, b: Point) -> Result<f64> {
        for p in [a, b] {
            if !self.poly.contains(p).is_inside() {
                return Err(Error::PointOutside(p));
            }
        }
        if self.poly.segment_inside(a, b) {
            return Ok(a.dist(b));
        }
        let m = self.poly.len();
        let to_b: Vec<Option<f64>> = (0..m)
            .map(|i| {
                let v = self.poly.vertex(i);
                self.poly.segment_inside(v, b).then(|| v.dist(b))
            })
            .collect();
        let mut dist = vec![f64::INFINITY; m];
        let mut heap = BinaryHeap::new();
        for (i, d) in dist.iter_mut().enumerate() {
            let v = self.poly.vertex(i);
            if self.poly.segment_inside(a, v) {
                *d = a.dist(v);
                heap.push(Entry(*d, i));
            }
        }
        let mut best = f64::INFINITY;
        while let Some(Entry(d, u)) = heap.pop() {
            if d > dist[u] || d >= best {
                continue;
            }
            if let Some(tb) = to_b[u] {
                best = best.min(d + tb);
            }
            for &(v, w) in &self.adj[u] {
                if d + w < dist[v] {
                    dist[v] = d + w;
                    heap.push(Entry(dist[v], v));
                }
            }
        }
        Ok(best)
    }
}

/// One-shot brute-force geodesic distance.
pub fn visgraph_distance(poly: &SimplePolygon, a: Point, b: Point) -> Result<f64> {
    VisibilityGraph::new(poly).distance(a, b)
}
