//! Ear-clipping triangulation with dual-tree adjacency and a grid locator.

use super::point::Point;
use super::predicates::{orient, Orientation};
use super::segment::point_segment_distance;

#[derive(Clone, Debug)]
pub struct Triangulation {
    points: Vec<Point>,
    triangles: Vec<[usize; 3]>,
    /// `neighbors[t][i]` is the triangle across edge `(tri[i], tri[i+1])`.
    neighbors: Vec<[Option<usize>; 3]>,
    /// Dual tree rooted at triangle 0.
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    locator: GridLocator,
}

impl Triangulation {
    /// Triangulates a simple counterclockwise polygon with no collinear
    /// consecutive vertices.
    pub fn new(points: &[Point]) -> Self {
        let triangles = ear_clip(points);
        let neighbors = build_neighbors(&triangles);
        let (parent, depth) = root_dual_tree(&neighbors);
        let locator = GridLocator::new(points, &triangles);
        Triangulation {
            points: points.to_vec(),
            triangles,
            neighbors,
            parent,
            depth,
            locator,
        }
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn triangle(&self, t: usize) -> [usize; 3] {
        self.triangles[t]
    }

    pub fn neighbors(&self, t: usize) -> [Option<usize>; 3] {
        self.neighbors[t]
    }

    pub fn corner_points(&self, t: usize) -> [Point; 3] {
        let [a, b, c] = self.triangles[t];
        [self.points[a], self.points[b], self.points[c]]
    }

    pub fn triangle_area(&self, t: usize) -> f64 {
        let [a, b, c] = self.corner_points(t);
        0.5 * (b - a).cross(c - a)
    }

    /// Shared diagonals of the dual tree as `(t, u)` pairs with `t < u`.
    pub fn dual_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (t, nb) in self.neighbors.iter().enumerate() {
            for u in nb.iter().flatten() {
                if t < *u {
                    out.push((t, *u));
                }
            }
        }
        out
    }

    /// Index `i` such that `triangle(t)[i], triangle(t)[i+1]` is the edge
    /// shared with `u`.
    pub fn shared_edge(&self, t: usize, u: usize) -> Option<usize> {
        self.neighbors[t].iter().position(|&n| n == Some(u))
    }

    /// Closed containment test for triangle `t`.
    pub fn triangle_contains(&self, t: usize, p: Point) -> bool {
        let [a, b, c] = self.corner_points(t);
        orient(a, b, p) != Orientation::Clockwise
            && orient(b, c, p) != Orientation::Clockwise
            && orient(c, a, p) != Orientation::Clockwise
    }

    fn triangle_distance(&self, t: usize, p: Point) -> f64 {
        if self.triangle_contains(t, p) {
            return 0.0;
        }
        let [a, b, c] = self.corner_points(t);
        point_segment_distance(p, a, b)
            .min(point_segment_distance(p, b, c))
            .min(point_segment_distance(p, c, a))
    }

    /// Smallest-index triangle containing `p`. Points a hair outside the
    /// polygon (within `tol`) snap to the nearest triangle.
    pub fn locate(&self, p: Point, tol: f64) -> Option<usize> {
        if let Some(t) = self
            .locator
            .candidates(p)
            .iter()
            .copied()
            .filter(|&t| self.triangle_contains(t, p))
            .min()
        {
            return Some(t);
        }
        let (best, dist) = (0..self.len())
            .map(|t| (t, self.triangle_distance(t, p)))
            .min_by(|a, b| a.1.total_cmp(&b.1))?;
        (dist <= tol).then_some(best)
    }

    /// Triangles on the dual-tree path from `from` to `to`, inclusive.
    pub fn dual_path(&self, from: usize, to: usize) -> Vec<usize> {
        let (mut a, mut b) = (from, to);
        let mut left = vec![];
        let mut right = vec![];
        while self.depth[a] > self.depth[b] {
            left.push(a);
            a = self.parent[a].expect("non-root has parent");
        }
        while self.depth[b] > self.depth[a] {
            right.push(b);
            b = self.parent[b].expect("non-root has parent");
        }
        while a != b {
            left.push(a);
            right.push(b);
            a = self.parent[a].expect("non-root has parent");
            b = self.parent[b].expect("non-root has parent");
        }
        left.push(a);
        left.extend(right.into_iter().rev());
        left
    }
}

fn ear_clip(points: &[Point]) -> Vec<[usize; 3]> {
    let m = points.len();
    let mut prev: Vec<usize> = (0..m).map(|i| (i + m - 1) % m).collect();
    let mut next: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
    let convex = |prev: &[usize], next: &[usize], i: usize| {
        orient(points[prev[i]], points[i], points[next[i]]) == Orientation::CounterClockwise
    };
    // vertices that may block an ear: everything not strictly convex
    let mut blocking: Vec<bool> = (0..m).map(|i| !convex(&prev, &next, i)).collect();
    let mut blockers: Vec<usize> = (0..m).filter(|&i| blocking[i]).collect();
    let mut alive = vec![true; m];

    let mut triangles = Vec::with_capacity(m.saturating_sub(2));
    let mut remaining = m;
    let mut cur = 0;
    let mut stall = 0;
    while remaining > 3 {
        let (a, b, c) = (prev[cur], cur, next[cur]);
        let is_ear = convex(&prev, &next, b)
            && !blockers
                .iter()
                .any(|&v| alive[v] && v != a && v != b && v != c && in_closed_triangle(points, a, b, c, v));
        if is_ear {
            triangles.push([a, b, c]);
            alive[b] = false;
            next[a] = c;
            prev[c] = a;
            remaining -= 1;
            for v in [a, c] {
                let blocks = !convex(&prev, &next, v);
                if blocking[v] && !blocks {
                    blocking[v] = false;
                }
            }
            blockers.retain(|&v| alive[v] && blocking[v]);
            cur = c;
            stall = 0;
        } else {
            cur = next[cur];
            stall += 1;
            assert!(stall <= 2 * m, "ear clipping stalled; polygon is not simple");
        }
    }
    let (a, b, c) = (prev[cur], cur, next[cur]);
    triangles.push([a, b, c]);
    triangles
}

fn in_closed_triangle(points: &[Point], a: usize, b: usize, c: usize, v: usize) -> bool {
    let p = points[v];
    orient(points[a], points[b], p) != Orientation::Clockwise
        && orient(points[b], points[c], p) != Orientation::Clockwise
        && orient(points[c], points[a], p) != Orientation::Clockwise
}

fn build_neighbors(triangles: &[[usize; 3]]) -> Vec<[Option<usize>; 3]> {
    use std::collections::HashMap;
    let mut by_edge: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    let mut neighbors = vec![[None; 3]; triangles.len()];
    for (t, tri) in triangles.iter().enumerate() {
        for i in 0..3 {
            let (u, v) = (tri[i], tri[(i + 1) % 3]);
            let key = (u.min(v), u.max(v));
            if let Some((s, j)) = by_edge.remove(&key) {
                neighbors[t][i] = Some(s);
                neighbors[s][j] = Some(t);
            } else {
                by_edge.insert(key, (t, i));
            }
        }
    }
    neighbors
}

fn root_dual_tree(neighbors: &[[Option<usize>; 3]]) -> (Vec<Option<usize>>, Vec<usize>) {
    let n = neighbors.len();
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    if n == 0 {
        return (parent, depth);
    }
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(t) = stack.pop() {
        for u in neighbors[t].iter().flatten() {
            if !seen[*u] {
                seen[*u] = true;
                parent[*u] = Some(t);
                depth[*u] = depth[t] + 1;
                stack.push(*u);
            }
        }
    }
    (parent, depth)
}

/// Uniform grid over the bounding box; each cell lists the triangles whose
/// bounding boxes overlap it.
#[derive(Clone, Debug)]
struct GridLocator {
    origin: Point,
    cell: f64,
    cols: usize,
    rows: usize,
    cells: Vec<Vec<usize>>,
}

impl GridLocator {
    fn new(points: &[Point], triangles: &[[usize; 3]]) -> Self {
        let (mut lo, mut hi) = (points[0], points[0]);
        for p in points {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let span = (hi.x - lo.x).max(hi.y - lo.y).max(f64::MIN_POSITIVE);
        let side = ((triangles.len() as f64).sqrt().ceil() as usize).clamp(1, 256);
        let cell = span / side as f64;
        let cols = (((hi.x - lo.x) / cell).floor() as usize + 1).max(1);
        let rows = (((hi.y - lo.y) / cell).floor() as usize + 1).max(1);
        let mut grid = GridLocator {
            origin: lo,
            cell,
            cols,
            rows,
            cells: vec![Vec::new(); cols * rows],
        };
        for (t, tri) in triangles.iter().enumerate() {
            let ps = tri.map(|i| points[i]);
            let min = Point::new(
                ps.iter().map(|p| p.x).fold(f64::INFINITY, f64::min),
                ps.iter().map(|p| p.y).fold(f64::INFINITY, f64::min),
            );
            let max = Point::new(
                ps.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max),
                ps.iter().map(|p| p.y).fold(f64::NEG_INFINITY, f64::max),
            );
            let (c0, r0) = grid.cell_of(min);
            let (c1, r1) = grid.cell_of(max);
            for r in r0..=r1 {
                for c in c0..=c1 {
                    grid.cells[r * cols + c].push(t);
                }
            }
        }
        grid
    }

    fn cell_of(&self, p: Point) -> (usize, usize) {
        let c = ((p.x - self.origin.x) / self.cell).floor();
        let r = ((p.y - self.origin.y) / self.cell).floor();
        let clamp = |v: f64, n: usize| (v.max(0.0) as usize).min(n - 1);
        (clamp(c, self.cols), clamp(r, self.rows))
    }

    fn candidates(&self, p: Point) -> &[usize] {
        let (c, r) = self.cell_of(p);
        &self.cells[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{l_shape, regular_polygon, square};

    fn check(poly: &crate::SimplePolygon) {
        let tri = poly.triangulation();
        let m = poly.len();
        assert_eq!(tri.len(), m - 2);
        assert_eq!(tri.dual_edges().len(), m - 3);
        let total: f64 = (0..tri.len()).map(|t| tri.triangle_area(t)).sum();
        assert!((total - poly.area()).abs() <= 1e-9 * poly.area());
        assert!((0..tri.len()).all(|t| tri.triangle_area(t) > 0.0));
    }

    #[test]
    fn triangle_counts() {
        let sq = square();
        check(&sq);
        assert_eq!(sq.triangulation().dual_edges().len(), 1);
        let l = l_shape();
        check(&l);
        assert_eq!(l.triangulation().dual_edges().len(), 3);
        let dodecagon = regular_polygon(12, 500.0);
        check(&dodecagon);
        assert_eq!(dodecagon.triangulation().len(), 10);
    }

    #[test]
    fn locate_prefers_smaller_index_on_diagonal() {
        let sq = square();
        let tri = sq.triangulation();
        // the diagonal of the square is shared by both triangles
        let (t, u) = tri.dual_edges()[0];
        let i = tri.shared_edge(t, u).unwrap();
        let tv = tri.triangle(t);
        let mid = sq.vertex(tv[i]).midpoint(sq.vertex(tv[(i + 1) % 3]));
        assert_eq!(tri.locate(mid, 1e-9), Some(t.min(u)));
        assert_eq!(tri.locate(Point::new(20.0, 20.0), 1e-9), None);
    }

    #[test]
    fn dual_path_is_connected() {
        let l = l_shape();
        let tri = l.triangulation();
        let path = tri.dual_path(0, tri.len() - 1);
        assert_eq!(*path.first().unwrap(), 0);
        assert_eq!(*path.last().unwrap(), tri.len() - 1);
        for w in path.windows(2) {
            assert!(tri.shared_edge(w[0], w[1]).is_some());
        }
    }
}
