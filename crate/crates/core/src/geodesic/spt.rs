use crate::error::{Error, Result};
use crate::kernel::{orient, Orientation, Point, SimplePolygon};
use crate::tolerance::TAU_DIST;

use super::path::GeodesicPath;

const NONE: u32 = u32::MAX;

/// Shortest-path tree from a single source to every polygon vertex, with
/// the entry funnel of every triangle kept for point queries.
#[derive(Clone, Debug)]
pub struct ShortestPathTree<'a> {
    poly: &'a SimplePolygon,
    source: Point,
    /// Polygon vertex id of the source, or `m` if it is not a vertex.
    source_node: u32,
    source_tri: usize,
    dist: Vec<f64>,
    parent: Vec<u32>,
    first_hop: Vec<u32>,
    funnel_nodes: Vec<u32>,
    /// Per triangle: `(start, len, apex)` into `funnel_nodes`.
    funnels: Vec<(u32, u32, u32)>,
}

/// Result of a point query against a shortest-path tree.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SptHit {
    pub dist: f64,
    /// Direction of the first path edge at the source; `None` when the
    /// target coincides with the source.
    pub first_dir: Option<f64>,
    /// Last node before the target (`m` for the source itself).
    pub last_node: u32,
}

impl<'a> ShortestPathTree<'a> {
    pub fn build(poly: &'a SimplePolygon, source: Point) -> Result<Self> {
        let tri = poly.triangulation();
        let m = poly.len();
        let ts = tri.locate(source, TAU_DIST).ok_or(Error::PointOutside(source))?;
        let corners = tri.triangle(ts);
        let mut source_node = m as u32;
        for &c in &corners {
            if poly.vertex(c).dist(source) <= TAU_DIST {
                source_node = c as u32;
            }
        }
        let mut spt = ShortestPathTree {
            poly,
            source: if source_node as usize == m {
                source
            } else {
                poly.vertex(source_node as usize)
            },
            source_node,
            source_tri: ts,
            dist: vec![f64::INFINITY; m],
            parent: vec![NONE; m],
            first_hop: vec![NONE; m],
            funnel_nodes: Vec::new(),
            funnels: vec![(0, 0, 0); tri.len()],
        };
        for &c in &corners {
            if c as u32 == source_node {
                spt.dist[c] = 0.0;
            } else {
                spt.dist[c] = spt.source.dist(poly.vertex(c));
                spt.parent[c] = source_node;
                spt.first_hop[c] = c as u32;
            }
        }
        let nb = tri.neighbors(ts);
        let mut stack: Vec<(usize, Vec<u32>, usize)> = Vec::new();
        for i in 0..3 {
            let Some(u) = nb[i] else { continue };
            let (l, r) = (corners[(i + 1) % 3] as u32, corners[i] as u32);
            let entry = if l == source_node {
                (vec![l, r], 0)
            } else if r == source_node {
                (vec![l, r], 1)
            } else {
                (vec![l, source_node, r], 1)
            };
            stack.push((u, entry.0, entry.1));
        }
        while let Some((t, seq, apex)) = stack.pop() {
            spt.funnels[t] = (spt.funnel_nodes.len() as u32, seq.len() as u32, apex as u32);
            spt.funnel_nodes.extend_from_slice(&seq);
            let corners = tri.triangle(t);
            let (l, r) = (seq[0] as usize, *seq.last().unwrap() as usize);
            let i = (0..3)
                .find(|&i| corners[i] == l && corners[(i + 1) % 3] == r)
                .expect("funnel base is a triangle edge");
            let x = corners[(i + 2) % 3];
            let xp = poly.vertex(x);
            let j = spt.tangent(&seq, apex, xp);
            let w = seq[j];
            if spt.dist[x].is_infinite() {
                spt.dist[x] = spt.node_dist(w) + spt.node_point(w).dist(xp);
                spt.parent[x] = w;
                spt.first_hop[x] = if w == source_node {
                    x as u32
                } else {
                    spt.first_hop[w as usize]
                };
            }
            let nb = tri.neighbors(t);
            if let Some(u) = nb[(i + 1) % 3] {
                let mut s = vec![x as u32];
                s.extend_from_slice(&seq[j..]);
                stack.push((u, s, 1 + apex.saturating_sub(j)));
            }
            if let Some(u) = nb[(i + 2) % 3] {
                let mut s = seq[..=j].to_vec();
                s.push(x as u32);
                stack.push((u, s, apex.min(j)));
            }
        }
        Ok(spt)
    }

    pub fn source(&self) -> Point {
        self.source
    }

    pub fn polygon(&self) -> &'a SimplePolygon {
        self.poly
    }

    /// Geodesic distance from the source to polygon vertex `v`.
    pub fn vertex_distance(&self, v: usize) -> f64 {
        self.dist[v]
    }

    fn node_point(&self, n: u32) -> Point {
        if n as usize == self.poly.len() {
            self.source
        } else {
            self.poly.vertex(n as usize)
        }
    }

    fn node_dist(&self, n: u32) -> f64 {
        if n == self.source_node {
            0.0
        } else {
            self.dist[n as usize]
        }
    }

    fn tangent(&self, seq: &[u32], apex: usize, x: Point) -> usize {
        let p = |j: usize| self.node_point(seq[j]);
        let mut j = apex;
        if j > 0 && orient(p(j), p(j - 1), x) != Orientation::Clockwise {
            while j > 0 && orient(p(j), p(j - 1), x) != Orientation::Clockwise {
                j -= 1;
            }
            return j;
        }
        while j + 1 < seq.len() && orient(p(j), p(j + 1), x) != Orientation::CounterClockwise {
            j += 1;
        }
        j
    }

    fn last_node(&self, t: Point, tri_idx: usize) -> u32 {
        if tri_idx == self.source_tri {
            return self.source_node;
        }
        let (start, len, apex) = self.funnels[tri_idx];
        let seq = &self.funnel_nodes[start as usize..(start + len) as usize];
        seq[self.tangent(seq, apex as usize, t)]
    }

    /// Distance and first direction towards `t`, with `t` already located in
    /// triangle `tri_idx`.
    pub fn query_located(&self, t: Point, tri_idx: usize) -> SptHit {
        let w = self.last_node(t, tri_idx);
        let wp = self.node_point(w);
        let dist = self.node_dist(w) + wp.dist(t);
        let first_dir = if w == self.source_node {
            (t != self.source).then(|| self.source.angle_to(t))
        } else {
            Some(
                self.source
                    .angle_to(self.poly.vertex(self.first_hop[w as usize] as usize)),
            )
        };
        SptHit {
            dist,
            first_dir,
            last_node: w,
        }
    }

    pub fn query(&self, t: Point) -> Result<SptHit> {
        let ti = self
            .poly
            .triangulation()
            .locate(t, TAU_DIST)
            .ok_or(Error::PointOutside(t))?;
        Ok(self.query_located(t, ti))
    }

    pub fn distance(&self, t: Point) -> Result<f64> {
        Ok(self.query(t)?.dist)
    }

    /// Full shortest path from the source to `t`.
    pub fn path(&self, t: Point) -> Result<GeodesicPath> {
        let hit = self.query(t)?;
        let mut rev = vec![t];
        let mut n = hit.last_node;
        while n != self.source_node {
            rev.push(self.poly.vertex(n as usize));
            n = self.parent[n as usize];
        }
        rev.push(self.source);
        rev.reverse();
        Ok(GeodesicPath::new(rev).with_touched(self.poly.vertices().iter().copied()))
    }
}
