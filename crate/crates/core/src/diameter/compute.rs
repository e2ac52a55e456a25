use crate::error::{Error, Result};
use crate::geodesic::{shortest_path, GeodesicPath, ShortestPathTree};
use crate::kernel::{Point, SimplePolygon};
use crate::tolerance::TAU_DIST;

const PIVOTS: usize = 8;

/// The geodesic diameter pair of a point set and the path `Γ` between them.
#[derive(Clone, Debug, PartialEq)]
pub struct Diameter {
    pub p1_index: usize,
    pub p2_index: usize,
    pub gamma: GeodesicPath,
    pub length: f64,
}

impl Diameter {
    fn from_pair(poly: &SimplePolygon, points: &[Point], i: usize, j: usize) -> Result<Self> {
        let gamma = shortest_path(poly, points[i], points[j])?;
        Ok(Diameter {
            p1_index: i,
            p2_index: j,
            length: gamma.length(),
            gamma,
        })
    }

    pub fn p1(&self) -> Point {
        self.gamma.source()
    }

    pub fn p2(&self) -> Point {
        self.gamma.target()
    }
}

/// Locates every point, failing on the first one outside the polygon.
pub(crate) fn locate_all(poly: &SimplePolygon, points: &[Point]) -> Result<Vec<usize>> {
    let tri = poly.triangulation();
    points
        .iter()
        .map(|&p| tri.locate(p, TAU_DIST).ok_or(Error::PointOutside(p)))
        .collect()
}

fn distances_from(spt: &ShortestPathTree, points: &[Point], tris: &[usize]) -> Vec<f64> {
    points
        .iter()
        .zip(tris)
        .map(|(&p, &t)| spt.query_located(p, t).dist)
        .collect()
}

fn argmax(d: &[f64]) -> usize {
    let mut best = 0;
    for (i, &x) in d.iter().enumerate() {
        if x > d[best] {
            best = i;
        }
    }
    best
}

/// Exact geodesic diameter of `points`.
///
/// A handful of shortest-path trees rooted at pivot points give upper bounds
/// `d(a,b) <= d(a,s) + d(s,b)`; only pairs whose bound reaches the best
/// distance found so far are evaluated. Among all pairs within `TAU_DIST` of
/// the maximum, the lexicographically smallest index pair wins.
pub fn compute_diameter(poly: &SimplePolygon, points: &[Point]) -> Result<Diameter> {
    let n = points.len();
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let tris = locate_all(poly, points)?;

    let mut pivots: Vec<usize> = Vec::new();
    let mut dist: Vec<Vec<f64>> = Vec::new();
    let mut next = 0;
    while pivots.len() < PIVOTS.min(n) {
        pivots.push(next);
        let spt = ShortestPathTree::build(poly, points[next])?;
        dist.push(distances_from(&spt, points, &tris));
        let last = dist.last().unwrap();
        next = match pivots.len() {
            // two sweeps for a good lower bound, then a central pivot,
            // then farthest-first
            1 | 2 => argmax(last),
            3 => {
                let ecc: Vec<f64> = (0..n).map(|b| -dist[1][b].max(dist[2][b])).collect();
                argmax(&ecc)
            }
            _ => {
                let near: Vec<f64> = (0..n)
                    .map(|b| dist.iter().map(|d| d[b]).fold(f64::INFINITY, f64::min))
                    .collect();
                argmax(&near)
            }
        };
        if pivots.contains(&next) {
            next = (0..n).find(|i| !pivots.contains(i)).unwrap_or(next);
        }
    }

    let mut best = 0.0f64;
    let mut pairs: Vec<(usize, usize, f64)> = Vec::new();
    for (s, &ps) in pivots.iter().enumerate() {
        for (b, &d) in dist[s].iter().enumerate() {
            best = best.max(d);
            if b != ps && d >= best - TAU_DIST {
                pairs.push((ps.min(b), ps.max(b), d));
            }
        }
    }
    let radius: Vec<f64> = dist.iter().map(|d| d.iter().copied().fold(0.0, f64::max)).collect();
    let bounds: Vec<[f64; PIVOTS]> = (0..n)
        .map(|a| {
            let mut row = [f64::INFINITY; PIVOTS];
            for (s, d) in dist.iter().enumerate() {
                row[s] = d[a];
            }
            row
        })
        .collect();
    let reach = |a: usize| -> f64 {
        (0..dist.len())
            .map(|s| bounds[a][s] + radius[s])
            .fold(f64::INFINITY, f64::min)
    };
    let cand: Vec<usize> = (0..n).filter(|&a| reach(a) >= best - TAU_DIST).collect();

    for (ci, &a) in cand.iter().enumerate() {
        if reach(a) < best - TAU_DIST {
            continue;
        }
        let mut spt: Option<ShortestPathTree> = None;
        for &b in &cand[ci + 1..] {
            let bound = (0..PIVOTS)
                .map(|s| bounds[a][s] + bounds[b][s])
                .fold(f64::INFINITY, f64::min);
            if bound < best - TAU_DIST {
                continue;
            }
            if spt.is_none() {
                spt = Some(ShortestPathTree::build(poly, points[a])?);
            }
            let d = spt.as_ref().unwrap().query_located(points[b], tris[b]).dist;
            if d >= best - TAU_DIST {
                best = best.max(d);
                pairs.push((a, b, d));
            }
        }
    }

    let (i, j, _) = pairs
        .into_iter()
        .filter(|&(i, j, d)| i != j && d >= best - TAU_DIST)
        .min_by_key(|&(i, j, _)| (i, j))
        .unwrap_or((0, 1, 0.0));
    Diameter::from_pair(poly, points, i, j)
}

/// All-pairs reference implementation using two-point shortest paths.
pub fn compute_diameter_brute(poly: &SimplePolygon, points: &[Point]) -> Result<Diameter> {
    let n = points.len();
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let mut all = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            all.push((i, j, shortest_path(poly, points[i], points[j])?.length()));
        }
    }
    let best = all.iter().map(|x| x.2).fold(0.0, f64::max);
    let (i, j, _) = all
        .into_iter()
        .find(|&(_, _, d)| d >= best - TAU_DIST)
        .expect("at least one pair");
    Diameter::from_pair(poly, points, i, j)
}
