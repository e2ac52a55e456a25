use rand::distributions::{Distribution, WeightedIndex};
use rand::Rng;

use crate::coreset::Coreset;
use crate::diameter::locate_all;
use crate::error::{Error, Result};
use crate::geodesic::{GeodesicPath, ShortestPathTree};
use crate::kernel::{Point, SimplePolygon};
use crate::tolerance::TAU_DIST;

/// Furthest neighbor of a query.
#[derive(Clone, Debug, PartialEq)]
pub struct QueryResult {
    pub index: usize,
    pub distance: f64,
    pub path: GeodesicPath,
}

/// A point set located once in the triangulation, answering furthest-neighbor
/// queries by building a shortest-path tree at each query.
pub struct QueryEngine<'a> {
    poly: &'a SimplePolygon,
    points: &'a [Point],
    tris: Vec<usize>,
}

impl<'a> QueryEngine<'a> {
    pub fn new(poly: &'a SimplePolygon, points: &'a [Point]) -> Result<Self> {
        let tris = locate_all(poly, points)?;
        Ok(QueryEngine { poly, points, tris })
    }

    pub fn polygon(&self) -> &'a SimplePolygon {
        self.poly
    }

    pub fn points(&self) -> &'a [Point] {
        self.points
    }

    /// Geodesic distances from `q` to every point.
    pub fn distances(&self, q: Point) -> Result<Vec<f64>> {
        let spt = ShortestPathTree::build(self.poly, q)?;
        Ok(self.distances_in(&spt))
    }

    fn distances_in(&self, spt: &ShortestPathTree) -> Vec<f64> {
        self.points
            .iter()
            .zip(&self.tris)
            .map(|(&p, &t)| spt.query_located(p, t).dist)
            .collect()
    }

    /// Largest distance from `q` to the point set.
    pub fn max_distance(&self, q: Point) -> Result<f64> {
        Ok(self.distances(q)?.into_iter().fold(0.0, f64::max))
    }

    /// Furthest point among `subset` (all points when `None`); distances
    /// within `τ` of the maximum tie to the smallest index.
    pub fn furthest(&self, q: Point, subset: Option<&[usize]>) -> Result<QueryResult> {
        let spt = ShortestPathTree::build(self.poly, q)?;
        let d = self.distances_in(&spt);
        let all: Vec<usize>;
        let candidates = match subset {
            Some(s) => s,
            None => {
                all = (0..self.points.len()).collect();
                &all
            }
        };
        let max = candidates.iter().map(|&i| d[i]).fold(f64::NEG_INFINITY, f64::max);
        let index = candidates
            .iter()
            .copied()
            .filter(|&i| d[i] >= max - TAU_DIST)
            .min()
            .ok_or(Error::EmptyCoreset)?;
        Ok(QueryResult {
            index,
            distance: d[index],
            path: spt.path(self.points[index])?,
        })
    }
}

/// Exact furthest neighbor of `q` in `points` by scanning all of them.
pub fn exact_fn(poly: &SimplePolygon, points: &[Point], q: Point) -> Result<QueryResult> {
    if !poly.contains(q).is_inside() {
        return Err(Error::PointOutside(q));
    }
    if points.is_empty() {
        return Err(Error::TooFewPoints(0));
    }
    QueryEngine::new(poly, points)?.furthest(q, None)
}

/// Furthest neighbor of `q` among the coreset points only. The returned
/// index refers to the original point set.
pub fn approx_fn(poly: &SimplePolygon, coreset: &Coreset, q: Point) -> Result<QueryResult> {
    if coreset.is_empty() {
        return Err(Error::EmptyCoreset);
    }
    if !poly.contains(q).is_inside() {
        return Err(Error::PointOutside(q));
    }
    let pts: Vec<Point> = coreset.points.iter().map(|c| c.point).collect();
    let r = QueryEngine::new(poly, &pts)?.furthest(q, None)?;
    Ok(QueryResult {
        index: coreset.points[r.index].index,
        ..r
    })
}

/// Uniform point in the polygon: a triangle chosen by area, then a uniform
/// barycentric draw.
pub fn sample_point(poly: &SimplePolygon, rng: &mut impl Rng) -> Point {
    sample_points(poly, 1, rng)[0]
}

pub fn sample_points(poly: &SimplePolygon, count: usize, rng: &mut impl Rng) -> Vec<Point> {
    let tri = poly.triangulation();
    let areas: Vec<f64> = (0..tri.len()).map(|t| tri.triangle_area(t).abs()).collect();
    let pick = WeightedIndex::new(&areas).expect("polygon has positive area");
    (0..count)
        .map(|_| {
            let [a, b, c] = tri.corner_points(pick.sample(rng));
            let (mut u, mut v): (f64, f64) = (rng.gen(), rng.gen());
            if u + v > 1.0 {
                u = 1.0 - u;
                v = 1.0 - v;
            }
            a + (b - a) * u + (c - a) * v
        })
        .collect()
}
