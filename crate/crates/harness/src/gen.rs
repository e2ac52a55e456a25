//! Random and structured instance generators. Every polygon fits in
//! `[0, 1000]²` and is validated before it is returned.

use std::f64::consts::TAU;

use geocoreset::fixtures;
use geocoreset::kernel::segments_cross_properly;
use geocoreset::query::sample_points;
use geocoreset::{Point, SimplePolygon};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};
use crate::instance::Instance;

const RETRIES: u64 = 64;
const EXTENT: f64 = 1000.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum PolygonKind {
    Convex,
    #[value(name = "random2opt")]
    #[serde(rename = "random2opt")]
    Random2Opt,
    Comb,
    Spiral,
}

impl PolygonKind {
    pub const ALL: [PolygonKind; 4] = [
        PolygonKind::Convex,
        PolygonKind::Random2Opt,
        PolygonKind::Comb,
        PolygonKind::Spiral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolygonKind::Convex => "convex",
            PolygonKind::Random2Opt => "random2opt",
            PolygonKind::Comb => "comb",
            PolygonKind::Spiral => "spiral",
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Polygon of the given kind with about `m` vertices.
///
/// `convex` is the regular `m`-gon; `comb` has `max(1, (m-2)/4)` teeth and
/// so `4t+2` vertices; `spiral` is a winding corridor with `m` rounded up to
/// an even count.
pub fn gen_polygon(kind: PolygonKind, m: usize, seed: u64) -> Result<SimplePolygon> {
    if m < 3 {
        return Err(HarnessError::BadParameter(format!(
            "polygon needs at least 3 vertices, got {m}"
        )));
    }
    let poly = match kind {
        PolygonKind::Convex => Ok(fixtures::regular_polygon(m, EXTENT / 2.0)),
        PolygonKind::Comb => Ok(comb(((m.saturating_sub(2)) / 4).max(1))),
        PolygonKind::Spiral => spiral(m.max(8)),
        PolygonKind::Random2Opt => random_2opt(m, seed),
    }?;
    Ok(poly)
}

fn comb(teeth: usize) -> SimplePolygon {
    let h = EXTENT / 11.0;
    let base = fixtures::comb(teeth, EXTENT, h);
    let shifted = base.vertices().iter().map(|&v| v + Point::new(0.0, 10.0 * h)).collect();
    SimplePolygon::new(shifted).expect("translated comb stays simple")
}

/// Corridor between two Archimedean spirals. The winding count grows with
/// `m` so each turn gets at least a dozen vertices per wall.
fn spiral(m: usize) -> Result<SimplePolygon> {
    let per_wall = m.div_ceil(2);
    let turns = (per_wall as f64 / 16.0).clamp(0.75, 3.0);
    let total = turns * TAU;
    // outermost radius 60 + width + pitch·total stays at 480
    let pitch = 420.0 / (total + 0.55 * TAU);
    let width = 0.55 * pitch * TAU;
    let centre = Point::new(EXTENT / 2.0, EXTENT / 2.0);
    let outer_r = |t: f64| 60.0 + width + pitch * t;
    let mut pts = Vec::with_capacity(2 * per_wall);
    for i in 0..per_wall {
        let t = total * i as f64 / (per_wall - 1) as f64;
        pts.push(centre + Point::from_angle(t) * outer_r(t));
    }
    for i in (0..per_wall).rev() {
        let t = total * i as f64 / (per_wall - 1) as f64;
        pts.push(centre + Point::from_angle(t) * (outer_r(t) - width));
    }
    SimplePolygon::new(pts).map_err(|e| HarnessError::GenerationFailed(format!("spiral: {e}")))
}

/// Random points untangled by reversing the chain between crossing edges
/// until no two edges cross.
fn random_2opt(m: usize, seed: u64) -> Result<SimplePolygon> {
    for attempt in 0..RETRIES {
        let mut r = rng(seed.wrapping_mul(RETRIES).wrapping_add(attempt));
        let mut pts: Vec<Point> = (0..m)
            .map(|_| Point::new(r.gen_range(0.0..EXTENT), r.gen_range(0.0..EXTENT)))
            .collect();
        pts.shuffle(&mut r);
        untangle(&mut pts);
        if let Ok(poly) = SimplePolygon::new(pts) {
            return Ok(poly);
        }
    }
    Err(HarnessError::GenerationFailed(format!(
        "random2opt with m = {m}: retry budget exhausted"
    )))
}

fn untangle(pts: &mut [Point]) {
    let m = pts.len();
    loop {
        let mut changed = false;
        for i in 0..m {
            for j in i + 2..m {
                if i == 0 && j == m - 1 {
                    continue;
                }
                let (a, b) = (pts[i], pts[i + 1]);
                let (c, d) = (pts[j], pts[(j + 1) % m]);
                if segments_cross_properly(a, b, c, d) {
                    pts[i + 1..=j].reverse();
                    changed = true;
                }
            }
        }
        if !changed {
            return;
        }
    }
}

/// `n` uniform points in the polygon.
pub fn gen_points(poly: &SimplePolygon, n: usize, seed: u64) -> Vec<Point> {
    sample_points(poly, n, &mut rng(seed))
}

/// Polygon plus points; the points use a seed derived from `seed` so
/// polygon and points vary independently.
pub fn gen_instance(kind: PolygonKind, m: usize, n: usize, seed: u64) -> Result<Instance> {
    let poly = gen_polygon(kind, m, seed)?;
    let points = gen_points(&poly, n, seed ^ 0x9e37_79b9_7f4a_7c15);
    Ok(Instance::new(
        format!("{}-m{}-n{}-s{}", kind.name(), poly.len(), n, seed),
        Some(seed),
        &poly,
        points,
    ))
}
