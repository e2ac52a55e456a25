use rayon::prelude::*;

use crate::coreset::{Construction, Coreset};
use crate::diameter::Diameter;
use crate::error::Result;
use crate::geodesic::{ext_backward, GeodesicPath};
use crate::kernel::{line_segment_params, Point, Segment, SimplePolygon};
use crate::tolerance::TAU_DIST;

use super::engine::{QueryEngine, QueryResult};

/// Walk-back samples taken on each backward extension.
const WALK_SAMPLES: usize = 4;

/// How a query satisfied the dichotomy check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// The path to the furthest point meets `Γ` or a `B` segment.
    Direct,
    /// The backward extension of the path meets `Γ` at a point with the
    /// same furthest distance.
    Backward,
    /// All points coincide; nothing to check.
    Trivial,
    Failed,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QueryRecord {
    pub query: Point,
    pub exact_index: usize,
    pub exact_distance: f64,
    pub approx_index: usize,
    pub approx_distance: f64,
    pub ratio: f64,
    pub walkback_ok: bool,
    pub branch: Branch,
    /// Exact distance is at least half the diameter.
    pub lower_bound_ok: bool,
}

/// Outcome of the structural checks for one query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaCheck {
    pub walkback_ok: bool,
    pub branch: Branch,
    /// Exact distance is at least half the diameter.
    pub lower_bound_ok: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LemmaTally {
    pub walkback_pass: usize,
    pub walkback_fail: usize,
    pub direct: usize,
    pub backward: usize,
    pub trivial: usize,
    pub dichotomy_fail: usize,
    pub lower_bound_fail: usize,
}

impl LemmaTally {
    fn add(&mut self, c: LemmaCheck) {
        let LemmaCheck {
            walkback_ok,
            branch,
            lower_bound_ok,
        } = c;
        if walkback_ok {
            self.walkback_pass += 1;
        } else {
            self.walkback_fail += 1;
        }
        match branch {
            Branch::Direct => self.direct += 1,
            Branch::Backward => self.backward += 1,
            Branch::Trivial => self.trivial += 1,
            Branch::Failed => self.dichotomy_fail += 1,
        }
        if !lower_bound_ok {
            self.lower_bound_fail += 1;
        }
    }

    pub fn all_pass(&self) -> bool {
        self.walkback_fail == 0 && self.dichotomy_fail == 0 && self.lower_bound_fail == 0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub eps: f64,
    pub coreset: Coreset,
    pub records: Vec<QueryRecord>,
    /// `None` for an empty query list.
    pub min_ratio: Option<f64>,
    /// Indices into `records` with ratio below `1 - ε - τ`.
    pub violations: Vec<usize>,
    pub tally: LemmaTally,
}

/// What the per-query lemma checks need besides the point set.
struct LemmaContext<'a> {
    engine: QueryEngine<'a>,
    diameter: Diameter,
    obstacles: Vec<Segment>,
}

impl<'a> LemmaContext<'a> {
    fn new(cons: &Construction<'a>) -> Result<Self> {
        let mut obstacles: Vec<Segment> = cons.diameter.gamma.edges().collect();
        if let Some(b) = &cons.b {
            obstacles.extend(b.segments.iter().map(|s| s.segment));
        }
        Ok(LemmaContext {
            engine: QueryEngine::new(cons.poly, cons.points)?,
            diameter: cons.diameter.clone(),
            obstacles,
        })
    }

    fn gamma(&self) -> &GeodesicPath {
        &self.diameter.gamma
    }

    /// Walk-back, dichotomy and lower-bound checks for one query.
    fn check(&self, exact: &QueryResult) -> Result<LemmaCheck> {
        let lower_bound_ok = exact.distance >= self.diameter.length / 2.0 - TAU_DIST;
        if exact.path.is_degenerate() || self.gamma().is_degenerate() {
            return Ok(LemmaCheck {
                walkback_ok: true,
                branch: Branch::Trivial,
                lower_bound_ok,
            });
        }
        let poly = self.engine.polygon();
        let back = ext_backward(poly, &exact.path, None)?;
        let same_max = |z: Point| -> Result<bool> {
            let d = self.engine.distances(z)?;
            let max = d.iter().copied().fold(0.0, f64::max);
            Ok((d[exact.index] - max).abs() <= TAU_DIST)
        };
        let mut walkback_ok = true;
        for i in 0..WALK_SAMPLES {
            walkback_ok &= same_max(back.at(i as f64 / WALK_SAMPLES as f64))?;
        }
        let branch = if self.obstacles.iter().any(|s| exact.path.meets_segment(s, TAU_DIST)) {
            Branch::Direct
        } else {
            let mut hit = false;
            if back.length() > TAU_DIST {
                'edges: for e in self.gamma().edges() {
                    for t in line_segment_params(back.b, back.a - back.b, e.a, e.b) {
                        if (-1e-12..=1.0 + 1e-12).contains(&t) {
                            let z = back.b + (back.a - back.b) * t.clamp(0.0, 1.0);
                            if same_max(z)? {
                                hit = true;
                                break 'edges;
                            }
                        }
                    }
                }
            }
            if hit {
                Branch::Backward
            } else {
                Branch::Failed
            }
        };
        Ok(LemmaCheck {
            walkback_ok,
            branch,
            lower_bound_ok,
        })
    }
}

/// Runs the walk-back, dichotomy and diameter lower-bound checks on `queries`.
pub fn lemma_checks(
    poly: &SimplePolygon,
    points: &[Point],
    queries: &[Point],
) -> Result<(Vec<LemmaCheck>, LemmaTally)> {
    let cons = Construction::new(poly, points, 1.0)?;
    let ctx = LemmaContext::new(&cons)?;
    let mut tally = LemmaTally::default();
    let mut out = Vec::with_capacity(queries.len());
    for &q in queries {
        let exact = ctx.engine.furthest(q, None)?;
        let r = ctx.check(&exact)?;
        tally.add(r);
        out.push(r);
    }
    Ok((out, tally))
}

/// Builds the coreset once and compares coreset answers against exact ones
/// on every query, running the lemma checks alongside.
pub fn verify_instance(
    poly: &SimplePolygon,
    points: &[Point],
    eps: f64,
    queries: &[Point],
    parallel: bool,
) -> Result<VerificationReport> {
    let mut cons = Construction::new(poly, points, eps)?;
    let coreset = cons.select()?;
    let ctx = LemmaContext::new(&cons)?;
    let subset = coreset.indices();
    let one = |&q: &Point| -> Result<QueryRecord> {
        let exact = ctx.engine.furthest(q, None)?;
        let approx = ctx.engine.furthest(q, Some(&subset))?;
        let ratio = if exact.distance <= TAU_DIST {
            1.0
        } else {
            approx.distance / exact.distance
        };
        let LemmaCheck {
            walkback_ok,
            branch,
            lower_bound_ok,
        } = ctx.check(&exact)?;
        Ok(QueryRecord {
            query: q,
            exact_index: exact.index,
            exact_distance: exact.distance,
            approx_index: approx.index,
            approx_distance: approx.distance,
            ratio,
            walkback_ok,
            branch,
            lower_bound_ok,
        })
    };
    let records: Vec<QueryRecord> = if parallel {
        queries.par_iter().map(one).collect::<Result<_>>()?
    } else {
        queries.iter().map(one).collect::<Result<_>>()?
    };
    let mut tally = LemmaTally::default();
    for r in &records {
        tally.add(LemmaCheck {
            walkback_ok: r.walkback_ok,
            branch: r.branch,
            lower_bound_ok: r.lower_bound_ok,
        });
    }
    let min_ratio = records.iter().map(|r| r.ratio).reduce(f64::min);
    let violations = records
        .iter()
        .enumerate()
        .filter(|(_, r)| r.ratio < 1.0 - cons.eps - TAU_DIST)
        .map(|(i, _)| i)
        .collect();
    Ok(VerificationReport {
        eps: cons.eps,
        coreset,
        records,
        min_ratio,
        violations,
        tally,
    })
}
