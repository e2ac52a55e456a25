//! CSV and JSON reports for verification runs, queries and benchmarks.

use std::time::Instant;

use geocoreset::coreset::build_coreset;
use geocoreset::query::{Branch, QueryRecord, VerificationReport};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gen::{gen_instance, PolygonKind};

fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::Direct => "direct",
        Branch::Backward => "backward",
        Branch::Trivial => "trivial",
        Branch::Failed => "failed",
    }
}

/// One row of the per-query verification CSV.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QueryRow {
    pub qx: f64,
    pub qy: f64,
    pub exact_index: usize,
    pub exact_d: f64,
    pub approx_index: usize,
    pub approx_d: f64,
    pub ratio: f64,
    pub walkback_ok: bool,
    pub branch: String,
    pub lower_bound_ok: bool,
}

impl From<&QueryRecord> for QueryRow {
    fn from(r: &QueryRecord) -> Self {
        QueryRow {
            qx: r.query.x,
            qy: r.query.y,
            exact_index: r.exact_index,
            exact_d: r.exact_distance,
            approx_index: r.approx_index,
            approx_d: r.approx_distance,
            ratio: r.ratio,
            walkback_ok: r.walkback_ok,
            branch: branch_name(r.branch).to_owned(),
            lower_bound_ok: r.lower_bound_ok,
        }
    }
}

pub fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn from_csv<T: for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<T>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    Ok(r.deserialize().collect::<std::result::Result<_, _>>()?)
}

pub fn query_rows(report: &VerificationReport) -> Vec<QueryRow> {
    report.records.iter().map(QueryRow::from).collect()
}

/// JSON summary of a verification run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub instance: String,
    pub eps: f64,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub coreset_size: usize,
    pub size_bound: usize,
    pub queries: usize,
    pub min_ratio: Option<f64>,
    pub violations: usize,
    pub walkback_pass: usize,
    pub walkback_fail: usize,
    pub branch_direct: usize,
    pub branch_backward: usize,
    pub branch_trivial: usize,
    pub dichotomy_fail: usize,
    pub lower_bound_fail: usize,
}

impl VerifySummary {
    pub fn new(instance: &str, n: usize, m: usize, seed: u64, report: &VerificationReport) -> Self {
        let t = &report.tally;
        VerifySummary {
            instance: instance.to_owned(),
            eps: report.eps,
            n,
            m,
            seed,
            coreset_size: report.coreset.len(),
            size_bound: report.coreset.size_bound(),
            queries: report.records.len(),
            min_ratio: report.min_ratio,
            violations: report.violations.len(),
            walkback_pass: t.walkback_pass,
            walkback_fail: t.walkback_fail,
            branch_direct: t.direct,
            branch_backward: t.backward,
            branch_trivial: t.trivial,
            dichotomy_fail: t.dichotomy_fail,
            lower_bound_fail: t.lower_bound_fail,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0 && self.walkback_fail == 0 && self.dichotomy_fail == 0 && self.lower_bound_fail == 0
    }
}

/// One row of the benchmark CSV. `build_ms` is wall-clock time and the only
/// column that varies between identical runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub kind: String,
    pub m: usize,
    pub n: usize,
    pub eps: f64,
    pub seed: u64,
    pub coreset_size: usize,
    pub size_bound: usize,
    pub diameter: f64,
    pub build_ms: f64,
}

/// Builds one coreset per (kind, size, ε) combination.
pub fn run_bench(kinds: &[PolygonKind], sizes: &[(usize, usize)], eps: &[f64], seed: u64) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &kind in kinds {
        for &(m, n) in sizes {
            let inst = gen_instance(kind, m, n, seed)?;
            let (poly, points) = inst.load_geometry()?;
            for &e in eps {
                let t = Instant::now();
                let c = build_coreset(&poly, &points, e)?;
                let build_ms = t.elapsed().as_secs_f64() * 1e3;
                log::info!("{} eps={e}: |C|={} in {build_ms:.1} ms", inst.name, c.len());
                rows.push(BenchRow {
                    kind: kind.name().to_owned(),
                    m: poly.len(),
                    n,
                    eps: c.eps,
                    seed,
                    coreset_size: c.len(),
                    size_bound: c.size_bound(),
                    diameter: c.diameter,
                    build_ms,
                });
            }
        }
    }
    Ok(rows)
}
