//! Command-line interface.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use geocoreset::coreset::{build_coreset, build_outlier_coreset};
use geocoreset::query::{sample_points, verify_instance, QueryEngine};
use geocoreset::Point;
use serde::Serialize;

use crate::gen::{gen_instance, rng, PolygonKind};
use crate::instance::{write_text, CoresetFile, Instance};
use crate::render::{render_svg, RenderInput};
use crate::report::{query_rows, run_bench, to_csv, VerifySummary};

/// Exit code of `verify` when a check fails.
pub const EXIT_VERIFY_FAILED: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "geocoreset",
    version,
    about = "Coresets for geodesic furthest-neighbor queries"
)]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, env = "GEOCORESET_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Evaluate queries on all cores.
    #[arg(long, global = true)]
    pub parallel: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate an instance file.
    Gen(GenArgs),
    /// Build a coreset for an instance.
    Build(BuildArgs),
    /// Answer furthest-neighbor queries exactly and through a coreset.
    Query(QueryArgs),
    /// Check the approximation guarantee and the structural checks on random queries.
    Verify(VerifyArgs),
    /// Time coreset construction over kinds, sizes and ε values.
    Bench(BenchArgs),
    /// Draw an instance, its diameter structure and a coreset as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: PolygonKind,
    /// Number of polygon vertices (approximate for comb and spiral).
    #[arg(long, default_value_t = 40)]
    pub m: usize,
    /// Number of points.
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    #[arg(long)]
    pub name: Option<String>,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    pub instance: PathBuf,
    #[arg(long, default_value_t = 0.5)]
    pub eps: f64,
    /// Number of outliers to tolerate.
    #[arg(long, default_value_t = 0)]
    pub outliers: usize,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct QueryArgs {
    pub instance: PathBuf,
    /// Coreset file; built with `--eps` when absent.
    #[arg(long)]
    pub coreset: Option<PathBuf>,
    #[arg(long, default_value_t = 0.5)]
    pub eps: f64,
    /// Query point as `x,y`; repeatable.
    #[arg(long, value_parser = parse_point)]
    pub at: Vec<Point>,
    /// Number of uniform random queries when no `--at` is given.
    #[arg(long, default_value_t = 10)]
    pub queries: usize,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub instance: PathBuf,
    #[arg(long, default_value_t = 0.5)]
    pub eps: f64,
    #[arg(long, default_value_t = 200)]
    pub queries: usize,
    /// Writes `<out>.csv` and `<out>.json`.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = PolygonKind::ALL)]
    pub kinds: Vec<PolygonKind>,
    /// `m:n` pairs.
    #[arg(long, value_delimiter = ',', value_parser = parse_size, default_values = ["40:200", "200:2000"])]
    pub sizes: Vec<(usize, usize)>,
    #[arg(long, value_delimiter = ',', default_values_t = [0.4, 0.2, 0.1])]
    pub eps: Vec<f64>,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    pub instance: PathBuf,
    pub coreset: Option<PathBuf>,
    #[arg(long, default_value_t = 0.5)]
    pub eps: f64,
    /// Draw exact and coreset paths from this query, given as `x,y`.
    #[arg(long, value_parser = parse_point)]
    pub query: Option<Point>,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

fn parse_point(s: &str) -> Result<Point, String> {
    let (x, y) = s.split_once(',').ok_or("expected x,y")?;
    let x: f64 = x.trim().parse().map_err(|e| format!("{e}"))?;
    let y: f64 = y.trim().parse().map_err(|e| format!("{e}"))?;
    Ok(Point::new(x, y))
}

fn parse_size(s: &str) -> Result<(usize, usize), String> {
    let (m, n) = s.split_once(':').ok_or("expected m:n")?;
    Ok((
        m.trim().parse().map_err(|e| format!("{e}"))?,
        n.trim().parse().map_err(|e| format!("{e}"))?,
    ))
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => write_text(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

fn with_suffix(path: &Path, ext: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn load(path: &Path) -> anyhow::Result<Instance> {
    Instance::load(path).with_context(|| format!("reading {}", path.display()))
}

#[derive(Serialize)]
struct QueryAnswer {
    qx: f64,
    qy: f64,
    exact_index: usize,
    exact_d: f64,
    approx_index: usize,
    approx_d: f64,
    ratio: f64,
}

pub fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let seed = cli.seed;
    match cli.command {
        Command::Gen(a) => {
            let mut inst = gen_instance(a.kind, a.m, a.n, seed)?;
            if let Some(name) = a.name {
                inst.name = name;
            }
            emit(a.out.as_deref(), &inst.to_json()?)?;
        }
        Command::Build(a) => {
            let (poly, points) = load(&a.instance)?.load_geometry()?;
            let t = Instant::now();
            let c = if a.outliers == 0 {
                build_coreset(&poly, &points, a.eps)?
            } else {
                build_outlier_coreset(&poly, &points, a.eps, a.outliers)?
            };
            eprintln!(
                "built coreset of {} / {} points (bound {}) in {:.1} ms",
                c.len(),
                points.len(),
                c.size_bound(),
                t.elapsed().as_secs_f64() * 1e3
            );
            emit(a.out.as_deref(), &CoresetFile::from(&c).to_json()?)?;
        }
        Command::Query(a) => {
            let (poly, points) = load(&a.instance)?.load_geometry()?;
            let coreset = match &a.coreset {
                Some(p) => CoresetFile::load(p)
                    .with_context(|| format!("reading {}", p.display()))?
                    .to_coreset()?,
                None => build_coreset(&poly, &points, a.eps)?,
            };
            if let Some(cp) = coreset.points.iter().find(|cp| points.get(cp.index) != Some(&cp.point)) {
                bail!("coreset point {} does not match the instance", cp.index);
            }
            let queries = if a.at.is_empty() {
                sample_points(&poly, a.queries, &mut rng(seed))
            } else {
                a.at.clone()
            };
            let engine = QueryEngine::new(&poly, &points)?;
            let subset = coreset.indices();
            let mut rows = Vec::with_capacity(queries.len());
            for q in queries {
                if !poly.contains(q).is_inside() {
                    bail!("query {q} lies outside the polygon");
                }
                let e = engine.furthest(q, None)?;
                let ap = engine.furthest(q, Some(&subset))?;
                rows.push(QueryAnswer {
                    qx: q.x,
                    qy: q.y,
                    exact_index: e.index,
                    exact_d: e.distance,
                    approx_index: ap.index,
                    approx_d: ap.distance,
                    ratio: if e.distance > 0.0 {
                        ap.distance / e.distance
                    } else {
                        1.0
                    },
                });
            }
            emit(a.out.as_deref(), &to_csv(&rows)?)?;
        }
        Command::Verify(a) => {
            let inst = load(&a.instance)?;
            let (poly, points) = inst.load_geometry()?;
            let queries = sample_points(&poly, a.queries, &mut rng(seed));
            let report = verify_instance(&poly, &points, a.eps, &queries, cli.parallel)?;
            let summary = VerifySummary::new(&inst.name, points.len(), poly.len(), seed, &report);
            let json = serde_json::to_string_pretty(&summary)?;
            if let Some(out) = &a.out {
                write_text(&with_suffix(out, "csv"), &to_csv(&query_rows(&report))?)?;
                write_text(&with_suffix(out, "json"), &json)?;
            }
            println!("{json}");
            if !summary.passed() {
                eprintln!("verification failed");
                return Ok(ExitCode::from(EXIT_VERIFY_FAILED));
            }
        }
        Command::Bench(a) => {
            let rows = run_bench(&a.kinds, &a.sizes, &a.eps, seed)?;
            emit(a.out.as_deref(), &to_csv(&rows)?)?;
        }
        Command::Render(a) => {
            let (poly, points) = load(&a.instance)?.load_geometry()?;
            let coreset = match &a.coreset {
                Some(p) => Some(
                    CoresetFile::load(p)
                        .with_context(|| format!("reading {}", p.display()))?
                        .to_coreset()?,
                ),
                None => None,
            };
            let svg = render_svg(&RenderInput {
                poly: &poly,
                points: &points,
                coreset: coreset.as_ref(),
                eps: a.eps,
                query: a.query,
            })?;
            emit(a.out.as_deref(), &svg)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
