//! SVG rendering of an instance, its diameter structure and a coreset.
//!
//! Every concept gets its own `<g>` layer with a stable id: `polygon`,
//! `pockets`, `b-set`, `gamma`, `pieces`, `points`, `coreset`, `query`.

use std::collections::BTreeSet;
use std::fmt::Write;

use geocoreset::coreset::{Construction, Coreset, Provenance};
use geocoreset::query::QueryEngine;
use geocoreset::{Point, SimplePolygon};

use crate::error::Result;

pub struct RenderInput<'a> {
    pub poly: &'a SimplePolygon,
    pub points: &'a [Point],
    pub coreset: Option<&'a Coreset>,
    /// Used for the piece structure when there is no coreset.
    pub eps: f64,
    pub query: Option<Point>,
}

fn color(p: &Provenance) -> &'static str {
    match p {
        Provenance::DiameterEndpoint => "#000000",
        Provenance::R { .. } => "#d62728",
        Provenance::X { .. } => "#9467bd",
        Provenance::Alpha { .. } => "#ff7f0e",
        Provenance::F { .. } => "#1f77b4",
        Provenance::L { .. } => "#2ca02c",
        Provenance::BCone { .. } => "#17becf",
    }
}

struct Frame {
    min: Point,
    max: Point,
    unit: f64,
}

impl Frame {
    fn new(poly: &SimplePolygon) -> Self {
        let vs = poly.vertices();
        let mut min = vs[0];
        let mut max = vs[0];
        for v in vs {
            min = Point::new(min.x.min(v.x), min.y.min(v.y));
            max = Point::new(max.x.max(v.x), max.y.max(v.y));
        }
        let unit = (max.x - min.x).max(max.y - min.y) / 400.0;
        let pad = 10.0 * unit;
        Frame {
            min: min - Point::new(pad, pad),
            max: max + Point::new(pad, pad),
            unit,
        }
    }

    /// SVG y grows downwards.
    fn xy(&self, p: Point) -> String {
        format!("{:.3},{:.3}", p.x - self.min.x, self.max.y - p.y)
    }

    fn poly_points(&self, pts: &[Point]) -> String {
        pts.iter().map(|&p| self.xy(p)).collect::<Vec<_>>().join(" ")
    }

    fn circle(&self, out: &mut String, p: Point, r: f64, fill: &str) {
        let x = p.x - self.min.x;
        let y = self.max.y - p.y;
        let _ = writeln!(
            out,
            r#"    <circle cx="{x:.3}" cy="{y:.3}" r="{:.3}" fill="{fill}"/>"#,
            r * self.unit
        );
    }
}

pub fn render_svg(input: &RenderInput) -> Result<String> {
    let f = Frame::new(input.poly);
    let (w, h) = (f.max.x - f.min.x, f.max.y - f.min.y);
    let stroke = f.unit;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w:.3} {h:.3}" width="800" height="{:.0}">"#,
        800.0 * h / w
    );
    let _ = writeln!(s, r#"  <g id="polygon">"#);
    let _ = writeln!(
        s,
        r##"    <polygon points="{}" fill="#f4f4f4" stroke="#333333" stroke-width="{stroke:.3}"/>"##,
        f.poly_points(input.poly.vertices())
    );
    let _ = writeln!(s, "  </g>");

    let eps = input.coreset.map_or(input.eps, |c| c.eps);
    let structure = if input.points.len() >= 2 {
        Some(Construction::new(input.poly, input.points, eps)?)
    } else {
        None
    };

    let _ = writeln!(s, r#"  <g id="pockets">"#);
    if let Some(c) = &structure {
        if let Some(sides) = &c.sides {
            let pockets: BTreeSet<usize> = c.classes.iter().flat_map(|k| k.pockets.iter().copied()).collect();
            for i in pockets {
                let _ = writeln!(
                    s,
                    r##"    <polygon points="{}" fill="#c5b0d5" fill-opacity="0.6" stroke="none"/>"##,
                    f.poly_points(&sides.components[i].ring)
                );
            }
        }
    }
    let _ = writeln!(s, "  </g>");

    let _ = writeln!(s, r#"  <g id="b-set">"#);
    if let Some(b) = structure.as_ref().and_then(|c| c.b.as_ref()) {
        for seg in &b.segments {
            let _ = writeln!(
                s,
                r##"    <polyline points="{}" fill="none" stroke="#17becf" stroke-width="{:.3}" stroke-dasharray="{:.3}"/>"##,
                f.poly_points(&[seg.segment.a, seg.segment.b]),
                1.5 * stroke,
                4.0 * stroke
            );
        }
    }
    let _ = writeln!(s, "  </g>");

    let _ = writeln!(s, r#"  <g id="gamma">"#);
    if let Some(c) = &structure {
        let _ = writeln!(
            s,
            r##"    <polyline points="{}" fill="none" stroke="#000000" stroke-width="{:.3}"/>"##,
            f.poly_points(c.diameter.gamma.vertices()),
            3.0 * stroke
        );
    }
    let _ = writeln!(s, "  </g>");

    let _ = writeln!(s, r#"  <g id="pieces">"#);
    if let Some(c) = &structure {
        for piece in &c.pieces {
            f.circle(&mut s, piece.start_point(), 2.5, "#ffffff");
        }
        if let Some(last) = c.pieces.last() {
            f.circle(&mut s, last.end_point(), 2.5, "#ffffff");
        }
    }
    let _ = writeln!(s, "  </g>");

    let _ = writeln!(s, r#"  <g id="points">"#);
    for &p in input.points {
        f.circle(&mut s, p, 1.2, "#999999");
    }
    let _ = writeln!(s, "  </g>");

    let _ = writeln!(s, r#"  <g id="coreset">"#);
    if let Some(c) = input.coreset {
        for cp in &c.points {
            let fill = cp.tags.first().map_or("#000000", |t| color(&t.provenance));
            f.circle(&mut s, cp.point, 3.0, fill);
        }
    }
    let _ = writeln!(s, "  </g>");

    let _ = writeln!(s, r#"  <g id="query">"#);
    if let Some(q) = input.query {
        let engine = QueryEngine::new(input.poly, input.points)?;
        let exact = engine.furthest(q, None)?;
        let _ = writeln!(
            s,
            r##"    <polyline id="exact-path" points="{}" fill="none" stroke="#d62728" stroke-width="{:.3}"/>"##,
            f.poly_points(exact.path.vertices()),
            2.0 * stroke
        );
        if let Some(c) = input.coreset {
            let approx = engine.furthest(q, Some(&c.indices()))?;
            let _ = writeln!(
                s,
                r##"    <polyline id="approx-path" points="{}" fill="none" stroke="#1f77b4" stroke-width="{:.3}" stroke-dasharray="{:.3}"/>"##,
                f.poly_points(approx.path.vertices()),
                2.0 * stroke,
                3.0 * stroke
            );
        }
        f.circle(&mut s, q, 3.5, "#ff00ff");
    }
    let _ = writeln!(s, "  </g>");
    s.push_str("</svg>\n");
    Ok(s)
}
