//! JSON files: instances and coresets.

use std::fs;
use std::path::Path;

use geocoreset::coreset::{Coreset, CoresetPoint, Provenance, Tag};
use geocoreset::{Point, SimplePolygon};
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};

/// A polygon (counterclockwise) and a point set inside it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub polygon: Vec<[f64; 2]>,
    pub points: Vec<[f64; 2]>,
}

fn pair(p: Point) -> [f64; 2] {
    [p.x, p.y]
}

fn point(c: [f64; 2]) -> Point {
    Point::new(c[0], c[1])
}

impl Instance {
    pub fn new(name: impl Into<String>, seed: Option<u64>, poly: &SimplePolygon, points: Vec<Point>) -> Self {
        Instance {
            name: name.into(),
            seed,
            polygon: poly.vertices().iter().map(|&v| pair(v)).collect(),
            points: points.into_iter().map(pair).collect(),
        }
    }

    pub fn points(&self) -> Vec<Point> {
        self.points.iter().map(|&c| point(c)).collect()
    }

    /// Validates the polygon and checks every point lies in it.
    pub fn load_geometry(&self) -> Result<(SimplePolygon, Vec<Point>)> {
        let poly = SimplePolygon::new(self.polygon.iter().map(|&c| point(c)).collect())?;
        let points = self.points();
        if let Some(&p) = points.iter().find(|&&p| !poly.contains(p).is_inside()) {
            return Err(geocoreset::Error::PointOutside(p).into());
        }
        Ok((poly, points))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        write_text(path, &self.to_json()?)
    }
}

pub(crate) fn write_text(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    let mut text = text.to_owned();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    fs::write(path, text)?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TagEntry {
    pub round: u32,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoresetEntry {
    pub index: usize,
    pub point: [f64; 2],
    pub tags: Vec<TagEntry>,
}

/// On-disk form of a coreset.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoresetFile {
    pub eps: f64,
    pub k: usize,
    pub l: usize,
    pub p1_index: usize,
    pub p2_index: usize,
    pub diameter: f64,
    pub b_pieces: usize,
    pub rounds: u32,
    pub size: usize,
    pub size_bound: usize,
    pub points: Vec<CoresetEntry>,
}

impl From<&Coreset> for CoresetFile {
    fn from(c: &Coreset) -> Self {
        CoresetFile {
            eps: c.eps,
            k: c.k,
            l: c.l,
            p1_index: c.p1_index,
            p2_index: c.p2_index,
            diameter: c.diameter,
            b_pieces: c.b_pieces,
            rounds: c.rounds,
            size: c.len(),
            size_bound: c.size_bound(),
            points: c
                .points
                .iter()
                .map(|cp| CoresetEntry {
                    index: cp.index,
                    point: pair(cp.point),
                    tags: cp
                        .tags
                        .iter()
                        .map(|t| TagEntry {
                            round: t.round,
                            provenance: t.provenance.to_string(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl CoresetFile {
    pub fn to_coreset(&self) -> Result<Coreset> {
        let mut points = Vec::with_capacity(self.points.len());
        for e in &self.points {
            let mut tags = Vec::with_capacity(e.tags.len());
            for t in &e.tags {
                tags.push(Tag {
                    round: t.round,
                    provenance: parse_provenance(&t.provenance)?,
                });
            }
            points.push(CoresetPoint {
                index: e.index,
                point: point(e.point),
                tags,
            });
        }
        Ok(Coreset {
            eps: self.eps,
            k: self.k,
            l: self.l,
            p1_index: self.p1_index,
            p2_index: self.p2_index,
            diameter: self.diameter,
            b_pieces: self.b_pieces,
            rounds: self.rounds,
            points,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        write_text(path, &self.to_json()?)
    }
}

/// Inverse of the `Display` form, e.g. `f(2,5,1)` or `diameter`.
pub fn parse_provenance(s: &str) -> Result<Provenance> {
    let bad = || HarnessError::BadFile(format!("unknown provenance tag {s:?}"));
    if s == "diameter" {
        return Ok(Provenance::DiameterEndpoint);
    }
    let (name, rest) = s.split_once('(').ok_or_else(bad)?;
    let args: Vec<usize> = rest
        .strip_suffix(')')
        .ok_or_else(bad)?
        .split(',')
        .map(|a| a.trim().parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    let side = |v: usize| u8::try_from(v).map_err(|_| bad());
    Ok(match (name, args.as_slice()) {
        ("r", &[piece, s]) => Provenance::R { piece, side: side(s)? },
        ("x", &[piece, s]) => Provenance::X { piece, side: side(s)? },
        ("alpha", &[piece, h]) => Provenance::Alpha { piece, half: side(h)? },
        ("f", &[piece, cone, s]) => Provenance::F {
            piece,
            cone,
            side: side(s)?,
        },
        ("l", &[piece, cone, s]) => Provenance::L {
            piece,
            cone,
            side: side(s)?,
        },
        ("b", &[segment, piece, cone, s]) => Provenance::BCone {
            segment,
            piece,
            cone,
            side: side(s)?,
        },
        _ => return Err(bad()),
    })
}
