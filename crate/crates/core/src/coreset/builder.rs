use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use crate::diameter::{
    build_b, checked_eps, compute_diameter, extend_gamma, locate_all, piece_count, pocket_and_edge_classify,
    side_split, split_by_chord, split_pieces, BoundarySet, Diameter, GammaStar, Piece, PieceClasses, Side,
    SideDecomposition, SideOf,
};
use crate::error::{Error, Result};
use crate::geodesic::ShortestPathTree;
use crate::kernel::{ring_contains, ring_distance, DirectionArc, Point, Segment, SimplePolygon};
use crate::tolerance::{TAU_ANG, TAU_DIST};

use super::cone_max::cone_max;
use super::cones::{canonical_cones, CanonicalCones};
use super::reach::{reach_from_endpoints, ReachInterval, REACH_SAMPLES};

/// Why a point was selected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    DiameterEndpoint,
    /// Furthest point of a side from `γ_i`.
    R {
        piece: usize,
        side: u8,
    },
    /// Furthest pocket point of a side from `γ_i`.
    X {
        piece: usize,
        side: u8,
    },
    /// Furthest point from `γ_i` in one half of the split along the
    /// intermediate edge.
    Alpha {
        piece: usize,
        half: u8,
    },
    /// Cone selection from the first edge of a piece.
    F {
        piece: usize,
        cone: usize,
        side: u8,
    },
    /// Cone selection from the last edge of a piece.
    L {
        piece: usize,
        cone: usize,
        side: u8,
    },
    /// Cone selection from a piece of a `B` segment.
    BCone {
        segment: usize,
        piece: usize,
        cone: usize,
        side: u8,
    },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Provenance::DiameterEndpoint => write!(f, "diameter"),
            Provenance::R { piece, side } => write!(f, "r({piece},{side})"),
            Provenance::X { piece, side } => write!(f, "x({piece},{side})"),
            Provenance::Alpha { piece, half } => write!(f, "alpha({piece},{half})"),
            Provenance::F { piece, cone, side } => write!(f, "f({piece},{cone},{side})"),
            Provenance::L { piece, cone, side } => write!(f, "l({piece},{cone},{side})"),
            Provenance::BCone {
                segment,
                piece,
                cone,
                side,
            } => write!(f, "b({segment},{piece},{cone},{side})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tag {
    /// Round of the outlier construction; always 0 otherwise.
    pub round: u32,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoresetPoint {
    pub index: usize,
    pub point: Point,
    pub tags: Vec<Tag>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Coreset {
    pub eps: f64,
    pub k: usize,
    pub l: usize,
    pub p1_index: usize,
    pub p2_index: usize,
    pub diameter: f64,
    /// Total number of pieces cut from `B` segments, over all rounds.
    pub b_pieces: usize,
    pub rounds: u32,
    /// Sorted by index.
    pub points: Vec<CoresetPoint>,
}

impl Coreset {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.points.iter().map(|c| c.index).collect()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.points.binary_search_by_key(&index, |c| c.index).is_ok()
    }

    /// `rounds·(ℓ(4k+6) + 2) + 2k·Σ_B ⌈6‖s‖/(ε‖Γ‖)⌉`.
    pub fn size_bound(&self) -> usize {
        self.rounds as usize * (self.l * (4 * self.k + 6) + 2) + self.b_pieces * 2 * self.k
    }
}

/// Distances and first directions from one source to every input point.
struct SourceData {
    dist: Vec<f64>,
    dir: Vec<Option<f64>>,
}

/// Everything the selections are computed from.
pub struct Construction<'a> {
    pub poly: &'a SimplePolygon,
    pub points: &'a [Point],
    pub eps: f64,
    pub cones: CanonicalCones,
    pub diameter: Diameter,
    /// `None` when all points coincide.
    pub star: Option<GammaStar>,
    pub sides: Option<SideDecomposition>,
    pub pieces: Vec<Piece>,
    pub classes: Vec<PieceClasses>,
    pub b: Option<BoundarySet>,
    pub point_sides: Vec<SideOf>,
    tris: Vec<usize>,
    cache: HashMap<(u64, u64), Rc<SourceData>>,
}

impl<'a> Construction<'a> {
    pub fn new(poly: &'a SimplePolygon, points: &'a [Point], eps: f64) -> Result<Self> {
        let eps = checked_eps(eps)?;
        if points.len() < 2 {
            return Err(Error::TooFewPoints(points.len()));
        }
        let tris = locate_all(poly, points)?;
        let diameter = compute_diameter(poly, points)?;
        let cones = canonical_cones(eps)?;
        let mut c = Construction {
            poly,
            points,
            eps,
            cones,
            diameter,
            star: None,
            sides: None,
            pieces: Vec::new(),
            classes: Vec::new(),
            b: None,
            point_sides: Vec::new(),
            tris,
            cache: HashMap::new(),
        };
        if c.diameter.gamma.is_degenerate() {
            return Ok(c);
        }
        let star = extend_gamma(poly, &c.diameter.gamma)?;
        let sides = side_split(poly, &star);
        let mut pieces = split_pieces(&c.diameter.gamma, eps)?;
        let classes: Vec<PieceClasses> = pieces.iter().map(|pc| pocket_and_edge_classify(&sides, pc)).collect();
        for (pc, cls) in pieces.iter_mut().zip(&classes) {
            for (e, &k) in pc.edges.iter_mut().zip(&cls.edge_classes) {
                e.class = k;
            }
        }
        c.point_sides = points.iter().map(|&p| sides.classify(p)).collect();
        c.b = Some(build_b(poly, c.diameter.length, &star));
        c.star = Some(star);
        c.sides = Some(sides);
        c.pieces = pieces;
        c.classes = classes;
        Ok(c)
    }

    fn source(&mut self, s: Point) -> Result<Rc<SourceData>> {
        let key = (s.x.to_bits(), s.y.to_bits());
        if let Some(d) = self.cache.get(&key) {
            return Ok(d.clone());
        }
        let spt = ShortestPathTree::build(self.poly, s)?;
        let mut dist = Vec::with_capacity(self.points.len());
        let mut dir = Vec::with_capacity(self.points.len());
        for (&p, &t) in self.points.iter().zip(&self.tris) {
            let hit = spt.query_located(p, t);
            dist.push(hit.dist);
            dir.push(hit.first_dir);
        }
        let data = Rc::new(SourceData { dist, dir });
        self.cache.insert(key, data.clone());
        Ok(data)
    }

    fn members(&self, side: Side) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&p| self.point_sides[p].side == side)
            .collect()
    }

    /// Reach intervals of `members` from `edge`, weighted by `weights`.
    fn reach_items(
        &mut self,
        edge: Segment,
        blocked: &[f64],
        members: &[usize],
        weights: &[f64],
    ) -> Result<Vec<ReachInterval>> {
        let (da, db) = (self.source(edge.a)?, self.source(edge.b)?);
        let mut items = Vec::new();
        let mut samples: Option<Vec<Rc<SourceData>>> = None;
        for &p in members {
            let q = self.points[p];
            if edge.distance_to_point(q) <= TAU_DIST {
                continue;
            }
            let (Some(a), Some(b)) = (da.dir[p], db.dir[p]) else {
                continue;
            };
            let arc = match reach_from_endpoints(edge, q, a, b, blocked) {
                Some(arc) => arc,
                None => {
                    if samples.is_none() {
                        let mut v = Vec::with_capacity(REACH_SAMPLES);
                        for i in 0..REACH_SAMPLES {
                            v.push(self.source(edge.at((i as f64 + 0.5) / REACH_SAMPLES as f64))?);
                        }
                        samples = Some(v);
                    }
                    let mut dirs = vec![a, b];
                    dirs.extend(samples.as_ref().unwrap().iter().filter_map(|s| s.dir[p]));
                    DirectionArc::hull_of(&dirs).expect("nonempty")
                }
            };
            items.push(ReachInterval {
                point: p,
                arc: arc.widened(TAU_ANG),
                weight: weights[p],
            });
        }
        Ok(items)
    }

    fn furthest(weights: &[f64], candidates: impl Iterator<Item = usize>) -> Option<usize> {
        let mut best: Option<usize> = None;
        for p in candidates {
            if best.is_none_or(|b| weights[p] > weights[b]) {
                best = Some(p);
            }
        }
        best
    }

    fn piece_selection(&mut self, i: usize, out: &mut Vec<(usize, Provenance)>) -> Result<()> {
        let piece = self.pieces[i].clone();
        let cls = self.classes[i].clone();
        let g = self.source(piece.start_point())?;
        let weights = &g.dist;
        for side in [Side::One, Side::Two] {
            let s = side.number();
            let members = self.members(side);
            if let Some(r) = Self::furthest(weights, members.iter().copied()) {
                out.push((r, Provenance::R { piece: i, side: s }));
            }
            let pocket = members.iter().copied().filter(|&p| cls.in_pocket(self.point_sides[p]));
            if let Some(x) = Self::furthest(weights, pocket) {
                out.push((x, Provenance::X { piece: i, side: s }));
            }
        }
        if let Some(ei) = cls.intermediate {
            let e = piece.edges[ei].segment;
            if let Some((e1, e2)) = split_by_chord(self.poly, e.a, e.b) {
                let in_first: Vec<bool> = self
                    .points
                    .iter()
                    .map(|&q| {
                        ring_contains(&e1, q)
                            || (!ring_contains(&e2, q) && ring_distance(&e1, q) <= ring_distance(&e2, q))
                    })
                    .collect();
                for (half, want) in [(1u8, true), (2u8, false)] {
                    let set = (0..self.points.len()).filter(|&p| in_first[p] == want);
                    if let Some(a) = Self::furthest(weights, set) {
                        out.push((a, Provenance::Alpha { piece: i, half }));
                    }
                }
            }
        }
        let n_edges = piece.edges.len();
        let first = piece.edges[0].segment;
        let mut ends = vec![(true, first, piece.edges.get(1).map(|e| e.segment.direction()))];
        if n_edges > 1 {
            let last = piece.edges[n_edges - 1].segment;
            ends.push((
                false,
                last,
                Some(piece.edges[n_edges - 2].segment.reversed().direction()),
            ));
        }
        for (is_first, edge, blocked) in ends {
            if edge.length() <= TAU_DIST {
                continue;
            }
            let blocked: Vec<f64> = blocked.into_iter().collect();
            for side in [Side::One, Side::Two] {
                let members = self.members(side);
                let items = self.reach_items(edge, &blocked, &members, weights)?;
                for (cone, best) in cone_max(&self.cones, &items).into_iter().enumerate() {
                    if let Some((p, _)) = best {
                        let side = side.number();
                        out.push((
                            p,
                            if is_first {
                                Provenance::F { piece: i, cone, side }
                            } else {
                                Provenance::L { piece: i, cone, side }
                            },
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn b_selection(&mut self, out: &mut Vec<(usize, Provenance)>) -> Result<usize> {
        let Some(b) = self.b.clone() else { return Ok(0) };
        let mut total = 0;
        for (si, bs) in b.segments.iter().enumerate() {
            let seg = bs.segment;
            let len = seg.length();
            if len <= TAU_DIST {
                continue;
            }
            let count = (6.0 * len / (self.eps * self.diameter.length)).ceil().max(1.0) as usize;
            total += count;
            for pi in 0..count {
                let sub = Segment::new(
                    seg.at(pi as f64 / count as f64),
                    if pi + 1 == count {
                        seg.b
                    } else {
                        seg.at((pi + 1) as f64 / count as f64)
                    },
                );
                let anchor = self.source(sub.a)?;
                for side in [Side::One, Side::Two] {
                    let members = self.members(side);
                    let items = self.reach_items(sub, &[], &members, &anchor.dist)?;
                    for (cone, best) in cone_max(&self.cones, &items).into_iter().enumerate() {
                        if let Some((p, _)) = best {
                            out.push((
                                p,
                                Provenance::BCone {
                                    segment: si,
                                    piece: pi,
                                    cone,
                                    side: side.number(),
                                },
                            ));
                        }
                    }
                }
            }
        }
        Ok(total)
    }

    /// Runs every selection and assembles the coreset.
    pub fn select(&mut self) -> Result<Coreset> {
        let mut picks = vec![
            (self.diameter.p1_index, Provenance::DiameterEndpoint),
            (self.diameter.p2_index, Provenance::DiameterEndpoint),
        ];
        let mut b_pieces = 0;
        if self.star.is_some() {
            for i in 0..self.pieces.len() {
                self.piece_selection(i, &mut picks)?;
                log::debug!("piece {i}: {} selections so far", picks.len());
            }
            b_pieces = self.b_selection(&mut picks)?;
        }
        let mut by_index: BTreeMap<usize, Vec<Tag>> = BTreeMap::new();
        for (p, provenance) in picks {
            by_index.entry(p).or_default().push(Tag { round: 0, provenance });
        }
        let points = by_index
            .into_iter()
            .map(|(index, mut tags)| {
                tags.sort();
                tags.dedup();
                CoresetPoint {
                    index,
                    point: self.points[index],
                    tags,
                }
            })
            .collect();
        Ok(Coreset {
            eps: self.eps,
            k: self.cones.len(),
            l: piece_count(self.eps)?,
            p1_index: self.diameter.p1_index,
            p2_index: self.diameter.p2_index,
            diameter: self.diameter.length,
            b_pieces,
            rounds: 1,
            points,
        })
    }
}

/// ε-coreset for geodesic furthest-neighbour queries.
pub fn build_coreset(poly: &SimplePolygon, points: &[Point], eps: f64) -> Result<Coreset> {
    Construction::new(poly, points, eps)?.select()
}

/// Coreset for furthest-neighbour queries with up to `z` outliers: `z+1`
/// rounds, each building a coreset of what earlier rounds left over.
pub fn build_outlier_coreset(poly: &SimplePolygon, points: &[Point], eps: f64, z: usize) -> Result<Coreset> {
    if points.len() < 2 {
        return Err(Error::TooFewPoints(points.len()));
    }
    let mut remaining: Vec<usize> = (0..points.len()).collect();
    let mut all: BTreeMap<usize, Vec<Tag>> = BTreeMap::new();
    let mut result: Option<Coreset> = None;
    let mut b_pieces = 0;
    let mut rounds = 0;
    for round in 0..=z as u32 {
        if remaining.is_empty() {
            break;
        }
        rounds += 1;
        if remaining.len() == 1 {
            all.entry(remaining[0]).or_default().push(Tag {
                round,
                provenance: Provenance::DiameterEndpoint,
            });
            break;
        }
        let sub: Vec<Point> = remaining.iter().map(|&i| points[i]).collect();
        let c = build_coreset(poly, &sub, eps)?;
        for cp in &c.points {
            let entry = all.entry(remaining[cp.index]).or_default();
            entry.extend(cp.tags.iter().map(|t| Tag { round, ..*t }));
        }
        b_pieces += c.b_pieces;
        let taken: Vec<usize> = c.indices();
        remaining = remaining
            .iter()
            .enumerate()
            .filter(|(j, _)| taken.binary_search(j).is_err())
            .map(|(_, &i)| i)
            .collect();
        if result.is_none() {
            // the first round runs on the full input, so indices coincide
            result = Some(c);
        }
    }
    let mut out = result.expect("at least one round");
    out.b_pieces = b_pieces;
    out.rounds = rounds;
    out.points = all
        .into_iter()
        .map(|(index, tags)| CoresetPoint {
            index,
            point: points[index],
            tags,
        })
        .collect();
    Ok(out)
}
