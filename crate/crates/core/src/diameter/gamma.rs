use crate::error::{Error, Result};
use crate::geodesic::{ext_backward, ext_forward, GeodesicPath};
use crate::kernel::{Point, Segment, SimplePolygon};

/// `Γ` extended at both ends until it meets the boundary.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaStar {
    /// From the boundary endpoint `p1'` to `p1`.
    pub s1: Segment,
    /// From `p2` to the boundary endpoint `p2'`.
    pub s2: Segment,
    /// `p1', Γ..., p2'` with zero-length extensions dropped.
    pub chain: Vec<Point>,
    /// Arc length of every chain vertex, measured from `p1'`.
    pub offsets: Vec<f64>,
}

impl GammaStar {
    pub fn p1_prime(&self) -> Point {
        self.s1.a
    }

    pub fn p2_prime(&self) -> Point {
        self.s2.b
    }

    /// Chain arc length at which `Γ` starts.
    pub fn gamma_offset(&self) -> f64 {
        self.s1.length()
    }

    pub fn length(&self) -> f64 {
        *self.offsets.last().unwrap()
    }

    pub fn segments(&self) -> impl Iterator<Item = (Segment, f64)> + '_ {
        self.chain
            .windows(2)
            .zip(&self.offsets)
            .map(|(w, &o)| (Segment::new(w[0], w[1]), o))
    }

    /// Sub-chain between chain arc lengths `from <= to`.
    pub fn sub_chain(&self, from: f64, to: f64) -> Vec<Point> {
        let mut out = vec![self.point_at(from)];
        for (v, &o) in self.chain.iter().zip(&self.offsets) {
            if o > from && o < to {
                out.push(*v);
            }
        }
        out.push(self.point_at(to));
        out.dedup();
        out
    }

    pub fn point_at(&self, s: f64) -> Point {
        for (seg, o) in self.segments() {
            let len = seg.length();
            if s <= o + len {
                return seg.at(if len > 0.0 {
                    ((s - o) / len).clamp(0.0, 1.0)
                } else {
                    0.0
                });
            }
        }
        *self.chain.last().unwrap()
    }

    /// Smallest distance from `p` to the chain.
    pub fn distance_to_point(&self, p: Point) -> f64 {
        self.segments()
            .map(|(s, _)| s.distance_to_point(p))
            .fold(f64::INFINITY, f64::min)
    }
}

pub fn extend_gamma(poly: &SimplePolygon, gamma: &GeodesicPath) -> Result<GammaStar> {
    let s1 = ext_backward(poly, gamma, None)?;
    let s2 = ext_forward(poly, gamma, None)?;
    let mut chain = vec![s1.a];
    chain.extend_from_slice(gamma.vertices());
    chain.push(s2.b);
    chain.dedup();
    let mut offsets = vec![0.0];
    for w in chain.windows(2) {
        offsets.push(offsets.last().unwrap() + w[0].dist(w[1]));
    }
    Ok(GammaStar { s1, s2, chain, offsets })
}

/// Validates an approximation parameter. Values above 1 are clamped.
pub fn checked_eps(eps: f64) -> Result<f64> {
    if !eps.is_finite() || eps <= 0.0 {
        return Err(Error::BadEpsilon(eps));
    }
    if eps > 1.0 {
        log::warn!("eps = {eps} clamped to 1");
        return Ok(1.0);
    }
    Ok(eps)
}

/// Number of pieces `⌈6/ε⌉`.
pub fn piece_count(eps: f64) -> Result<usize> {
    Ok((6.0 / checked_eps(eps)?).ceil() as usize)
}

/// Classification of an edge of a piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    First,
    Last,
    PocketIn1,
    PocketIn2,
    Intermediate,
    Plain,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PieceEdge {
    pub segment: Segment,
    /// Arc-length range along `Γ`.
    pub from: f64,
    pub to: f64,
    pub class: EdgeClass,
}

/// One of the equal-length pieces `Γ_i` of `Γ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Piece {
    pub index: usize,
    pub start: f64,
    pub end: f64,
    pub path: GeodesicPath,
    pub edges: Vec<PieceEdge>,
}

impl Piece {
    /// `γ_i`
    pub fn start_point(&self) -> Point {
        self.path.source()
    }

    /// `γ_{i+1}`
    pub fn end_point(&self) -> Point {
        self.path.target()
    }

    pub fn first_edge(&self) -> Option<&PieceEdge> {
        self.edges.first()
    }

    pub fn last_edge(&self) -> Option<&PieceEdge> {
        self.edges.last()
    }

    pub fn length(&self) -> f64 {
        self.end - self.start
    }
}

/// Splits `Γ` into `⌈6/ε⌉` pieces of equal arc length. Edge classes are
/// left `Plain`; see [`super::classify_piece`].
pub fn split_pieces(gamma: &GeodesicPath, eps: f64) -> Result<Vec<Piece>> {
    let l = piece_count(eps)?;
    let total = gamma.length();
    let mut pieces = Vec::with_capacity(l);
    for i in 0..l {
        let start = total * i as f64 / l as f64;
        let end = if i + 1 == l {
            total
        } else {
            total * (i + 1) as f64 / l as f64
        };
        let path = gamma.sub_path(start, end);
        let mut edges = Vec::new();
        let mut acc = start;
        for seg in path.edges() {
            let len = seg.length();
            edges.push(PieceEdge {
                segment: seg,
                from: acc,
                to: acc + len,
                class: EdgeClass::Plain,
            });
            acc += len;
        }
        pieces.push(Piece {
            index: i,
            start,
            end,
            path,
            edges,
        });
    }
    Ok(pieces)
}
