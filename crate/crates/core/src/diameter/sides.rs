use crate::kernel::{ring_contains, ring_distance, ring_signed_area, Point, SimplePolygon};
use crate::tolerance::TAU_DIST;

use super::gamma::{EdgeClass, GammaStar, Piece};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn index(self) -> usize {
        match self {
            Side::One => 0,
            Side::Two => 1,
        }
    }

    pub fn number(self) -> u8 {
        self.index() as u8 + 1
    }
}

/// A face of the polygon cut along `Γ*`, bounded by one stretch of the
/// chain and one stretch of the polygon boundary.
#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    pub side: Side,
    /// Arc-length range of the bounding chain stretch, in `Γ` coordinates
    /// (negative values lie on `s1`).
    pub gamma_from: f64,
    pub gamma_to: f64,
    /// Counterclockwise boundary ring.
    pub ring: Vec<Point>,
    pub area: f64,
    lo: Point,
    hi: Point,
}

impl Component {
    fn new(side: Side, gamma_from: f64, gamma_to: f64, ring: Vec<Point>, area: f64) -> Self {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in &ring {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        Component {
            side,
            gamma_from,
            gamma_to,
            ring,
            area,
            lo,
            hi,
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.lo.x && p.x <= self.hi.x && p.y >= self.lo.y && p.y <= self.hi.y && ring_contains(&self.ring, p)
    }
}

/// Which side of `Γ*` a point lies on, and in which face.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SideOf {
    pub side: Side,
    /// `None` for points on `Γ*` itself.
    pub component: Option<usize>,
}

/// The faces of the polygon on either side of `Γ*`. Side one lies to the
/// right of the chain walked from `p1'` to `p2'`.
#[derive(Clone, Debug)]
pub struct SideDecomposition {
    pub star: GammaStar,
    pub components: Vec<Component>,
    /// Chain stretches, in `Γ` coordinates, that run along the polygon
    /// boundary and so bound a zero-area face on the given side.
    pub flat: Vec<(Side, f64, f64)>,
}

#[derive(Clone, Copy, Debug)]
struct Contact {
    pos: f64,
    u: f64,
}

pub fn side_split(poly: &SimplePolygon, star: &GammaStar) -> SideDecomposition {
    let per = poly.perimeter();
    let coordinate = |p: Point| {
        poly.boundary_coordinate(p, TAU_DIST)
            .or_else(|| poly.boundary_coordinate(p, 1e3 * TAU_DIST))
            .unwrap_or(0.0)
    };
    let mut contacts = vec![
        Contact {
            pos: 0.0,
            u: coordinate(star.p1_prime()),
        },
        Contact {
            pos: star.length(),
            u: coordinate(star.p2_prime()),
        },
    ];
    let mut u = 0.0;
    for (i, &v) in poly.vertices().iter().enumerate() {
        for (seg, o) in star.segments() {
            if seg.distance_to_point(v) <= TAU_DIST {
                contacts.push(Contact {
                    pos: o + seg.project(v) * seg.length(),
                    u,
                });
                break;
            }
        }
        u += poly.edge(i).length();
    }
    let (u1, u2) = (contacts[0].u, contacts[1].u);
    let span1 = (u2 - u1).rem_euclid(per);
    let offset = star.gamma_offset();

    let mut components = Vec::new();
    let mut flat = Vec::new();
    for side in [Side::One, Side::Two] {
        let mut mine: Vec<Contact> = contacts
            .iter()
            .copied()
            .filter(|c| {
                let off = (c.u - u1).rem_euclid(per);
                let at_end = off <= TAU_DIST || off >= per - TAU_DIST || (off - span1).abs() <= TAU_DIST;
                at_end
                    || match side {
                        Side::One => off < span1,
                        Side::Two => off > span1,
                    }
            })
            .collect();
        mine.sort_by(|a, b| a.pos.total_cmp(&b.pos));
        mine.dedup_by(|b, a| (b.pos - a.pos).abs() <= TAU_DIST);
        for w in mine.windows(2) {
            let (a, b) = (w[0], w[1]);
            let chain = star.sub_chain(a.pos, b.pos);
            let mut ring = match side {
                Side::One => {
                    let mut r = poly.boundary_walk(a.u, b.u);
                    r.extend(chain.iter().rev().skip(1));
                    r
                }
                Side::Two => {
                    let mut r = chain.clone();
                    r.extend(poly.boundary_walk(b.u, a.u).into_iter().skip(1));
                    r
                }
            };
            ring.dedup();
            if ring.len() > 1 && ring[0] == *ring.last().unwrap() {
                ring.pop();
            }
            let area = ring_signed_area(&ring);
            let size: f64 = (0..ring.len()).map(|i| ring[i].dist(ring[(i + 1) % ring.len()])).sum();
            if area.abs() <= TAU_DIST * (1.0 + size) {
                flat.push((side, a.pos - offset, b.pos - offset));
                continue;
            }
            if area < 0.0 {
                log::warn!("face with clockwise ring on side {:?}", side);
            }
            components.push(Component::new(side, a.pos - offset, b.pos - offset, ring, area.abs()));
        }
    }
    SideDecomposition {
        star: star.clone(),
        components,
        flat,
    }
}

impl SideDecomposition {
    /// Side of `p`. Points within `TAU_DIST` of `Γ*` go to side one.
    pub fn classify(&self, p: Point) -> SideOf {
        if self.star.distance_to_point(p) <= TAU_DIST {
            return SideOf {
                side: Side::One,
                component: None,
            };
        }
        let idx = self.components.iter().position(|c| c.contains(p)).unwrap_or_else(|| {
            (0..self.components.len())
                .min_by(|&a, &b| {
                    ring_distance(&self.components[a].ring, p).total_cmp(&ring_distance(&self.components[b].ring, p))
                })
                .unwrap_or(0)
        });
        SideOf {
            side: self.components.get(idx).map_or(Side::One, |c| c.side),
            component: Some(idx),
        }
    }

    pub fn total_area(&self) -> f64 {
        self.components.iter().map(|c| c.area).sum()
    }
}

/// Pockets and edge classes of one piece.
#[derive(Clone, Debug, PartialEq)]
pub struct PieceClasses {
    pub edge_classes: Vec<EdgeClass>,
    /// Components that are pockets of the piece.
    pub pockets: Vec<usize>,
    pub intermediate: Option<usize>,
}

impl PieceClasses {
    pub fn in_pocket(&self, of: SideOf) -> bool {
        of.component.is_some_and(|c| self.pockets.contains(&c))
    }

    pub fn non_pocket_edges(&self) -> usize {
        self.edge_classes
            .iter()
            .filter(|c| !matches!(c, EdgeClass::PocketIn1 | EdgeClass::PocketIn2))
            .count()
    }
}

/// A component is a pocket of `Γ_i` when its chain stretch lies within the
/// piece. Pocket-covered edges are classed by side, as are edges lying on
/// the polygon boundary (they bound a flat face); among the rest the
/// piece's first and last edge are `First`/`Last`, a single leftover edge is
/// `Intermediate` and anything else is `Plain`.
pub fn pocket_and_edge_classify(decomp: &SideDecomposition, piece: &Piece) -> PieceClasses {
    let pockets: Vec<usize> = decomp
        .components
        .iter()
        .enumerate()
        .filter(|(_, c)| c.gamma_from >= piece.start - TAU_DIST && c.gamma_to <= piece.end + TAU_DIST)
        .map(|(i, _)| i)
        .collect();
    let n = piece.edges.len();
    let mut classes: Vec<Option<EdgeClass>> = piece
        .edges
        .iter()
        .map(|e| {
            let within = |from: f64, to: f64| e.from >= from - TAU_DIST && e.to <= to + TAU_DIST;
            let covering = |side: Side| {
                pockets.iter().any(|&c| {
                    let c = &decomp.components[c];
                    c.side == side && within(c.gamma_from, c.gamma_to)
                }) || decomp.flat.iter().any(|&(s, from, to)| s == side && within(from, to))
            };
            if covering(Side::One) {
                Some(EdgeClass::PocketIn1)
            } else if covering(Side::Two) {
                Some(EdgeClass::PocketIn2)
            } else {
                None
            }
        })
        .collect();
    if n > 0 && classes[0].is_none() {
        classes[0] = Some(EdgeClass::First);
    }
    if n > 1 && classes[n - 1].is_none() {
        classes[n - 1] = Some(EdgeClass::Last);
    }
    let rest: Vec<usize> = (0..n).filter(|&i| classes[i].is_none()).collect();
    let intermediate = if rest.len() == 1 { Some(rest[0]) } else { None };
    if rest.len() > 1 {
        log::warn!("piece {} has {} unclassified non-pocket edges", piece.index, rest.len());
    }
    let edge_classes = classes
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            c.unwrap_or(if Some(i) == intermediate {
                EdgeClass::Intermediate
            } else {
                EdgeClass::Plain
            })
        })
        .collect();
    PieceClasses {
        edge_classes,
        pockets,
        intermediate,
    }
}

/// The two sub-polygons cut off by the chord between polygon vertices `a`
/// and `b`: counterclockwise from `a` to `b`, and from `b` to `a`.
pub fn split_by_chord(poly: &SimplePolygon, a: Point, b: Point) -> Option<(Vec<Point>, Vec<Point>)> {
    let find = |p: Point| poly.vertices().iter().position(|v| v.dist(p) <= TAU_DIST);
    let (ia, ib) = (find(a)?, find(b)?);
    let m = poly.len();
    let walk = |from: usize, to: usize| {
        let mut ring = vec![poly.vertex(from)];
        let mut i = from;
        while i != to {
            i = (i + 1) % m;
            ring.push(poly.vertex(i));
        }
        ring
    };
    Some((walk(ia, ib), walk(ib, ia)))
}
