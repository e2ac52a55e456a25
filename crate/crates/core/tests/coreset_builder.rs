mod common;

use std::f64::consts::PI;

use common::{inside_point, rng, star_polygon};
use geocoreset::coreset::{
    build_coreset, build_outlier_coreset, canonical_cones, cone_max, cone_max_brute, reach_interval, CanonicalCones,
    Construction, Provenance, ReachInterval,
};
use geocoreset::fixtures::{comb, corridor, l_shape, regular_polygon, square};
use geocoreset::geodesic::{shortest_path, ShortestPathTree};
use geocoreset::kernel::DirectionArc;
use geocoreset::tolerance::TAU_DIST;
use geocoreset::{Error, Point, Segment, SimplePolygon};
use proptest::prelude::*;
use rand::Rng;

fn p(x: f64, y: f64) -> Point {
    Point::new(x, y)
}

fn deg(d: f64) -> f64 {
    d.to_radians()
}

fn furthest(poly: &SimplePolygon, pts: &[Point], q: Point) -> f64 {
    let spt = ShortestPathTree::build(poly, q).unwrap();
    pts.iter().map(|&x| spt.distance(x).unwrap()).fold(0.0, f64::max)
}

fn min_ratio(poly: &SimplePolygon, pts: &[Point], eps: f64, queries: &[Point]) -> f64 {
    let c = build_coreset(poly, pts, eps).unwrap();
    let sub: Vec<Point> = c.points.iter().map(|cp| cp.point).collect();
    queries
        .iter()
        .map(|&q| {
            let exact = furthest(poly, pts, q);
            if exact <= TAU_DIST {
                1.0
            } else {
                furthest(poly, &sub, q) / exact
            }
        })
        .fold(1.0, f64::min)
}

#[test]
fn canonical_cone_examples() {
    let c = canonical_cones(1.0).unwrap();
    assert_eq!(c.len(), 13);
    assert!((c.width().to_degrees() - 360.0 / 13.0).abs() < 1e-9);
    assert_eq!(canonical_cones(0.5).unwrap().len(), 26);
    assert_eq!(canonical_cones(PI).unwrap().len(), 13);
    let total: f64 = (0..c.len()).map(|j| c.cone(j).width()).sum();
    assert!((total - 2.0 * PI).abs() < 1e-12);
    assert!(matches!(canonical_cones(0.0), Err(Error::BadEpsilon(_))));
    for eps in [0.05, 0.1, 0.2, 0.5, 1.0] {
        assert!(canonical_cones(eps).unwrap().width() <= eps / 2.0 + 1e-15);
    }
}

#[test]
fn square_reach_interval() {
    let sq = square();
    let f1 = p(1.0 + 8.0 / 6.0, 1.0 + 8.0 / 6.0);
    let edge = Segment::new(p(1.0, 1.0), f1);
    let r = reach_interval(&sq, edge, p(1.0, 1.0), 0, p(9.0, 1.0)).unwrap();
    let expected = (1.0f64 / 5.0).atan();
    assert!((r.arc.start() - (2.0 * PI - expected)).abs() < 1e-12);
    assert!((r.arc.width() - expected).abs() < 1e-12);
    assert!((expected.to_degrees() - 11.31).abs() < 0.01);
    assert!((r.weight - 8.0).abs() < 1e-12);
    assert_eq!(r.intervals(), vec![(r.arc.start(), 2.0 * PI)]);

    let far = reach_interval(&sq, Segment::new(p(4.0, 1.0), p(6.0, 1.0)), p(4.0, 1.0), 0, p(5.0, 9.9)).unwrap();
    assert!(far.arc.width() < deg(15.0));
    assert!(matches!(
        reach_interval(&sq, Segment::new(p(1.0, 1.0), p(1.0, 1.0)), p(1.0, 1.0), 0, p(5.0, 5.0)),
        Err(Error::DegenerateAnchor)
    ));
}

#[test]
fn reach_interval_bends_around_reflex_corner() {
    let l = l_shape();
    let edge = Segment::new(p(0.5, 0.5), p(1.5, 0.5));
    let r = reach_interval(&l, edge, edge.a, 0, p(3.0, 3.5)).unwrap();
    // from (0.5,0.5) the path wraps the reflex vertex (2,2); (1.5,0.5) sees the target
    let da = p(0.5, 0.5).angle_to(p(2.0, 2.0));
    let db = p(1.5, 0.5).angle_to(p(3.0, 3.5));
    assert!((r.arc.start() - da).abs() < 1e-12);
    assert!((r.arc.width() - (db - da)).abs() < 1e-12);
}

fn item(point: usize, from: f64, to: f64, weight: f64) -> ReachInterval {
    ReachInterval {
        point,
        arc: DirectionArc::ccw(deg(from), deg(to)),
        weight,
    }
}

#[test]
fn quadrant_cone_max() {
    let cones = CanonicalCones::with_count(4);
    let items = [item(0, 10.0, 30.0, 5.0), item(1, 80.0, 100.0, 7.0)];
    let got = cone_max(&cones, &items);
    assert_eq!(got, vec![Some((1, 7.0)), Some((1, 7.0)), None, None]);
    assert_eq!(got, cone_max_brute(&cones, &items));

    let full = [ReachInterval {
        point: 3,
        arc: DirectionArc::full(),
        weight: 1.0,
    }];
    assert_eq!(cone_max(&cones, &full), vec![Some((3, 1.0)); 4]);
    assert_eq!(cone_max(&cones, &[]), vec![None; 4]);
}

#[test]
fn cone_max_tree_matches_brute_force() {
    let mut r = rng(11);
    for round in 0..1000 {
        let k = [4, 13, 63][round % 3];
        let cones = CanonicalCones::with_count(k);
        let n = r.gen_range(0..40);
        let items: Vec<ReachInterval> = (0..n)
            .map(|i| {
                let width = match r.gen_range(0..4) {
                    0 => 0.0,
                    1 => r.gen_range(0.0..0.05),
                    _ => r.gen_range(0.0..2.0 * PI),
                };
                // some items start exactly on cone boundaries
                let start = if r.gen_bool(0.2) {
                    cones.starts()[r.gen_range(0..k)]
                } else {
                    r.gen_range(0.0..2.0 * PI)
                };
                ReachInterval {
                    point: i,
                    arc: DirectionArc::new(start, width),
                    weight: r.gen_range(0..20) as f64,
                }
            })
            .collect();
        assert_eq!(
            cone_max(&cones, &items),
            cone_max_brute(&cones, &items),
            "round {round}"
        );
    }
}

#[test]
fn square_coreset() {
    let sq = square();
    let pts = [p(1.0, 1.0), p(9.0, 1.0), p(9.0, 9.0), p(1.0, 9.0)];
    let c = build_coreset(&sq, &pts, 1.0).unwrap();
    assert!(c.contains(0) && c.contains(2));
    assert!(c.len() <= 4);
    assert_eq!((c.k, c.l), (13, 6));
    assert!(c.len() <= c.size_bound());
    // two B segments, each a single piece
    assert_eq!(c.b_pieces, 2);
    assert!(c.points[0]
        .tags
        .iter()
        .any(|t| t.provenance == Provenance::DiameterEndpoint));
    let queries: Vec<Point> = (0..10)
        .flat_map(|i| (0..10).map(move |j| p(0.5 + i as f64, 0.5 + j as f64)))
        .collect();
    assert!((min_ratio(&sq, &pts, 1.0, &queries) - 1.0).abs() < 1e-12);
}

#[test]
fn two_points_give_the_pair() {
    let l = l_shape();
    let c = build_coreset(&l, &[p(1.0, 1.0), p(3.0, 3.0)], 0.3).unwrap();
    assert_eq!(c.indices(), vec![0, 1]);
    assert_eq!(build_coreset(&l, &[p(1.0, 1.0)], 0.3), Err(Error::TooFewPoints(1)));
    assert!(matches!(
        build_coreset(&l, &[p(1.0, 1.0), p(3.0, 3.0)], -1.0),
        Err(Error::BadEpsilon(_))
    ));
    // all points coincide
    let c = build_coreset(&l, &[p(1.0, 1.0); 3], 0.3).unwrap();
    assert_eq!(c.indices(), vec![0, 1]);
}

#[test]
fn convex_has_no_pockets_or_alpha() {
    let poly = regular_polygon(12, 500.0);
    let mut r = rng(3);
    let pts: Vec<Point> = (0..60).map(|_| inside_point(&mut r, &poly)).collect();
    let c = build_coreset(&poly, &pts, 0.5).unwrap();
    for cp in &c.points {
        for t in &cp.tags {
            assert!(!matches!(t.provenance, Provenance::X { .. } | Provenance::Alpha { .. }));
        }
    }
}

#[test]
fn one_sided_input_leaves_other_side_empty() {
    let sq = square();
    // everything on or below the diagonal (1,1)→(9,9)
    let pts = [p(1.0, 1.0), p(9.0, 9.0), p(8.0, 2.0), p(5.0, 1.0), p(9.0, 4.0)];
    let c = build_coreset(&sq, &pts, 0.5).unwrap();
    for cp in &c.points {
        for t in &cp.tags {
            let side = match t.provenance {
                Provenance::R { side, .. }
                | Provenance::X { side, .. }
                | Provenance::F { side, .. }
                | Provenance::L { side, .. }
                | Provenance::BCone { side, .. } => side,
                _ => continue,
            };
            assert_eq!(side, 1, "{} at {:?}", t.provenance, cp.point);
        }
    }
}

#[test]
fn comb_pocket_selection_is_furthest_pocket_point() {
    let poly = comb(5, 100.0, 10.0);
    let mut r = rng(5);
    let mut pts = vec![p(1.0, -95.0), p(95.0, 5.0)];
    pts.extend((0..80).map(|_| inside_point(&mut r, &poly)));
    let mut cons = Construction::new(&poly, &pts, 1.0).unwrap();
    let c = cons.select().unwrap();
    let mut seen_x = 0;
    for (i, piece) in cons.pieces.iter().enumerate() {
        let spt = ShortestPathTree::build(&poly, piece.start_point()).unwrap();
        for side in 1..=2u8 {
            let pocket: Vec<usize> = (0..pts.len())
                .filter(|&j| {
                    cons.point_sides[j].side.number() == side && cons.classes[i].in_pocket(cons.point_sides[j])
                })
                .collect();
            let chosen: Vec<usize> = c
                .points
                .iter()
                .filter(|cp| cp.tags.iter().any(|t| t.provenance == Provenance::X { piece: i, side }))
                .map(|cp| cp.index)
                .collect();
            if pocket.is_empty() {
                assert!(chosen.is_empty());
                continue;
            }
            seen_x += 1;
            let best = pocket
                .iter()
                .map(|&j| spt.distance(pts[j]).unwrap())
                .fold(0.0, f64::max);
            assert_eq!(chosen.len(), 1);
            assert!((spt.distance(pts[chosen[0]]).unwrap() - best).abs() <= 1e-9);
        }
    }
    assert!(seen_x > 0);
}

#[test]
fn corridor_b_pieces_select_cone_points() {
    let poly = corridor();
    let pts = [p(2.0, 2.0), p(8.0, 8.0), p(-90.0, 5.0), p(-40.0, 4.5), p(5.0, 9.0)];
    let c = build_coreset(&poly, &pts, 0.5).unwrap();
    assert!(c.b_pieces > 2);
    assert!(c
        .points
        .iter()
        .any(|cp| cp.tags.iter().any(|t| matches!(t.provenance, Provenance::BCone { .. }))));
    assert!(c.len() <= c.size_bound());
}

#[test]
fn outlier_rounds() {
    let sq = square();
    let pts = [p(1.0, 1.0), p(9.0, 1.0), p(9.0, 9.0), p(1.0, 9.0)];
    let base = build_coreset(&sq, &pts, 1.0).unwrap();
    assert_eq!(build_outlier_coreset(&sq, &pts, 1.0, 0).unwrap(), base);
    let c = build_outlier_coreset(&sq, &pts, 1.0, 2).unwrap();
    assert_eq!(c.indices(), vec![0, 1, 2, 3]);
    // each point is picked in exactly one round
    for cp in &c.points {
        let first = cp.tags[0].round;
        assert!(cp.tags.iter().all(|t| t.round == first));
    }
}

#[test]
fn size_bound_formula() {
    let sq = square();
    let pts = [p(1.0, 1.0), p(9.0, 1.0), p(9.0, 9.0), p(1.0, 9.0)];
    let mut last = 0;
    for eps in [1.0, 0.5, 0.2, 0.1] {
        let c = build_coreset(&sq, &pts, eps).unwrap();
        assert!(c.size_bound() > last);
        last = c.size_bound();
    }
    let c = build_coreset(&sq, &pts, 0.2).unwrap();
    assert_eq!((c.l, c.k), (30, 63));
}

#[test]
fn comb_guarantee() {
    let poly = comb(5, 100.0, 10.0);
    let mut r = rng(21);
    let pts: Vec<Point> = (0..120).map(|_| inside_point(&mut r, &poly)).collect();
    let queries: Vec<Point> = (0..200).map(|_| inside_point(&mut r, &poly)).collect();
    for eps in [0.5, 0.2] {
        let ratio = min_ratio(&poly, &pts, eps, &queries);
        assert!(ratio >= 1.0 - eps - 1e-9, "eps {eps}: ratio {ratio}");
    }
}

#[test]
fn deterministic() {
    let poly = comb(3, 60.0, 6.0);
    let mut r = rng(8);
    let pts: Vec<Point> = (0..50).map(|_| inside_point(&mut r, &poly)).collect();
    assert_eq!(
        build_coreset(&poly, &pts, 0.3).unwrap(),
        build_coreset(&poly, &pts, 0.3).unwrap()
    );
    let _ = shortest_path(&poly, pts[0], pts[1]).unwrap();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn star_guarantee_and_bound(seed in 0u64..10_000, m in 5usize..24, n in 2usize..60, eps_i in 0usize..3) {
        let eps = [0.5, 0.2, 0.1][eps_i];
        let mut r = rng(seed);
        let poly = star_polygon(&mut r, m);
        let pts: Vec<Point> = (0..n).map(|_| inside_point(&mut r, &poly)).collect();
        let c = build_coreset(&poly, &pts, eps).unwrap();
        prop_assert!(c.len() <= c.size_bound());
        prop_assert!(c.contains(c.p1_index) && c.contains(c.p2_index));
        for cp in &c.points {
            prop_assert_eq!(cp.point, pts[cp.index]);
        }
        let queries: Vec<Point> = (0..30).map(|_| inside_point(&mut r, &poly)).collect();
        let ratio = min_ratio(&poly, &pts, eps, &queries);
        prop_assert!(ratio >= 1.0 - eps - 1e-9, "ratio {}", ratio);
    }

    #[test]
    fn cone_max_agrees(seed in 0u64..u64::MAX, k in 1usize..70) {
        let mut r = rng(seed);
        let cones = CanonicalCones::with_count(k);
        let items: Vec<ReachInterval> = (0..r.gen_range(0..30))
            .map(|i| ReachInterval {
                point: i,
                arc: DirectionArc::new(r.gen_range(0.0..7.0), r.gen_range(0.0..7.0)),
                weight: r.gen_range(0..5) as f64,
            })
            .collect();
        prop_assert_eq!(cone_max(&cones, &items), cone_max_brute(&cones, &items));
    }
}
