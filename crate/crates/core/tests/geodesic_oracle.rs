mod common;

use common::{inside_point, rng, star_polygon};
use geocoreset::fixtures::{comb, l_shape};
use geocoreset::geodesic::{pseudo_triangle, shortest_path, ShortestPathTree, VisibilityGraph};
use geocoreset::tolerance::{TAU_ANG, TAU_DIST};
use geocoreset::SimplePolygon;
use proptest::prelude::*;

fn check_against_oracle(poly: &SimplePolygon, seed: u64, pairs: usize) {
    let mut rng = rng(seed);
    let vis = VisibilityGraph::new(poly);
    for _ in 0..pairs {
        let a = inside_point(&mut rng, poly);
        let b = inside_point(&mut rng, poly);
        let path = shortest_path(poly, a, b).unwrap();
        let oracle = vis.distance(a, b).unwrap();
        assert!(
            (path.length() - oracle).abs() <= 1e-9 * (1.0 + oracle),
            "{a} -> {b}: funnel {} oracle {oracle}",
            path.length()
        );
        for e in path.edges() {
            assert!(poly.segment_inside(e.a, e.b));
        }
        let spt = ShortestPathTree::build(poly, a).unwrap();
        let via_tree = spt.path(b).unwrap();
        assert_eq!(via_tree.vertices(), path.vertices());
        assert!((spt.distance(b).unwrap() - path.length()).abs() <= TAU_DIST);
        let back = shortest_path(poly, b, a).unwrap();
        assert_eq!(back.vertices(), path.reversed().vertices());
    }
}

#[test]
fn comb_paths_match_oracle() {
    let poly = comb(5, 100.0, 10.0);
    check_against_oracle(&poly, 7, 60);
}

#[test]
fn spt_query_from_vertices() {
    let poly = comb(4, 80.0, 8.0);
    let vis = VisibilityGraph::new(&poly);
    let mut r = rng(3);
    for v in 0..poly.len() {
        let s = poly.vertex(v);
        let spt = ShortestPathTree::build(&poly, s).unwrap();
        for w in 0..poly.len() {
            let oracle = vis.distance(s, poly.vertex(w)).unwrap();
            assert!((spt.vertex_distance(w) - oracle).abs() <= 1e-9 * (1.0 + oracle));
        }
        let t = inside_point(&mut r, &poly);
        let oracle = vis.distance(s, t).unwrap();
        assert!((spt.distance(t).unwrap() - oracle).abs() <= 1e-9 * (1.0 + oracle));
    }
}

#[test]
fn l_shape_first_directions() {
    let poly = l_shape();
    let mut r = rng(11);
    for _ in 0..50 {
        let a = inside_point(&mut r, &poly);
        let b = inside_point(&mut r, &poly);
        let spt = ShortestPathTree::build(&poly, a).unwrap();
        let hit = spt.query(b).unwrap();
        let path = shortest_path(&poly, a, b).unwrap();
        assert!((hit.first_dir.unwrap() - path.first_dir().unwrap()).abs() <= TAU_ANG);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn star_paths_match_oracle(seed in any::<u64>(), n in 5usize..40) {
        let mut r = rng(seed);
        let poly = star_polygon(&mut r, n);
        check_against_oracle(&poly, seed ^ 0x5eed, 8);
    }

    #[test]
    fn metric_axioms(seed in any::<u64>(), n in 5usize..30) {
        let mut r = rng(seed);
        let poly = star_polygon(&mut r, n);
        let [a, b, c] = [0; 3].map(|_| inside_point(&mut r, &poly));
        let d = |x, y| shortest_path(&poly, x, y).unwrap().length();
        prop_assert!((d(a, b) - d(b, a)).abs() <= TAU_DIST);
        prop_assert!(d(a, c) <= d(a, b) + d(b, c) + TAU_DIST);
    }

    #[test]
    fn pseudo_triangle_spans(seed in any::<u64>(), n in 5usize..30) {
        let mut r = rng(seed);
        let poly = star_polygon(&mut r, n);
        let [p, q, s] = [0; 3].map(|_| inside_point(&mut r, &poly));
        let tri = pseudo_triangle(&poly, p, q, s).unwrap();
        prop_assume!(!tri.degenerate);
        prop_assert!(tri.spans_consistent().unwrap());
        for _ in 0..5 {
            let u = inside_point(&mut r, &poly);
            prop_assert_ne!(tri.extension_meets_opposite(&poly, u).unwrap(), Some(false));
        }
    }
}
