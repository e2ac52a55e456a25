//! Shortest paths inside a simple polygon: two-point queries, single-source
//! trees, path extensions, direction spans and pseudo-triangles.

mod funnel;
mod path;
mod pseudo;
mod spt;
mod visgraph;

pub use funnel::shortest_path;
pub use path::{ext_backward, ext_forward, span, GeodesicPath};
pub use pseudo::{pseudo_triangle, PseudoTriangle};
pub use spt::{ShortestPathTree, SptHit};
pub use visgraph::{visgraph_distance, VisibilityGraph};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::fixtures::{l_shape, square};
    use crate::kernel::Point;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn shortest_path_examples() {
        let sq = square();
        let path = shortest_path(&sq, p(1.0, 1.0), p(9.0, 9.0)).unwrap();
        assert_eq!(path.vertices(), &[p(1.0, 1.0), p(9.0, 9.0)]);
        assert!((path.length() - 8.0 * 2f64.sqrt()).abs() < 1e-12);

        let l = l_shape();
        let path = shortest_path(&l, p(1.0, 1.0), p(3.0, 3.0)).unwrap();
        assert_eq!(path.vertices(), &[p(1.0, 1.0), p(2.0, 2.0), p(3.0, 3.0)]);
        let path = shortest_path(&l, p(3.0, 1.0), p(2.5, 3.5)).unwrap();
        assert_eq!(path.edge_count(), 1);
        assert!((path.length() - 2.549509756796392).abs() < 1e-9);

        assert_eq!(
            shortest_path(&l, p(3.0, 3.0), p(1.0, 3.0)),
            Err(Error::PointOutside(p(1.0, 3.0)))
        );
        assert!(shortest_path(&l, p(1.0, 1.0), p(1.0, 1.0)).unwrap().is_degenerate());
    }

    #[test]
    fn reflex_path_bends_at_vertex() {
        let l = l_shape();
        let path = shortest_path(&l, p(1.0, 1.5), p(3.0, 3.5)).unwrap();
        assert_eq!(path.vertices(), &[p(1.0, 1.5), p(2.0, 2.0), p(3.0, 3.5)]);
        let back = shortest_path(&l, p(3.0, 3.5), p(1.0, 1.5)).unwrap();
        assert_eq!(back, path.reversed());
    }

    #[test]
    fn spt_examples() {
        let l = l_shape();
        let spt = ShortestPathTree::build(&l, p(1.0, 1.0)).unwrap();
        let hit = spt.query(p(3.0, 3.0)).unwrap();
        assert!((hit.first_dir.unwrap() - 45f64.to_radians()).abs() < 1e-12);
        assert!((hit.dist - 2.0 * 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(
            spt.path(p(3.0, 3.0)).unwrap(),
            shortest_path(&l, p(1.0, 1.0), p(3.0, 3.0)).unwrap()
        );
        let near = spt.path(p(1.0, 1.5)).unwrap();
        assert_eq!(near.edge_count(), 1);
        assert!((near.length() - 0.5).abs() < 1e-12);
        assert_eq!(spt.query(p(1.0, 1.0)).unwrap().first_dir, None);

        let sq = square();
        let spt = ShortestPathTree::build(&sq, p(5.0, 5.0)).unwrap();
        let path = spt.path(p(9.0, 9.0)).unwrap();
        assert_eq!(path.vertices(), &[p(5.0, 5.0), p(9.0, 9.0)]);
        assert!((path.length() - 4.0 * 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn spt_from_vertex_source() {
        let l = l_shape();
        let spt = ShortestPathTree::build(&l, p(0.0, 0.0)).unwrap();
        let direct = shortest_path(&l, p(0.0, 0.0), p(3.0, 3.5)).unwrap();
        assert_eq!(spt.path(p(3.0, 3.5)).unwrap(), direct);
        assert_eq!(spt.vertex_distance(0), 0.0);
        assert!((spt.vertex_distance(3) - (8f64.sqrt() + 2.0)).abs() < 1e-12);
    }

    #[test]
    fn extension_examples() {
        let l = l_shape();
        let path = GeodesicPath::new(vec![p(1.0, 1.0), p(2.0, 2.0), p(3.0, 3.0)]);
        let back = ext_backward(&l, &path, None).unwrap();
        assert!(back.a.dist(p(0.0, 0.0)) < 1e-12);
        assert_eq!(back.b, p(1.0, 1.0));
        let capped = ext_backward(&l, &path, Some(0.5)).unwrap();
        assert!((capped.length() - 0.5).abs() < 1e-12);
        assert_eq!(capped.b, p(1.0, 1.0));

        let sq = square();
        let path = GeodesicPath::new(vec![p(5.0, 5.0), p(9.0, 9.0)]);
        let fwd = ext_forward(&sq, &path, None).unwrap();
        assert_eq!(fwd.a, p(9.0, 9.0));
        assert!(fwd.b.dist(p(10.0, 10.0)) < 1e-12);

        let point = GeodesicPath::new(vec![p(1.0, 1.0)]);
        assert_eq!(ext_forward(&sq, &point, None), Err(Error::DegeneratePath));
    }

    #[test]
    fn visgraph_examples() {
        let l = l_shape();
        let d = visgraph_distance(&l, p(1.0, 1.0), p(3.0, 3.0)).unwrap();
        assert!((d - 2.0 * 2f64.sqrt()).abs() < 1e-12);
        let sq = square();
        let d = visgraph_distance(&sq, p(1.0, 1.0), p(9.0, 9.0)).unwrap();
        assert!((d - 8.0 * 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(visgraph_distance(&sq, p(2.0, 3.0), p(2.0, 3.0)).unwrap(), 0.0);
    }

    #[test]
    fn pseudo_triangle_examples() {
        let sq = square();
        let t = pseudo_triangle(&sq, p(1.0, 1.0), p(8.0, 2.0), p(4.0, 9.0)).unwrap();
        assert_eq!(t.corners, [p(1.0, 1.0), p(8.0, 2.0), p(4.0, 9.0)]);
        assert!(!t.degenerate);

        let l = l_shape();
        let t = pseudo_triangle(&l, p(1.0, 1.0), p(3.0, 0.5), p(3.0, 3.0)).unwrap();
        assert!(!t.degenerate);
        assert_eq!(t.corners[0], p(1.0, 1.0));
        let total: usize = t.sides.iter().map(|s| s.edge_count()).sum();
        assert!(total >= 3);

        let flat = pseudo_triangle(&sq, p(1.0, 1.0), p(2.0, 2.0), p(3.0, 3.0)).unwrap();
        assert!(flat.degenerate);
    }
}
