//! Planar primitives: points, robust orientation, segments, simple polygons,
//! triangulation and arcs on the circle of directions.

mod arc;
mod point;
mod polygon;
mod predicates;
mod segment;
mod triangulation;

pub use arc::{arc_between, DirectionArc};
pub use point::{angular_separation, ccw_delta, normalize_angle, Point};
pub use polygon::{ring_contains, ring_distance, ring_signed_area, Containment, SimplePolygon};
pub use predicates::{orient, orient_exact, orient_filtered, Orientation};
pub use segment::{
    line_segment_params, on_segment, point_segment_distance, segments_cross_properly, segments_intersect, Segment,
};
pub use triangulation::Triangulation;
