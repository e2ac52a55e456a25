use thiserror::Error;

use crate::kernel::Point;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {0} has a non-finite coordinate")]
    NonFiniteCoordinate(usize),
    #[error("vertices {0} and {1} coincide")]
    DuplicateVertex(usize, usize),
    #[error("vertex {0} is collinear with its neighbours")]
    CollinearRun(usize),
    #[error("edges {0} and {1} intersect")]
    SelfIntersecting(usize, usize),
    #[error("ray origin {0} lies outside the polygon")]
    OriginOutside(Point),
    #[error("arc endpoints are antipodal")]
    AntipodalEndpoints,
    #[error("point {0} lies outside the polygon")]
    PointOutside(Point),
    #[error("path has no edges")]
    DegeneratePath,
    #[error("need at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("epsilon must lie in (0, 1], got {0}")]
    BadEpsilon(f64),
    #[error("point lies on the anchor edge")]
    DegenerateAnchor,
    #[error("coreset is empty")]
    EmptyCoreset,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
