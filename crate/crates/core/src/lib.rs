//! Coresets for approximate geodesic furthest-neighbor queries.
//!
//! Given a simple polygon and a point set inside it, [`coreset::build_coreset`]
//! selects `O(1/ε²)` points such that, for every query point in the polygon,
//! the geodesically furthest coreset point is at least `1 - ε` times as far
//! as the true furthest neighbor. The crate also exposes the geodesic
//! machinery it is built on (funnel shortest paths, shortest-path trees,
//! visibility-graph oracle) and an exact brute-force query engine used for
//! verification.
//!
//! ```
//! use geocoreset::coreset::build_coreset;
//! use geocoreset::query::{approx_fn, exact_fn};
//! use geocoreset::{Point, SimplePolygon};
//!
//! let poly = SimplePolygon::new(vec![
//!     Point::new(0.0, 0.0), Point::new(4.0, 0.0), Point::new(4.0, 4.0),
//!     Point::new(2.0, 4.0), Point::new(2.0, 2.0), Point::new(0.0, 2.0),
//! ])?;
//! let points = [Point::new(1.0, 1.0), Point::new(3.0, 3.0), Point::new(3.0, 0.5)];
//! let coreset = build_coreset(&poly, &points, 0.2)?;
//! let q = Point::new(0.5, 0.5);
//! let near = approx_fn(&poly, &coreset, q)?;
//! let exact = exact_fn(&poly, &points, q)?;
//! assert!(near.distance >= 0.8 * exact.distance);
//! # Ok::<(), geocoreset::Error>(())
//! ```

pub mod coreset;
pub mod diameter;
pub mod error;
pub mod fixtures;
pub mod geodesic;
pub mod kernel;
pub mod query;
pub mod tolerance;

pub use error::{Error, Result};
pub use kernel::{DirectionArc, Point, Segment, SimplePolygon};
