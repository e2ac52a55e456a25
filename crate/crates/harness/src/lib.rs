//! Experiment harness for `geocoreset`: instance generators, JSON and CSV
//! formats, verification and benchmark reports, SVG rendering, and the
//! `geocoreset` command-line tool.

pub mod cli;
pub mod error;
pub mod gen;
pub mod instance;
pub mod render;
pub mod report;

pub use error::{HarnessError, Result};
pub use gen::{gen_instance, gen_points, gen_polygon, PolygonKind};
pub use instance::{CoresetFile, Instance};
