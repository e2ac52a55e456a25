//! Exact and coreset-based furthest-neighbor queries, query sampling, and
//! the verification report.

mod engine;
mod verify;

pub use engine::{approx_fn, exact_fn, sample_point, sample_points, QueryEngine, QueryResult};
pub use verify::{lemma_checks, verify_instance, Branch, LemmaCheck, LemmaTally, QueryRecord, VerificationReport};
