//! Ground truth that does not go through the constraint stacks, plus graph
//! generators for tests and benchmarks.

mod brute;
mod fcoloring;
mod generate;

pub use brute::{brute_planar, rotation_count, ROTATION_LIMIT};
pub use fcoloring::check_strong_fcoloring;
pub use generate::{generate, subdivide, GenSpec};
