//! Instance validation, file format, random generation and benchmarking.

pub mod bench;
pub mod format;
pub mod generator;
pub mod validate;
