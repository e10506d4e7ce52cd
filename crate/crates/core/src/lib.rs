//! Exact branch-and-cut for optimizing two linear fractional utilities over
//! the efficient set of a multiobjective integer linear fractional program.
//!
//! All arithmetic is exact. The main entry point is [`bcut::run`]; the
//! brute-force [`oracle`] computes the same set by enumeration.

pub mod bcut;
pub mod efficiency;
pub mod error;
pub mod fixtures;
pub mod lfp;
pub mod lp;
pub mod milp;
pub mod model;
pub mod oracle;
pub mod rational;
pub mod toolkit;

pub use error::{Error, Result};
pub use model::{AffineForm, FractionalObjective, IntegerPoint, ObjectiveVector, ProblemInstance};
pub use rational::Rational;
