use std::fmt;

use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

/// Which objective family an index refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjectiveRef {
    /// Index into the `k` criteria.
    Criterion(usize),
    /// Index into the two utility functions.
    Utility(usize),
}

impl fmt::Display for ObjectiveRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectiveRef::Criterion(i) => write!(f, "criterion Z{}", i + 1),
            ObjectiveRef::Utility(i) => write!(f, "utility f{}", i + 1),
        }
    }
}

/// A modelling assumption that an instance fails to satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Assumption {
    EmptyFeasibleSet,
    UnboundedVariable(usize),
    NonPositiveDenominator {
        objective: ObjectiveRef,
        minimum: Rational,
    },
    TooFewCriteria(usize),
}

impl fmt::Display for Assumption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Assumption::EmptyFeasibleSet => write!(f, "no integer feasible point"),
            Assumption::UnboundedVariable(j) => write!(f, "x{} has no finite upper bound", j + 1),
            Assumption::NonPositiveDenominator { objective, minimum } => {
                write!(f, "denominator of {objective} reaches {minimum} over the feasible region")
            }
            Assumption::TooFewCriteria(k) => write!(f, "need at least 2 criteria, found {k}"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("denominator evaluates to zero")]
    ZeroDenominator,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("simplex state is not optimal")]
    NotOptimal,
    #[error("feasible region is unbounded")]
    UnboundedDomain,
    #[error("linear relaxation is unbounded")]
    UnboundedRelaxation,
    #[error("denominator is not positive at a visited vertex: {0}")]
    NonPositiveDenominator(Rational),
    #[error("point {0} is not feasible")]
    InfeasiblePoint(String),
    #[error("point is not integral")]
    NonIntegerPoint,
    #[error("all components are integral")]
    AllInteger,
    #[error("assumption violated: {0}")]
    AssumptionViolated(Assumption),
    #[error("enumeration budget exceeded: box holds {candidates} candidates, budget is {budget}")]
    EnumerationBudgetExceeded { candidates: String, budget: u64 },
    #[error("instance generation failed after {0} attempts")]
    GenerationFailed(usize),
    #[error("parse error at line {line}, field `{field}`: {message}")]
    Parse {
        line: usize,
        field: String,
        message: String,
    },
    #[error("node limit of {0} reached")]
    NodeLimit(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
