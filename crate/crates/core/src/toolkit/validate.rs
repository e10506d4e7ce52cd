//! Certifying the modelling assumptions of an instance.

use crate::error::{Assumption, Error, ObjectiveRef, Result};
use crate::lp::{solve_lp, LpStatus, StandardLp};
use crate::milp::{solve_milp, MilpProblem, MilpStatus};
use crate::model::{AffineForm, IntegerPoint, ProblemInstance};
use crate::rational::Rational;

/// Evidence that an instance satisfies every assumption.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// `max x_j` over the continuous region.
    pub upper_bounds: Vec<Rational>,
    /// Minimum of each denominator over the continuous region.
    pub denominator_minima: Vec<(ObjectiveRef, Rational)>,
    /// Some integer feasible point.
    pub feasible_point: IntegerPoint,
}

fn maximize(instance: &ProblemInstance, objective: AffineForm) -> Result<Option<Rational>> {
    let s = solve_lp(&StandardLp {
        domain: instance.base_domain(),
        objective: objective.clone(),
    });
    match s.status {
        LpStatus::Optimal => Ok(Some(objective.eval(&s.values()))),
        LpStatus::Infeasible => Ok(None),
        LpStatus::Unbounded => Err(Error::UnboundedDomain),
    }
}

fn violated(a: Assumption) -> Error {
    Error::AssumptionViolated(a)
}

pub fn validate_instance(instance: &ProblemInstance) -> Result<Certificate> {
    let n = instance.n();
    let mut upper_bounds = Vec::with_capacity(n);
    for j in 0..n {
        let mut c = vec![Rational::zero(); n];
        c[j] = Rational::one();
        match maximize(instance, AffineForm::new(c, Rational::zero())) {
            Ok(Some(v)) => upper_bounds.push(v),
            Ok(None) => return Err(violated(Assumption::EmptyFeasibleSet)),
            Err(Error::UnboundedDomain) => return Err(violated(Assumption::UnboundedVariable(j))),
            Err(e) => return Err(e),
        }
    }

    let objectives = instance
        .criteria
        .iter()
        .enumerate()
        .map(|(i, o)| (ObjectiveRef::Criterion(i), o))
        .chain(
            instance
                .utility
                .iter()
                .enumerate()
                .map(|(i, o)| (ObjectiveRef::Utility(i), o)),
        );
    let mut denominator_minima = Vec::new();
    for (which, obj) in objectives {
        let d = &obj.denominator;
        let neg = AffineForm::new(d.coeffs.iter().map(|c| -c).collect(), -&d.constant);
        let minimum = -maximize(instance, neg)?.ok_or(violated(Assumption::EmptyFeasibleSet))?;
        if !minimum.is_positive() {
            return Err(violated(Assumption::NonPositiveDenominator {
                objective: which,
                minimum,
            }));
        }
        denominator_minima.push((which, minimum));
    }

    let res = solve_milp(&MilpProblem {
        lp: StandardLp {
            domain: instance.base_domain(),
            objective: AffineForm::new(vec![Rational::zero(); n], Rational::zero()),
        },
        integer: vec![true; n],
    })?;
    let feasible_point = match (res.status, res.point) {
        (MilpStatus::Infeasible, _) | (_, None) => {
            return Err(violated(Assumption::EmptyFeasibleSet))
        }
        (_, Some(p)) => IntegerPoint::from_rationals(&p)?,
    };
    Ok(Certificate {
        upper_bounds,
        denominator_minima,
        feasible_point,
    })
}
