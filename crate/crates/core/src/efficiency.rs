//! Efficiency tests for integer points.
//!
//! For objectives `Z_i = (c^i x + c^i_0)/(d^i x + d^i_0)` and a feasible `x*`,
//! the test program maximizes `Σ ψ_i` subject to
//! `[c^i − Z_i(x*) d^i] x − ψ_i = Z_i(x*) d^i_0 − c^i_0`, `x ∈ D`, `ψ ≥ 0`.
//! Its optimum is zero exactly when `x*` is efficient; a positive solution
//! yields a dominating point.

use log::debug;

use crate::error::{Error, Result};
use crate::lp::{Constraint, Domain, Relation, StandardLp};
use crate::milp::{solve_milp_with, MilpOptions, MilpProblem, MilpStatus};
use crate::model::{evaluate, AffineForm, FractionalObjective, IntegerPoint, ProblemInstance};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EfficiencyVerdict {
    pub moilfp_efficient: bool,
    pub boilfp_efficient: bool,
    /// A point dominating the tested one for the criteria, if any.
    pub moilfp_witness: Option<IntegerPoint>,
    /// A point dominating the tested one for the utilities, if any.
    pub boilfp_witness: Option<IntegerPoint>,
}

impl EfficiencyVerdict {
    pub fn both(&self) -> bool {
        self.moilfp_efficient && self.boilfp_efficient
    }

    /// The first available witness.
    pub fn witness(&self) -> Option<&IntegerPoint> {
        self.moilfp_witness.as_ref().or(self.boilfp_witness.as_ref())
    }
}

fn build_test(
    instance: &ProblemInstance,
    objectives: &[FractionalObjective],
    x: &IntegerPoint,
) -> Result<MilpProblem> {
    if !instance.contains(x) {
        return Err(Error::InfeasiblePoint(x.to_string()));
    }
    let n = instance.n();
    let k = objectives.len();
    let base = instance.base_domain();
    let mut rows: Vec<Constraint> = base.rows;
    for (i, obj) in objectives.iter().enumerate() {
        let z = evaluate(obj, x)?;
        let mut coeffs: Vec<Rational> = obj
            .numerator
            .coeffs
            .iter()
            .zip(&obj.denominator.coeffs)
            .map(|(c, d)| c - &z * d)
            .collect();
        coeffs.resize(n + k, Rational::zero());
        coeffs[n + i] = -Rational::one();
        let rhs = &z * &obj.denominator.constant - &obj.numerator.constant;
        rows.push(Constraint::new(coeffs, Relation::Eq, rhs));
    }
    let mut c = vec![Rational::zero(); n + k];
    for v in &mut c[n..] {
        *v = Rational::one();
    }
    let mut integer = vec![true; n];
    integer.resize(n + k, false);
    Ok(MilpProblem {
        lp: StandardLp {
            domain: Domain::new(n + k, rows),
            objective: AffineForm::new(c, Rational::zero()),
        },
        integer,
    })
}

/// The test program for the `k` criteria at `x`.
pub fn build_mm(instance: &ProblemInstance, x: &IntegerPoint) -> Result<MilpProblem> {
    build_test(instance, &instance.criteria, x)
}

/// The test program for the two utilities at `x`.
pub fn build_t2(instance: &ProblemInstance, x: &IntegerPoint) -> Result<MilpProblem> {
    build_test(instance, &instance.utility, x)
}

/// Outcome of one test program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestOutcome {
    /// Optimal value, or the first positive value found when stopping early.
    pub value: Rational,
    pub witness: Option<IntegerPoint>,
    pub nodes: usize,
}

impl TestOutcome {
    pub fn efficient(&self) -> bool {
        self.value.is_zero()
    }
}

/// Runs a test program. With `exact`, the search runs to optimality instead
/// of stopping at the first positive point.
pub fn run_test(problem: &MilpProblem, x: &IntegerPoint, exact: bool) -> Result<TestOutcome> {
    let n = x.dim();
    let mut start = x.to_rationals();
    start.resize(problem.lp.domain.n, Rational::zero());
    let opts = MilpOptions {
        stop_at_positive: !exact,
        incumbent: Some((start, Rational::zero())),
        node_limit: None,
    };
    let res = solve_milp_with(problem, &opts)?;
    debug_assert!(res.status != MilpStatus::Infeasible);
    let value = res.value.unwrap_or_default();
    let witness = if value.is_positive() {
        let pt = res.point.as_ref().map(|p| &p[..n]).unwrap_or_default();
        Some(IntegerPoint::from_rationals(pt)?)
    } else {
        None
    };
    Ok(TestOutcome {
        value,
        witness,
        nodes: res.nodes,
    })
}

/// Both tests at `x`.
pub fn is_in_solution_set(instance: &ProblemInstance, x: &IntegerPoint) -> Result<EfficiencyVerdict> {
    let mm = run_test(&build_mm(instance, x)?, x, false)?;
    let t2 = run_test(&build_t2(instance, x)?, x, false)?;
    Ok(EfficiencyVerdict {
        moilfp_efficient: mm.efficient(),
        boilfp_efficient: t2.efficient(),
        moilfp_witness: mm.witness,
        boilfp_witness: t2.witness,
    })
}

/// Like [`is_in_solution_set`] but skips the criteria test once the utility
/// test fails; `moilfp_efficient` is then reported as `false`.
pub(crate) fn passes_both(instance: &ProblemInstance, x: &IntegerPoint) -> Result<EfficiencyVerdict> {
    let t2 = run_test(&build_t2(instance, x)?, x, false)?;
    if !t2.efficient() {
        debug!("{x} fails the utility test, witness {:?}", t2.witness);
        return Ok(EfficiencyVerdict {
            moilfp_efficient: false,
            boilfp_efficient: false,
            moilfp_witness: None,
            boilfp_witness: t2.witness,
        });
    }
    let mm = run_test(&build_mm(instance, x)?, x, false)?;
    Ok(EfficiencyVerdict {
        moilfp_efficient: mm.efficient(),
        boilfp_efficient: true,
        moilfp_witness: mm.witness,
        boilfp_witness: None,
    })
}
