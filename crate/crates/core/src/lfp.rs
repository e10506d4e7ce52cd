//! Maximizing one ratio of affine forms over a polyhedron.
//!
//! [`solve_lfp`] walks vertices along nonbasic directions with a positive
//! fractional reduced gradient. [`solve_lfp_cc`] solves the same problem as a
//! linear program after the Charnes–Cooper change of variables and exists to
//! cross-check the first.

use crate::error::{Error, Result};
use crate::lp::{solve_lp, Constraint, Domain, LpStatus, Relation, SimplexState, StandardLp, Tableau, TieBreak};
use crate::model::{AffineForm, FractionalObjective};
use crate::rational::Rational;

/// Consecutive degenerate pivots tolerated before the leaving rule switches
/// to smallest basic index.
const DEGENERATE_STREAK: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LfpResult {
    pub status: LpStatus,
    /// Structural part of the optimal vertex; empty when infeasible.
    pub point: Vec<Rational>,
    pub value: Option<Rational>,
    pub state: SimplexState,
}

impl LfpResult {
    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

fn numerator_denominator(t: &Tableau, obj: &FractionalObjective) -> (Rational, Rational) {
    let z = t.values();
    (obj.numerator.eval(&z), obj.denominator.eval(&z))
}

/// `Q ν − P μ` over every column (zero on basic columns).
fn gradient_all(t: &Tableau, obj: &FractionalObjective) -> Result<Vec<Rational>> {
    let (p, q) = numerator_denominator(t, obj);
    if !q.is_positive() {
        return Err(Error::NonPositiveDenominator(q));
    }
    let nu = t.reduced_costs(&obj.numerator.coeffs);
    let mu = t.reduced_costs(&obj.denominator.coeffs);
    Ok(nu
        .iter()
        .zip(&mu)
        .map(|(n, m)| &q * n - &p * m)
        .collect())
}

/// Maximizes `obj` over `domain`.
pub fn solve_lfp(domain: &Domain, obj: &FractionalObjective) -> Result<LfpResult> {
    let Some(t) = Tableau::feasible(domain) else {
        return Ok(LfpResult {
            status: LpStatus::Infeasible,
            point: Vec::new(),
            value: None,
            state: SimplexState::new(LpStatus::Infeasible, domain.n, empty_tableau(domain)),
        });
    };
    lfp_from(t, domain.n, obj)
}

fn empty_tableau(domain: &Domain) -> Tableau {
    // Phase 1 on an empty row set always succeeds.
    Tableau::feasible(&Domain::new(domain.n, Vec::new())).expect("empty row set is feasible")
}

pub(crate) fn lfp_from(mut t: Tableau, n: usize, obj: &FractionalObjective) -> Result<LfpResult> {
    let mut streak = 0usize;
    let mut last: Option<Rational> = None;
    loop {
        let grad = gradient_all(&t, obj)?;
        let (p, q) = numerator_denominator(&t, obj);
        let value = p / q;
        if let Some(prev) = &last {
            assert!(value >= *prev, "ratio decreased from {prev} to {value}");
        }
        last = Some(value);
        let basic = t.basic_mask();
        let Some(j) = (0..t.ncols()).find(|&j| !basic[j] && grad[j].is_positive()) else {
            break;
        };
        let tie = if streak >= DEGENERATE_STREAK {
            TieBreak::SmallestBasic
        } else {
            TieBreak::LastRow
        };
        let Some(i) = t.ratio_test(j, tie) else {
            return Err(Error::UnboundedDomain);
        };
        if t.rhs(i).is_zero() {
            streak += 1;
        } else {
            streak = 0;
        }
        t.pivot(i, j);
    }
    let state = SimplexState::new(LpStatus::Optimal, n, t);
    let point = state.point();
    Ok(LfpResult {
        status: LpStatus::Optimal,
        value: Some(obj.eval(&state.values())?),
        point,
        state,
    })
}

/// Fractional reduced gradient `Q(x)ν − P(x)μ` of `obj` over the nonbasic
/// variables in ascending index order.
pub fn fractional_gradient(state: &SimplexState, obj: &FractionalObjective) -> Result<Vec<Rational>> {
    if !state.is_optimal() {
        return Err(Error::NotOptimal);
    }
    let all = gradient_all(&state.tableau, obj)?;
    Ok(state.nonbasis().into_iter().map(|j| all[j].clone()).collect())
}

/// Optimal value via the Charnes–Cooper linear program, or `None` when the
/// domain is empty.
pub fn solve_lfp_cc(domain: &Domain, obj: &FractionalObjective) -> Result<Option<Rational>> {
    if Tableau::feasible(domain).is_none() {
        return Ok(None);
    }
    let (mat, rhs) = domain.standard_form();
    let nv = domain.var_count();
    let pad = |f: &AffineForm| -> Vec<Rational> {
        let mut v = f.coeffs.clone();
        v.resize(nv, Rational::zero());
        v
    };
    // Variables w_0..w_{nv-1} = t·z and t.
    let mut rows: Vec<Constraint> = mat
        .into_iter()
        .zip(rhs)
        .map(|(mut r, b)| {
            r.push(-b);
            Constraint::new(r, Relation::Eq, Rational::zero())
        })
        .collect();
    let mut norm = pad(&obj.denominator);
    norm.push(obj.denominator.constant.clone());
    rows.push(Constraint::new(norm, Relation::Eq, Rational::one()));
    let mut c = pad(&obj.numerator);
    c.push(obj.numerator.constant.clone());
    let lp = StandardLp {
        domain: Domain::new(nv + 1, rows),
        objective: AffineForm::new(c, Rational::zero()),
    };
    let state = solve_lp(&lp);
    match state.status {
        LpStatus::Optimal => Ok(Some(lp.objective.eval(&state.values()))),
        LpStatus::Unbounded => Err(Error::UnboundedDomain),
        LpStatus::Infeasible => Ok(None),
    }
}
