//! Depth-first branch-and-bound for mixed-integer linear programs.
//!
//! Each child inherits its parent's optimal tableau, appends the branching
//! bound as a new row and restores feasibility with the dual simplex.

use crate::error::{Error, Result};
use crate::lp::{Constraint, Relation, StandardLp, Tableau};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MilpProblem {
    pub lp: StandardLp,
    /// One flag per structural variable.
    pub integer: Vec<bool>,
}

#[derive(Debug, Clone, Default)]
pub struct MilpOptions {
    /// Stop as soon as an integer-feasible point with value `> 0` is found.
    pub stop_at_positive: bool,
    /// Known feasible point (structural values) and its value.
    pub incumbent: Option<(Vec<Rational>, Rational)>,
    pub node_limit: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MilpStatus {
    Optimal,
    /// A positive point was found and the search stopped early.
    Positive,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MilpResult {
    pub status: MilpStatus,
    pub point: Option<Vec<Rational>>,
    pub value: Option<Rational>,
    pub nodes: usize,
    /// Incumbent values in the order they were accepted.
    pub incumbent_trace: Vec<Rational>,
}

pub fn solve_milp(p: &MilpProblem) -> Result<MilpResult> {
    solve_milp_with(p, &MilpOptions::default())
}

fn first_fractional(values: &[Rational], mask: &[bool]) -> Option<usize> {
    mask.iter()
        .zip(values)
        .position(|(&int, v)| int && !v.is_integer())
}

pub fn solve_milp_with(p: &MilpProblem, opts: &MilpOptions) -> Result<MilpResult> {
    let n = p.lp.domain.n;
    if p.integer.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: p.integer.len(),
        });
    }
    let c = &p.lp.objective;
    let mut incumbent = opts.incumbent.clone();
    let mut trace: Vec<Rational> = incumbent.iter().map(|(_, v)| v.clone()).collect();
    let mut nodes = 0usize;

    let Some(mut root) = Tableau::feasible(&p.lp.domain) else {
        return Ok(finish(MilpStatus::Infeasible, incumbent, nodes, trace));
    };
    if !root.maximize(&c.coeffs) {
        return Err(Error::UnboundedRelaxation);
    }
    let mut stack: Vec<Tableau> = vec![root];
    while let Some(t) = stack.pop() {
        nodes += 1;
        if let Some(limit) = opts.node_limit {
            if nodes > limit {
                return Err(Error::NodeLimit(limit));
            }
        }
        let values = t.values();
        let bound = c.eval(&values);
        if let Some((_, best)) = &incumbent {
            if bound <= *best {
                continue;
            }
        }
        match first_fractional(&values[..n], &p.integer) {
            None => {
                incumbent = Some((values[..n].to_vec(), bound.clone()));
                trace.push(bound.clone());
                if opts.stop_at_positive && bound.is_positive() {
                    return Ok(finish(MilpStatus::Positive, incumbent, nodes, trace));
                }
            }
            Some(j) => {
                let v = &values[j];
                let floor = Rational::from(v.floor());
                let ceil = Rational::from(v.ceil());
                for row in [
                    Constraint::bound(j, Relation::Ge, ceil),
                    Constraint::bound(j, Relation::Le, floor),
                ] {
                    if let Some(child) = branch(&t, &row, &c.coeffs) {
                        stack.push(child);
                    }
                }
            }
        }
    }
    let status = if incumbent.is_some() {
        MilpStatus::Optimal
    } else {
        MilpStatus::Infeasible
    };
    Ok(finish(status, incumbent, nodes, trace))
}

fn branch(parent: &Tableau, row: &Constraint, c: &[Rational]) -> Option<Tableau> {
    let mut t = parent.clone();
    t.add_row(row);
    if !t.dual_simplex(c) {
        return None;
    }
    // The dual simplex ends optimal; this only confirms it.
    let bounded = t.maximize(c);
    debug_assert!(bounded);
    Some(t)
}

fn finish(
    status: MilpStatus,
    incumbent: Option<(Vec<Rational>, Rational)>,
    nodes: usize,
    incumbent_trace: Vec<Rational>,
) -> MilpResult {
    let (point, value) = match incumbent {
        Some((p, v)) => (Some(p), Some(v)),
        None => (None, None),
    };
    MilpResult {
        status,
        point,
        value,
        nodes,
        incumbent_trace,
    }
}
