//! Branch-and-cut over the efficient set.
//!
//! Each node maximizes the driving utility over its subdomain. Fractional
//! optima are split on the first fractional variable. Integer optima are
//! tested for efficiency and then cut off by one or two covering rows over
//! nonbasic variables; an empty index set fathoms the node.

use std::collections::VecDeque;
use std::fmt;

use log::{debug, info};

use crate::efficiency::{passes_both, EfficiencyVerdict};
use crate::error::{Error, Result};
use crate::lfp::{fractional_gradient, solve_lfp};
use crate::lp::{Constraint, Domain, Relation, SimplexState};
use crate::model::{dominates, IntegerPoint, ObjectiveVector, ProblemInstance};
use crate::rational::Rational;
use crate::toolkit::validate::validate_instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Dfs,
    Bfs,
}

/// Which utility is maximized at every node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DrivingObjective {
    #[default]
    F1,
    F2,
}

impl DrivingObjective {
    fn index(self) -> usize {
        match self {
            DrivingObjective::F1 => 0,
            DrivingObjective::F2 => 1,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    pub strategy: Strategy,
    pub objective: DrivingObjective,
    pub max_nodes: Option<usize>,
}

/// A subdomain: the base rows plus `extra_rows`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchNode {
    pub id: usize,
    pub parent: Option<usize>,
    pub depth: usize,
    pub extra_rows: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeAction {
    Branch {
        var: usize,
        floor: Rational,
        children: (usize, usize),
    },
    Cut {
        child: usize,
    },
    FathomInfeasible,
    FathomEmptyH,
    FathomEmptyHprime,
}

impl fmt::Display for NodeAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeAction::Branch { .. } => f.write_str("branch"),
            NodeAction::Cut { .. } => f.write_str("cut"),
            NodeAction::FathomInfeasible => f.write_str("fathom-infeasible"),
            NodeAction::FathomEmptyH => f.write_str("fathom-empty-H"),
            NodeAction::FathomEmptyHprime => f.write_str("fathom-empty-H'"),
        }
    }
}

/// One processed node. Variable indices are 0-based over the node's full
/// variable space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeRecord {
    pub id: usize,
    pub parent: Option<usize>,
    pub depth: usize,
    pub action: NodeAction,
    pub point: Option<Vec<Rational>>,
    pub value: Option<Rational>,
    pub nonbasis: Vec<usize>,
    pub h: Vec<usize>,
    pub h_prime: Vec<usize>,
    pub verdict: Option<EfficiencyVerdict>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub point: IntegerPoint,
    pub criteria: ObjectiveVector,
    pub utility: ObjectiveVector,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FathomCounts {
    pub infeasible: usize,
    pub empty_h: usize,
    pub empty_h_prime: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    /// In order of discovery.
    pub solutions: Vec<Solution>,
    pub nodes_processed: usize,
    pub fathomed: FathomCounts,
    pub edges: Vec<(usize, usize)>,
    /// In processing order.
    pub trace: Vec<NodeRecord>,
}

impl SearchReport {
    pub fn points(&self) -> Vec<IntegerPoint> {
        self.solutions.iter().map(|s| s.point.clone()).collect()
    }

    pub fn record(&self, id: usize) -> Option<&NodeRecord> {
        self.trace.iter().find(|r| r.id == id)
    }
}

/// Smallest index with a fractional value.
pub fn select_branch_variable(point: &[Rational]) -> Result<usize> {
    point
        .iter()
        .position(|v| !v.is_integer())
        .ok_or(Error::AllInteger)
}

/// The two cut index sets at an integer optimum. `driving` names the utility
/// the node maximized; the other one plays the role of `f2`.
pub fn build_cut_sets(
    state: &SimplexState,
    instance: &ProblemInstance,
    driving: DrivingObjective,
) -> Result<(Vec<usize>, Vec<usize>)> {
    if !state.is_optimal() {
        return Err(Error::NotOptimal);
    }
    if state.point().iter().any(|v| !v.is_integer()) {
        return Err(Error::NonIntegerPoint);
    }
    let nonbasis = state.nonbasis();
    let lambdas = instance
        .criteria
        .iter()
        .map(|o| fractional_gradient(state, o))
        .collect::<Result<Vec<_>>>()?;
    let d = driving.index();
    let g_drive = fractional_gradient(state, &instance.utility[d])?;
    let g_other = fractional_gradient(state, &instance.utility[1 - d])?;
    let mut h = Vec::new();
    let mut h_prime = Vec::new();
    for (pos, &j) in nonbasis.iter().enumerate() {
        let any_pos = lambdas.iter().any(|l| l[pos].is_positive());
        let all_zero = lambdas.iter().all(|l| l[pos].is_zero());
        if any_pos || all_zero {
            h.push(j);
        }
        let o = &g_other[pos];
        if o.is_positive() || (o.is_zero() && g_drive[pos].is_zero()) {
            h_prime.push(j);
        }
    }
    Ok((h, h_prime))
}

/// Validates the instance, then searches.
pub fn run(instance: &ProblemInstance, opts: &SearchOptions) -> Result<SearchReport> {
    validate_instance(instance)?;
    run_unchecked(instance, opts)
}

/// Searches without validating the instance first.
pub fn run_unchecked(instance: &ProblemInstance, opts: &SearchOptions) -> Result<SearchReport> {
    let base = instance.base_domain();
    let n = instance.n();
    let drive = &instance.utility[opts.objective.index()];
    let mut open: VecDeque<SearchNode> = VecDeque::new();
    open.push_back(SearchNode {
        id: 0,
        parent: None,
        depth: 0,
        extra_rows: Vec::new(),
    });
    let mut next_id = 1usize;
    let mut report = SearchReport {
        solutions: Vec::new(),
        nodes_processed: 0,
        fathomed: FathomCounts::default(),
        edges: Vec::new(),
        trace: Vec::new(),
    };

    while let Some(node) = match opts.strategy {
        Strategy::Dfs => open.pop_back(),
        Strategy::Bfs => open.pop_front(),
    } {
        report.nodes_processed += 1;
        if let Some(limit) = opts.max_nodes {
            if report.nodes_processed > limit {
                return Err(Error::NodeLimit(limit));
            }
        }
        let mut domain: Domain = base.clone();
        domain.rows.extend(node.extra_rows.iter().cloned());
        let res = solve_lfp(&domain, drive)?;
        let mut rec = NodeRecord {
            id: node.id,
            parent: node.parent,
            depth: node.depth,
            action: NodeAction::FathomInfeasible,
            point: None,
            value: None,
            nonbasis: Vec::new(),
            h: Vec::new(),
            h_prime: Vec::new(),
            verdict: None,
        };
        if !res.is_optimal() {
            debug!("node {}: infeasible", node.id);
            report.fathomed.infeasible += 1;
            report.trace.push(rec);
            continue;
        }
        rec.point = Some(res.point.clone());
        rec.value = res.value.clone();
        rec.nonbasis = res.state.nonbasis();

        let child = |id: usize, row: Vec<Constraint>| {
            let mut extra_rows = node.extra_rows.clone();
            extra_rows.extend(row);
            SearchNode {
                id,
                parent: Some(node.id),
                depth: node.depth + 1,
                extra_rows,
            }
        };

        if let Ok(r) = select_branch_variable(&res.point) {
            let v = &res.point[r];
            let floor = Rational::from(v.floor());
            let ceil = Rational::from(v.ceil());
            let (lo, hi) = (next_id, next_id + 1);
            next_id += 2;
            debug!("node {}: x{} = {v} fractional, children {lo} and {hi}", node.id, r + 1);
            let lo_node = child(lo, vec![Constraint::bound(r, Relation::Le, floor.clone())]);
            let hi_node = child(hi, vec![Constraint::bound(r, Relation::Ge, ceil)]);
            match opts.strategy {
                Strategy::Dfs => {
                    open.push_back(hi_node);
                    open.push_back(lo_node);
                }
                Strategy::Bfs => {
                    open.push_back(lo_node);
                    open.push_back(hi_node);
                }
            }
            report.edges.push((node.id, lo));
            report.edges.push((node.id, hi));
            rec.action = NodeAction::Branch {
                var: r,
                floor,
                children: (lo, hi),
            };
            report.trace.push(rec);
            continue;
        }

        let x = IntegerPoint::from_rationals(&res.point[..n])?;
        let verdict = passes_both(instance, &x)?;
        narrate(instance, &report.solutions, &x, node.id)?;
        if verdict.both() && !report.solutions.iter().any(|s| s.point == x) {
            info!("node {}: {x} joins the solution set", node.id);
            report.solutions.push(Solution {
                criteria: instance.criteria_image(&x)?,
                utility: instance.utility_image(&x)?,
                point: x,
            });
        }
        rec.verdict = Some(verdict);

        let (h, h_prime) = build_cut_sets(&res.state, instance, opts.objective)?;
        debug!("node {}: H = {:?}, H' = {:?}", node.id, one_based(&h), one_based(&h_prime));
        rec.h = h.clone();
        rec.h_prime = h_prime.clone();
        if h.is_empty() {
            report.fathomed.empty_h += 1;
            rec.action = NodeAction::FathomEmptyH;
        } else if h_prime.is_empty() {
            report.fathomed.empty_h_prime += 1;
            rec.action = NodeAction::FathomEmptyHprime;
        } else {
            let mut cuts = vec![Constraint::covering(&h)];
            if h_prime != h {
                cuts.push(Constraint::covering(&h_prime));
            }
            let id = next_id;
            next_id += 1;
            open.push_back(child(id, cuts));
            report.edges.push((node.id, id));
            rec.action = NodeAction::Cut { child: id };
        }
        report.trace.push(rec);
    }
    Ok(report)
}

fn one_based(set: &[usize]) -> Vec<usize> {
    set.iter().map(|j| j + 1).collect()
}

fn narrate(
    instance: &ProblemInstance,
    found: &[Solution],
    x: &IntegerPoint,
    id: usize,
) -> Result<()> {
    if !log::log_enabled!(log::Level::Debug) {
        return Ok(());
    }
    let fx = instance.utility_image(x)?;
    for s in found {
        if dominates(&s.utility, &fx)? {
            debug!("node {id}: {x} is dominated by {}", s.point);
        } else if s.point != *x {
            debug!("node {id}: {x} is not dominated by {}", s.point);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::worked_example;
    use crate::rational::rat;

    fn pt(c: &[i64]) -> IntegerPoint {
        IntegerPoint::from_i64(c)
    }

    fn idx(one_based: &[usize]) -> Vec<usize> {
        one_based.iter().map(|j| j - 1).collect()
    }

    #[test]
    fn branch_variable_choice() {
        assert_eq!(select_branch_variable(&[rat(32, 7), rat(8, 7)]).unwrap(), 0);
        assert_eq!(select_branch_variable(&[rat(3, 1), rat(3, 4)]).unwrap(), 1);
        assert!(matches!(
            select_branch_variable(&[rat(1, 1), rat(2, 1), rat(3, 1)]),
            Err(Error::AllInteger)
        ));
    }

    #[test]
    fn worked_example_tree() {
        let inst = worked_example();
        let rep = run(&inst, &SearchOptions::default()).unwrap();
        assert_eq!(rep.points(), vec![pt(&[4, 1]), pt(&[1, 0]), pt(&[0, 0])]);
        let order: Vec<usize> = rep.trace.iter().map(|r| r.id).collect();
        assert_eq!(order, vec![0, 1, 3, 4, 6, 7, 8, 9, 5, 2]);
        let expect = [
            (1, [4, 1], vec![5], vec![5]),
            (4, [3, 0], vec![6, 7], vec![6]),
            (6, [2, 0], vec![7, 9], vec![9]),
            (7, [1, 0], vec![7, 10], vec![10]),
        ];
        for (id, p, h, hp) in expect {
            let r = rep.record(id).unwrap();
            assert_eq!(r.point.as_deref(), Some(&pt(&p).to_rationals()[..]), "node {id}");
            assert_eq!(r.h, idx(&h), "H at node {id}");
            assert_eq!(r.h_prime, idx(&hp), "H' at node {id}");
        }
        assert_eq!(rep.record(8).unwrap().point, Some(vec![rat(0, 1), rat(0, 1)]));
        for id in [2, 5, 9] {
            assert_eq!(rep.record(id).unwrap().action, NodeAction::FathomInfeasible);
        }
        assert_eq!(rep.fathomed.infeasible, 3);
    }

    #[test]
    fn order_and_objective_do_not_change_result() {
        let inst = worked_example();
        let mut expected = vec![pt(&[0, 0]), pt(&[1, 0]), pt(&[4, 1])];
        expected.sort();
        for strategy in [Strategy::Dfs, Strategy::Bfs] {
            for objective in [DrivingObjective::F1, DrivingObjective::F2] {
                let rep = run(&inst, &SearchOptions { strategy, objective, max_nodes: None }).unwrap();
                let mut got = rep.points();
                got.sort();
                assert_eq!(got, expected, "{strategy:?} {objective:?}");
            }
        }
    }

    #[test]
    fn single_point_domain() {
        let mut inst = worked_example();
        inst.a = vec![vec![rat(1, 1), rat(1, 1)], vec![rat(0, 1), rat(1, 1)]];
        inst.b = vec![rat(0, 1), rat(0, 1)];
        let rep = run(&inst, &SearchOptions::default()).unwrap();
        assert_eq!(rep.points(), vec![pt(&[0, 0])]);
    }

    #[test]
    fn cut_sets_need_integer_optimum() {
        let inst = worked_example();
        let res = solve_lfp(&inst.base_domain(), &inst.utility[0]).unwrap();
        assert!(matches!(
            build_cut_sets(&res.state, &inst, DrivingObjective::F1),
            Err(Error::NonIntegerPoint)
        ));
    }
}
