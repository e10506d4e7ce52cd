//! Exact two-phase primal simplex on dense rational tableaux.
//!
//! Variables are indexed `0..n` for the structural columns, followed by one
//! slack (for `≤`) or surplus (for `≥`) column per inequality row, in row
//! order. Rows may carry coefficients on the slack columns of earlier rows,
//! which is how cuts over nonbasic slacks are expressed.

use std::fmt;

use crate::error::{Error, Result};
use crate::model::AffineForm;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        })
    }
}

/// `coeffs · z (relation) rhs`, where `coeffs` may be shorter than the
/// variable space (missing entries are zero).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        Self {
            coeffs,
            relation,
            rhs,
        }
    }

    /// `z_j (relation) rhs`.
    pub fn bound(j: usize, relation: Relation, rhs: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); j + 1];
        coeffs[j] = Rational::one();
        Self::new(coeffs, relation, rhs)
    }

    /// `Σ_{j ∈ set} z_j ≥ 1`.
    pub fn covering(set: &[usize]) -> Self {
        let len = set.iter().max().map_or(0, |&j| j + 1);
        let mut coeffs = vec![Rational::zero(); len];
        for &j in set {
            coeffs[j] = Rational::one();
        }
        Self::new(coeffs, Relation::Ge, Rational::one())
    }

    /// Coefficient on variable `j`.
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn is_satisfied(&self, z: &[Rational]) -> bool {
        let lhs: Rational = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| c * z.get(j).cloned().unwrap_or_default())
            .sum();
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

/// A polyhedron `{x ≥ 0 : rows}` over `n` structural variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domain {
    pub n: usize,
    pub rows: Vec<Constraint>,
}

impl Domain {
    pub fn new(n: usize, rows: Vec<Constraint>) -> Self {
        Self { n, rows }
    }

    pub fn slack_count(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.relation != Relation::Eq)
            .count()
    }

    /// Structural plus slack/surplus variables.
    pub fn var_count(&self) -> usize {
        self.n + self.slack_count()
    }

    /// Index of the slack column that row `i` introduces, if any.
    pub fn slack_index(&self, i: usize) -> Option<usize> {
        if self.rows[i].relation == Relation::Eq {
            return None;
        }
        let before = self.rows[..i]
            .iter()
            .filter(|r| r.relation != Relation::Eq)
            .count();
        Some(self.n + before)
    }

    pub fn push(&mut self, row: Constraint) {
        self.rows.push(row);
    }

    pub fn with_row(&self, row: Constraint) -> Self {
        let mut d = self.clone();
        d.push(row);
        d
    }

    /// Completes structural values `x` with the implied slack values.
    pub fn extend_point(&self, x: &[Rational]) -> Vec<Rational> {
        let mut z: Vec<Rational> = x.to_vec();
        z.resize(self.n, Rational::zero());
        for row in &self.rows {
            if row.relation == Relation::Eq {
                continue;
            }
            let lhs: Rational = row
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| c * &z[j])
                .sum();
            z.push(match row.relation {
                Relation::Le => &row.rhs - lhs,
                _ => lhs - &row.rhs,
            });
        }
        z
    }

    /// Whether structural point `x ≥ 0` satisfies every row.
    pub fn contains(&self, x: &[Rational]) -> bool {
        if x.len() != self.n || x.iter().any(Rational::is_negative) {
            return false;
        }
        let z = self.extend_point(x);
        z.iter().all(|v| !v.is_negative()) && self.rows.iter().all(|r| r.is_satisfied(&z))
    }

    /// Equality-form matrix over all variables, with right-hand sides.
    pub fn standard_form(&self) -> (Vec<Vec<Rational>>, Vec<Rational>) {
        let nv = self.var_count();
        let mut next_slack = self.n;
        let mut mat = Vec::with_capacity(self.rows.len());
        let mut rhs = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let mut r = vec![Rational::zero(); nv];
            for (j, c) in row.coeffs.iter().enumerate() {
                assert!(j < nv, "row references variable {j} outside the space");
                r[j] += c;
            }
            match row.relation {
                Relation::Le => {
                    r[next_slack] += Rational::one();
                    next_slack += 1;
                }
                Relation::Ge => {
                    r[next_slack] -= Rational::one();
                    next_slack += 1;
                }
                Relation::Eq => {}
            }
            mat.push(r);
            rhs.push(row.rhs.clone());
        }
        (mat, rhs)
    }
}

/// A linear program `max objective(z)` over a domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardLp {
    pub domain: Domain,
    pub objective: AffineForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Dense tableau `[B⁻¹A | B⁻¹b]` over the real columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    ncols: usize,
}

/// Rule for breaking ties in the minimum ratio test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TieBreak {
    LastRow,
    SmallestBasic,
    LargestBasic,
}

impl Tableau {
    /// Phase 1: a feasible basis for the domain, or `None` if it is empty.
    pub(crate) fn feasible(domain: &Domain) -> Option<Tableau> {
        let (mat, rhs) = domain.standard_form();
        let m = mat.len();
        let nreal = domain.var_count();
        let mut rows: Vec<Vec<Rational>> = mat
            .into_iter()
            .zip(rhs)
            .map(|(mut r, b)| {
                if b.is_negative() {
                    for v in r.iter_mut() {
                        *v = -&*v;
                    }
                    r.push(-b);
                } else {
                    r.push(b);
                }
                r
            })
            .collect();

        let mut basis: Vec<Option<usize>> = vec![None; m];
        for i in 0..m {
            if let Some(s) = domain.slack_index(i) {
                let unit = rows[i][s] == Rational::one()
                    && (0..m).all(|k| k == i || rows[k][s].is_zero());
                if unit {
                    basis[i] = Some(s);
                }
            }
        }
        let art_rows: Vec<usize> = (0..m).filter(|&i| basis[i].is_none()).collect();
        let ncols = nreal + art_rows.len();
        for r in rows.iter_mut() {
            let b = r.pop().unwrap_or_default();
            r.resize(ncols, Rational::zero());
            r.push(b);
        }
        for (a, &i) in art_rows.iter().enumerate() {
            rows[i][nreal + a] = Rational::one();
            basis[i] = Some(nreal + a);
        }
        let mut t = Tableau {
            rows,
            basis: basis.into_iter().map(|b| b.unwrap_or_default()).collect(),
            ncols,
        };

        if !art_rows.is_empty() {
            let mut cost = vec![Rational::zero(); ncols];
            for c in &mut cost[nreal..] {
                *c = -Rational::one();
            }
            loop {
                let red = t.reduced_costs(&cost);
                let basic = t.basic_mask();
                let entering = (0..nreal).rev().find(|&j| !basic[j] && red[j].is_positive());
                let Some(j) = entering else { break };
                let i = t
                    .ratio_test(j, TieBreak::LargestBasic)
                    .expect("phase 1 objective is bounded");
                t.pivot(i, j);
            }
            let infeasible = (0..t.rows.len())
                .any(|i| t.basis[i] >= nreal && !t.rhs(i).is_zero());
            if infeasible {
                return None;
            }
            for i in 0..t.rows.len() {
                if t.basis[i] >= nreal {
                    let basic = t.basic_mask();
                    if let Some(j) = (0..nreal).find(|&j| !basic[j] && !t.rows[i][j].is_zero()) {
                        t.pivot(i, j);
                    }
                }
            }
            let keep: Vec<bool> = t.basis.iter().map(|&b| b < nreal).collect();
            let mut k = 0;
            t.rows.retain(|_| {
                k += 1;
                keep[k - 1]
            });
            t.basis.retain(|&b| b < nreal);
            for r in t.rows.iter_mut() {
                r.drain(nreal..ncols);
            }
            t.ncols = nreal;
        }
        Some(t)
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Basic variable of each row.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    /// Sorted nonbasic variables.
    pub fn nonbasis(&self) -> Vec<usize> {
        let basic = self.basic_mask();
        (0..self.ncols).filter(|&j| !basic[j]).collect()
    }

    /// Entry `(B⁻¹A)_{ij}`.
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    /// `(B⁻¹b)_i`.
    pub fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.ncols]
    }

    pub fn basic_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.ncols];
        for &b in &self.basis {
            mask[b] = true;
        }
        mask
    }

    /// Current basic solution over all columns.
    pub fn values(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.ncols];
        for (i, &b) in self.basis.iter().enumerate() {
            v[b] = self.rhs(i).clone();
        }
        v
    }

    /// `c − c_B B⁻¹A` over all columns; `c` may be shorter than the space.
    pub fn reduced_costs(&self, c: &[Rational]) -> Vec<Rational> {
        let mut red: Vec<Rational> = (0..self.ncols)
            .map(|j| c.get(j).cloned().unwrap_or_default())
            .collect();
        for (i, &b) in self.basis.iter().enumerate() {
            let Some(cb) = c.get(b) else { continue };
            if cb.is_zero() {
                continue;
            }
            for (j, a) in self.rows[i][..self.ncols].iter().enumerate() {
                if !a.is_zero() {
                    red[j] -= cb * a;
                }
            }
        }
        red
    }

    /// Leaving row for entering column `j`, or `None` if the column is unbounded.
    pub(crate) fn ratio_test(&self, j: usize, tie: TieBreak) -> Option<usize> {
        let mut best: Option<(Rational, usize)> = None;
        for i in 0..self.rows.len() {
            let a = &self.rows[i][j];
            if !a.is_positive() {
                continue;
            }
            let ratio = self.rhs(i) / a;
            let better = match &best {
                None => true,
                Some((r, k)) => match ratio.cmp(r) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Greater => false,
                    std::cmp::Ordering::Equal => match tie {
                        TieBreak::LastRow => true,
                        TieBreak::SmallestBasic => self.basis[i] < self.basis[*k],
                        TieBreak::LargestBasic => self.basis[i] > self.basis[*k],
                    },
                },
            };
            if better {
                best = Some((ratio, i));
            }
        }
        best.map(|(_, i)| i)
    }

    pub(crate) fn pivot(&mut self, i: usize, j: usize) {
        let mut prow = std::mem::take(&mut self.rows[i]);
        let pv = prow[j].clone();
        if pv != Rational::one() {
            for v in prow.iter_mut() {
                if !v.is_zero() {
                    *v = &*v / &pv;
                }
            }
        }
        let support: Vec<usize> = (0..prow.len()).filter(|&c| !prow[c].is_zero()).collect();
        for (k, row) in self.rows.iter_mut().enumerate() {
            if k == i || row[j].is_zero() {
                continue;
            }
            let f = row[j].clone();
            for &c in &support {
                row[c] = row[c].sub_mul(&f, &prow[c]);
            }
        }
        self.rows[i] = prow;
        self.basis[i] = j;
    }

    /// Appends a row `coeffs · z (relation) rhs` together with its new slack
    /// column, expressed in the current basis. The slack is basic in the new
    /// row, so the result may be primal infeasible.
    pub(crate) fn add_row(&mut self, row: &Constraint) {
        assert!(row.relation != Relation::Eq, "only inequality rows can be appended");
        let s = self.ncols;
        self.ncols += 1;
        for r in self.rows.iter_mut() {
            let rhs = r.pop().unwrap_or_default();
            r.push(Rational::zero());
            r.push(rhs);
        }
        // Le: a z + s = b  =>  s = b - a z.  Ge: a z - s = b  =>  -s = b - a z.
        let sign = if row.relation == Relation::Le {
            Rational::one()
        } else {
            -Rational::one()
        };
        let mut new = vec![Rational::zero(); self.ncols + 1];
        for (j, c) in row.coeffs.iter().enumerate() {
            if !c.is_zero() {
                new[j] = &sign * c;
            }
        }
        new[s] = Rational::one();
        new[self.ncols] = &sign * &row.rhs;
        for (i, &b) in self.basis.iter().enumerate() {
            let f = new[b].clone();
            if f.is_zero() {
                continue;
            }
            for (c, a) in self.rows[i].iter().enumerate() {
                if !a.is_zero() {
                    new[c] = new[c].sub_mul(&f, a);
                }
            }
        }
        self.rows.push(new);
        self.basis.push(s);
    }

    /// Dual simplex for `max c·z` from a dual-feasible basis. Returns `false`
    /// if the primal is infeasible.
    pub(crate) fn dual_simplex(&mut self, c: &[Rational]) -> bool {
        loop {
            // Leaving row: most negative rhs, ties to the smallest basic index.
            let mut leave: Option<usize> = None;
            for i in 0..self.rows.len() {
                if !self.rhs(i).is_negative() {
                    continue;
                }
                leave = match leave {
                    None => Some(i),
                    Some(k) => {
                        let ord = self.rhs(i).cmp(self.rhs(k));
                        if ord.is_lt() || (ord.is_eq() && self.basis[i] < self.basis[k]) {
                            Some(i)
                        } else {
                            Some(k)
                        }
                    }
                };
            }
            let Some(i) = leave else { return true };
            let red = self.reduced_costs(c);
            let basic = self.basic_mask();
            let mut best: Option<(Rational, usize)> = None;
            for j in 0..self.ncols {
                let a = &self.rows[i][j];
                if basic[j] || !a.is_negative() {
                    continue;
                }
                // red_j ≤ 0 and a < 0, so the ratio is ≥ 0.
                let ratio = &red[j] / a;
                if best.as_ref().is_none_or(|(r, _)| ratio < *r) {
                    best = Some((ratio, j));
                }
            }
            let Some((_, j)) = best else { return false };
            self.pivot(i, j);
        }
    }

    /// Phase 2 with Bland's rule. Returns `false` on unboundedness.
    pub(crate) fn maximize(&mut self, c: &[Rational]) -> bool {
        loop {
            let red = self.reduced_costs(c);
            let basic = self.basic_mask();
            let Some(j) = (0..self.ncols).find(|&j| !basic[j] && red[j].is_positive()) else {
                return true;
            };
            let Some(i) = self.ratio_test(j, TieBreak::SmallestBasic) else {
                return false;
            };
            self.pivot(i, j);
        }
    }
}

/// Result of a simplex run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexState {
    pub status: LpStatus,
    /// Structural variable count.
    pub n: usize,
    pub tableau: Tableau,
}

impl SimplexState {
    pub(crate) fn new(status: LpStatus, n: usize, tableau: Tableau) -> Self {
        Self { status, n, tableau }
    }

    fn infeasible(n: usize) -> Self {
        Self::new(
            LpStatus::Infeasible,
            n,
            Tableau {
                rows: Vec::new(),
                basis: Vec::new(),
                ncols: 0,
            },
        )
    }

    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }

    pub fn basis(&self) -> &[usize] {
        self.tableau.basis()
    }

    pub fn nonbasis(&self) -> Vec<usize> {
        self.tableau.nonbasis()
    }

    /// Values of all variables, structural first.
    pub fn values(&self) -> Vec<Rational> {
        self.tableau.values()
    }

    /// Values of the structural variables.
    pub fn point(&self) -> Vec<Rational> {
        let mut v = self.values();
        v.truncate(self.n);
        v
    }
}

/// Solves a linear program.
pub fn solve_lp(lp: &StandardLp) -> SimplexState {
    let n = lp.domain.n;
    let Some(mut t) = Tableau::feasible(&lp.domain) else {
        return SimplexState::infeasible(n);
    };
    let status = if t.maximize(&lp.objective.coeffs) {
        LpStatus::Optimal
    } else {
        LpStatus::Unbounded
    };
    SimplexState::new(status, n, t)
}

/// Optimal value of a solved program, `c·z + constant`.
pub fn objective_value(state: &SimplexState, c: &AffineForm) -> Result<Rational> {
    if !state.is_optimal() {
        return Err(Error::NotOptimal);
    }
    Ok(c.eval(&state.values()))
}

/// Reduced coefficients of `c` over the nonbasic variables (in ascending
/// index order) and the value of `c` at the basic solution.
pub fn reduced_row(state: &SimplexState, c: &AffineForm) -> Result<(Vec<Rational>, Rational)> {
    if !state.is_optimal() {
        return Err(Error::NotOptimal);
    }
    let red = state.tableau.reduced_costs(&c.coeffs);
    let row = state.nonbasis().into_iter().map(|j| red[j].clone()).collect();
    Ok((row, c.eval(&state.values())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::fixtures::worked_example;
    use proptest::prelude::*;

    fn r(v: i64) -> Rational {
        Rational::from(v)
    }

    fn lp(n: usize, rows: Vec<Constraint>, obj: &[i64]) -> StandardLp {
        StandardLp {
            domain: Domain::new(n, rows),
            objective: AffineForm::from_ints(obj, 0),
        }
    }

    #[test]
    fn single_bound() {
        let s = solve_lp(&lp(1, vec![Constraint::bound(0, Relation::Le, r(5))], &[1]));
        assert_eq!(s.status, LpStatus::Optimal);
        assert_eq!(s.point(), vec![r(5)]);
    }

    #[test]
    fn negative_bound_is_infeasible() {
        let s = solve_lp(&lp(1, vec![Constraint::bound(0, Relation::Le, r(-1))], &[1]));
        assert_eq!(s.status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded_ray() {
        let s = solve_lp(&lp(1, vec![Constraint::bound(0, Relation::Ge, r(1))], &[1]));
        assert_eq!(s.status, LpStatus::Unbounded);
    }

    #[test]
    fn branch_two_of_worked_example_is_empty() {
        let d = worked_example()
            .base_domain()
            .with_row(Constraint::bound(0, Relation::Ge, r(5)));
        let s = solve_lp(&StandardLp {
            domain: d,
            objective: AffineForm::from_ints(&[0, 0], 0),
        });
        assert_eq!(s.status, LpStatus::Infeasible);
    }

    #[test]
    fn equality_and_redundant_rows() {
        // x + y = 2 twice, maximize x.
        let row = Constraint::new(vec![r(1), r(1)], Relation::Eq, r(2));
        let s = solve_lp(&lp(2, vec![row.clone(), row], &[1, 0]));
        assert_eq!(s.status, LpStatus::Optimal);
        assert_eq!(s.point(), vec![r(2), r(0)]);
        assert_eq!(s.basis().len(), 1);
    }

    #[test]
    fn worked_example_vertex() {
        let s = solve_lp(&StandardLp {
            domain: worked_example().base_domain(),
            objective: AffineForm::from_ints(&[1, 1], 0),
        });
        assert_eq!(s.point(), vec![rat(32, 7), rat(8, 7)]);
        assert_eq!(s.nonbasis(), vec![2, 3]);
    }

    #[test]
    fn reduced_row_of_zero_objective() {
        let s = solve_lp(&StandardLp {
            domain: worked_example().base_domain(),
            objective: AffineForm::from_ints(&[1, 1], 0),
        });
        let (row, v) = reduced_row(&s, &AffineForm::from_ints(&[0, 0], 7)).unwrap();
        assert_eq!(row, vec![r(0), r(0)]);
        assert_eq!(v, r(7));
        let inf = solve_lp(&lp(1, vec![Constraint::bound(0, Relation::Le, r(-1))], &[1]));
        assert!(matches!(
            reduced_row(&inf, &AffineForm::from_ints(&[1], 0)),
            Err(Error::NotOptimal)
        ));
    }

    #[test]
    fn add_row_then_dual_simplex_matches_fresh_solve() {
        let base = worked_example().base_domain();
        let obj = AffineForm::from_ints(&[1, 1], 0);
        let mut t = Tableau::feasible(&base).unwrap();
        assert!(t.maximize(&obj.coeffs));
        let cut = Constraint::bound(0, Relation::Le, r(4));
        t.add_row(&cut);
        assert!(t.dual_simplex(&obj.coeffs));
        let fresh = solve_lp(&StandardLp {
            domain: base.with_row(cut),
            objective: obj.clone(),
        });
        assert_eq!(obj.eval(&t.values()), objective_value(&fresh, &obj).unwrap());
    }

    fn vertices(rows: &[Constraint], n: usize) -> Vec<Vec<Rational>> {
        // Intersections of n tight constraints among rows and x_j = 0.
        let mut hyper: Vec<(Vec<Rational>, Rational)> = rows
            .iter()
            .map(|c| {
                let mut a = c.coeffs.clone();
                a.resize(n, Rational::zero());
                (a, c.rhs.clone())
            })
            .collect();
        for j in 0..n {
            let mut a = vec![Rational::zero(); n];
            a[j] = Rational::one();
            hyper.push((a, Rational::zero()));
        }
        let mut out = Vec::new();
        let h = hyper.len();
        let mut pick = vec![0usize; n];
        fn rec(
            start: usize,
            depth: usize,
            pick: &mut Vec<usize>,
            h: usize,
            f: &mut dyn FnMut(&[usize]),
        ) {
            if depth == pick.len() {
                f(pick);
                return;
            }
            for i in start..h {
                pick[depth] = i;
                rec(i + 1, depth + 1, pick, h, f);
            }
        }
        let dom = Domain::new(n, rows.to_vec());
        rec(0, 0, &mut pick, h, &mut |idx| {
            let mut m: Vec<Vec<Rational>> = idx
                .iter()
                .map(|&i| {
                    let mut row = hyper[i].0.clone();
                    row.push(hyper[i].1.clone());
                    row
                })
                .collect();
            // Gauss-Jordan.
            for c in 0..n {
                let Some(p) = (c..n).find(|&k| !m[k][c].is_zero()) else {
                    return;
                };
                m.swap(c, p);
                let pv = m[c][c].clone();
                for v in m[c].iter_mut() {
                    *v = &*v / &pv;
                }
                for k in 0..n {
                    if k != c && !m[k][c].is_zero() {
                        let f = m[k][c].clone();
                        let pivot_row = m[c].clone();
                        for (v, p) in m[k].iter_mut().zip(&pivot_row) {
                            *v = v.sub_mul(&f, p);
                        }
                    }
                }
            }
            let x: Vec<Rational> = m.iter().map(|row| row[n].clone()).collect();
            if dom.contains(&x) {
                out.push(x);
            }
        });
        out
    }

    proptest! {
        #[test]
        fn optimum_matches_vertex_enumeration(
            n in 1usize..4,
            raw in prop::collection::vec((prop::collection::vec(-3i64..6, 3), 0i64..12), 1..4),
            obj in prop::collection::vec(-5i64..6, 3),
        ) {
            let mut rows: Vec<Constraint> = raw.iter()
                .map(|(a, b)| Constraint::new(a[..n].iter().map(|&v| r(v)).collect(), Relation::Le, r(*b)))
                .collect();
            // Box keeps the region bounded.
            for j in 0..n {
                rows.push(Constraint::bound(j, Relation::Le, r(7)));
            }
            let obj = AffineForm::from_ints(&obj[..n], 0);
            let problem = StandardLp { domain: Domain::new(n, rows.clone()), objective: obj.clone() };
            let s = solve_lp(&problem);
            prop_assert_eq!(s.status, LpStatus::Optimal);
            let best = vertices(&rows, n).iter().map(|x| obj.eval(x)).max().unwrap();
            let got = objective_value(&s, &obj).unwrap();
            prop_assert_eq!(&got, &best);
            prop_assert!(problem.domain.contains(&s.point()));
            prop_assert!(s.values().iter().all(|v| !v.is_negative()));
            // Determinism.
            let again = solve_lp(&problem);
            prop_assert_eq!(again.basis(), s.basis());
        }

        #[test]
        fn mixed_relations_are_consistent(
            a in prop::collection::vec(-3i64..6, 2),
            b in -4i64..10,
            rel in 0u8..3,
        ) {
            let relation = [Relation::Le, Relation::Ge, Relation::Eq][rel as usize];
            let rows = vec![
                Constraint::new(a.iter().map(|&v| r(v)).collect(), relation, r(b)),
                Constraint::new(vec![r(1), r(1)], Relation::Le, r(6)),
            ];
            let domain = Domain::new(2, rows);
            let s = solve_lp(&StandardLp { domain: domain.clone(), objective: AffineForm::from_ints(&[1, 2], 0) });
            // Brute force over a fine grid only certifies feasibility claims.
            if s.status == LpStatus::Optimal {
                prop_assert!(domain.contains(&s.point()));
            } else {
                prop_assert_eq!(s.status, LpStatus::Infeasible);
                for x in 0..=24 {
                    for y in 0..=(24 - x) {
                        prop_assert!(!domain.contains(&[rat(x, 4), rat(y, 4)]));
                    }
                }
            }
        }
    }
}
