//! Brute-force enumeration of the feasible lattice points and the efficient
//! sets.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lp::{solve_lp, LpStatus, StandardLp};
use crate::model::{pareto_indices, AffineForm, IntegerPoint, ProblemInstance};
use crate::rational::Rational;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Floors of `max x_j` over the continuous region, or `None` if it is empty.
pub fn upper_bounds(instance: &ProblemInstance) -> Result<Option<Vec<BigInt>>> {
    let domain = instance.base_domain();
    let n = instance.n();
    let mut ub = Vec::with_capacity(n);
    for j in 0..n {
        let mut c = vec![Rational::zero(); n];
        c[j] = Rational::one();
        let objective = AffineForm::new(c, Rational::zero());
        let s = solve_lp(&StandardLp {
            domain: domain.clone(),
            objective: objective.clone(),
        });
        match s.status {
            LpStatus::Infeasible => return Ok(None),
            LpStatus::Unbounded => return Err(Error::UnboundedDomain),
            LpStatus::Optimal => ub.push(objective.eval(&s.values()).floor()),
        }
    }
    Ok(Some(ub))
}

/// Number of lattice points in the box `Π [0, ub_j]`.
pub fn box_size(ub: &[BigInt]) -> BigInt {
    ub.iter()
        .map(|u| if u < &BigInt::zero() { BigInt::zero() } else { u + 1 })
        .product()
}

/// All integer points of the instance in lexicographic order.
pub fn enumerate_feasible(instance: &ProblemInstance, budget: u64) -> Result<Vec<IntegerPoint>> {
    let Some(ub) = upper_bounds(instance)? else {
        return Ok(Vec::new());
    };
    let size = box_size(&ub);
    if size > BigInt::from(budget) {
        return Err(Error::EnumerationBudgetExceeded {
            candidates: size.to_string(),
            budget,
        });
    }
    // The box fits the budget, so every bound fits an i64.
    let ub: Vec<i64> = ub.iter().map(|u| u.to_i64().unwrap_or(0).max(-1)).collect();
    let domain = instance.base_domain();
    let n = instance.n();
    let rows: Vec<(Vec<Rational>, Rational)> = domain
        .rows
        .iter()
        .map(|r| {
            let mut a = r.coeffs.clone();
            a.resize(n, Rational::zero());
            (a, r.rhs.clone())
        })
        .collect();
    // rest_min[j][i]: least possible contribution of x_j.. to row i.
    let mut rest_min = vec![vec![Rational::zero(); rows.len()]; n + 1];
    for j in (0..n).rev() {
        for (i, (a, _)) in rows.iter().enumerate() {
            let low = if a[j].is_negative() {
                &a[j] * Rational::from(ub[j])
            } else {
                Rational::zero()
            };
            rest_min[j][i] = &rest_min[j + 1][i] + low;
        }
    }
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    let mut partial = vec![vec![Rational::zero(); rows.len()]; n + 1];
    descend(0, &ub, &rows, &rest_min, &mut partial, &mut x, &mut out);
    Ok(out)
}

fn descend(
    j: usize,
    ub: &[i64],
    rows: &[(Vec<Rational>, Rational)],
    rest_min: &[Vec<Rational>],
    partial: &mut [Vec<Rational>],
    x: &mut [i64],
    out: &mut Vec<IntegerPoint>,
) {
    let n = x.len();
    if j == n {
        if rows.iter().enumerate().all(|(i, (_, b))| partial[n][i] <= *b) {
            out.push(IntegerPoint::from_i64(x));
        }
        return;
    }
    for v in 0..=ub[j] {
        let vr = Rational::from(v);
        let mut ok = true;
        let mut stuck = false;
        for (i, (a, b)) in rows.iter().enumerate() {
            let s = &partial[j][i] + &a[j] * &vr;
            if &s + &rest_min[j + 1][i] > *b {
                ok = false;
                // This row can only get worse as x_j grows.
                stuck |= !a[j].is_negative();
            }
            partial[j + 1][i] = s;
        }
        if stuck {
            break;
        }
        if !ok {
            continue;
        }
        x[j] = v;
        descend(j + 1, ub, rows, rest_min, partial, x, out);
    }
    x[j] = 0;
}

/// The feasible set and the efficient sets of both problems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EfficientSets {
    pub feasible: Vec<IntegerPoint>,
    /// Efficient for the criteria.
    pub x_e: Vec<IntegerPoint>,
    /// Efficient for the utilities.
    pub x_e_prime: Vec<IntegerPoint>,
    pub intersection: Vec<IntegerPoint>,
}

pub fn efficient_sets(instance: &ProblemInstance, budget: u64) -> Result<EfficientSets> {
    let feasible = enumerate_feasible(instance, budget)?;
    let crit = feasible
        .iter()
        .map(|x| instance.criteria_image(x).map(|v| v.0))
        .collect::<Result<Vec<_>>>()?;
    let util = feasible
        .iter()
        .map(|x| instance.utility_image(x).map(|v| v.0))
        .collect::<Result<Vec<_>>>()?;
    let e = pareto_indices(crit.iter().map(Vec::as_slice));
    let ep = pareto_indices(util.iter().map(Vec::as_slice));
    let mut in_e = vec![false; feasible.len()];
    for &i in &e {
        in_e[i] = true;
    }
    let pick = |ix: &[usize]| ix.iter().map(|&i| feasible[i].clone()).collect::<Vec<_>>();
    let both: Vec<usize> = ep.iter().copied().filter(|&i| in_e[i]).collect();
    Ok(EfficientSets {
        x_e: pick(&e),
        x_e_prime: pick(&ep),
        intersection: pick(&both),
        feasible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::worked_example;
    use crate::model::dominates;
    use crate::rational::rat;

    fn pts(c: &[[i64; 2]]) -> Vec<IntegerPoint> {
        c.iter().map(|p| IntegerPoint::from_i64(p)).collect()
    }

    #[test]
    fn worked_example_sets() {
        let inst = worked_example();
        let s = efficient_sets(&inst, DEFAULT_BUDGET).unwrap();
        assert_eq!(s.feasible, pts(&[[0, 0], [1, 0], [2, 0], [3, 0], [4, 0], [4, 1]]));
        assert_eq!(s.x_e, pts(&[[0, 0], [1, 0], [2, 0], [3, 0], [4, 1]]));
        assert_eq!(s.x_e_prime, pts(&[[0, 0], [1, 0], [4, 1]]));
        assert_eq!(s.intersection, pts(&[[0, 0], [1, 0], [4, 1]]));
        for set in [&s.x_e] {
            for a in set.iter() {
                for b in set.iter() {
                    let (fa, fb) = (inst.criteria_image(a).unwrap(), inst.criteria_image(b).unwrap());
                    assert!(!dominates(&fa, &fb).unwrap());
                }
            }
        }
    }

    #[test]
    fn empty_region() {
        let mut inst = worked_example();
        inst.a = vec![vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1)]];
        inst.b = vec![rat(-1, 1), rat(3, 1)];
        assert!(enumerate_feasible(&inst, DEFAULT_BUDGET).unwrap().is_empty());
    }

    #[test]
    fn one_dimensional_box() {
        let mut inst = worked_example();
        inst.a = vec![vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1)]];
        inst.b = vec![rat(2, 1), rat(0, 1)];
        assert_eq!(
            enumerate_feasible(&inst, DEFAULT_BUDGET).unwrap(),
            pts(&[[0, 0], [1, 0], [2, 0]])
        );
    }

    #[test]
    fn single_point_sets_coincide() {
        let mut inst = worked_example();
        inst.a = vec![vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1)]];
        inst.b = vec![rat(0, 1), rat(0, 1)];
        let s = efficient_sets(&inst, DEFAULT_BUDGET).unwrap();
        assert_eq!(s.x_e, pts(&[[0, 0]]));
        assert_eq!(s.x_e_prime, s.x_e);
        assert_eq!(s.intersection, s.x_e);
    }

    #[test]
    fn budget_guard() {
        let inst = worked_example();
        assert!(matches!(
            enumerate_feasible(&inst, 5),
            Err(Error::EnumerationBudgetExceeded { .. })
        ));
    }

    #[test]
    fn unbounded_region() {
        let mut inst = worked_example();
        inst.a = vec![vec![rat(-1, 1), rat(1, 1)], vec![rat(0, 1), rat(1, 1)]];
        inst.b = vec![rat(0, 1), rat(3, 1)];
        assert!(matches!(enumerate_feasible(&inst, DEFAULT_BUDGET), Err(Error::UnboundedDomain)));
    }
}
