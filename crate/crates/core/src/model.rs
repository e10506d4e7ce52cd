//! Problem data: affine forms, ratio objectives, instances and points.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Assumption, Error, Result};
use crate::lp::{Constraint, Domain, Relation};
use crate::rational::{dot, Rational};

/// `coeffs · x + constant`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineForm {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
}

impl AffineForm {
    pub fn new(coeffs: Vec<Rational>, constant: Rational) -> Self {
        Self { coeffs, constant }
    }

    pub fn from_ints(coeffs: &[i64], constant: i64) -> Self {
        Self {
            coeffs: coeffs.iter().map(|&c| Rational::from(c)).collect(),
            constant: Rational::from(constant),
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Evaluates at `x`; entries of `x` beyond the coefficient vector are ignored.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        let k = self.coeffs.len().min(x.len());
        dot(&self.coeffs[..k], &x[..k]) + &self.constant
    }

    pub fn eval_point(&self, x: &IntegerPoint) -> Rational {
        let mut acc = self.constant.clone();
        for (c, v) in self.coeffs.iter().zip(&x.0) {
            if !c.is_zero() && !v.is_zero() {
                acc += c * Rational::from(v);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.iter().all(Rational::is_zero)
    }
}

/// A ratio `numerator(x) / denominator(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FractionalObjective {
    pub numerator: AffineForm,
    pub denominator: AffineForm,
}

impl FractionalObjective {
    pub fn new(numerator: AffineForm, denominator: AffineForm) -> Self {
        Self {
            numerator,
            denominator,
        }
    }

    /// A linear objective, i.e. denominator `1`.
    pub fn linear(numerator: AffineForm) -> Self {
        let n = numerator.len();
        Self {
            numerator,
            denominator: AffineForm::new(vec![Rational::zero(); n], Rational::one()),
        }
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Rational> {
        let den = self.denominator.eval(x);
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.numerator.eval(x) / den)
    }
}

/// Exact evaluation of a ratio objective at an integer point.
pub fn evaluate(obj: &FractionalObjective, x: &IntegerPoint) -> Result<Rational> {
    let den = obj.denominator.eval_point(x);
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(obj.numerator.eval_point(x) / den)
}

/// A lattice point with arbitrary-precision coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerPoint(pub Vec<BigInt>);

impl IntegerPoint {
    pub fn from_i64(coords: &[i64]) -> Self {
        IntegerPoint(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Converts an integral rational vector; fails on any fractional entry.
    pub fn from_rationals(values: &[Rational]) -> Result<Self> {
        values
            .iter()
            .map(|v| v.to_bigint().ok_or(Error::NonIntegerPoint))
            .collect::<Result<Vec<_>>>()
            .map(IntegerPoint)
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().map(Rational::from).collect()
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|c| c.to_i64()).collect()
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for IntegerPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Images of a point under a list of objectives.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ObjectiveVector(pub Vec<Rational>);

impl fmt::Display for ObjectiveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `a` dominates `b` in the maximization sense.
pub fn dominates(a: &ObjectiveVector, b: &ObjectiveVector) -> Result<bool> {
    if a.0.len() != b.0.len() {
        return Err(Error::LengthMismatch {
            expected: a.0.len(),
            found: b.0.len(),
        });
    }
    Ok(dominates_unchecked(&a.0, &b.0))
}

fn dominates_unchecked(a: &[Rational], b: &[Rational]) -> bool {
    let mut strict = false;
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Less => return false,
            Ordering::Greater => strict = true,
            Ordering::Equal => {}
        }
    }
    strict
}

/// Keeps the points whose vectors no other vector dominates, in input order.
///
/// Points sharing an identical vector are all kept. All vectors must have the
/// same length.
pub fn pareto_filter(points: &[(IntegerPoint, ObjectiveVector)]) -> Vec<IntegerPoint> {
    pareto_indices(points.iter().map(|(_, v)| v.0.as_slice()))
        .into_iter()
        .map(|i| points[i].0.clone())
        .collect()
}

/// Indices of the nondominated vectors, ascending.
pub(crate) fn pareto_indices<'a, I>(vectors: I) -> Vec<usize>
where
    I: IntoIterator<Item = &'a [Rational]>,
{
    let vecs: Vec<&[Rational]> = vectors.into_iter().collect();
    // A dominator is lexicographically larger, so scanning in descending
    // lexicographic order only needs comparisons against kept vectors.
    let mut order: Vec<usize> = (0..vecs.len()).collect();
    order.sort_by(|&i, &j| vecs[j].cmp(vecs[i]));
    let mut kept: Vec<usize> = Vec::new();
    let mut keep = vec![false; vecs.len()];
    for &i in &order {
        if !kept.iter().any(|&j| dominates_unchecked(vecs[j], vecs[i])) {
            keep[i] = true;
            kept.push(i);
        }
    }
    (0..vecs.len()).filter(|&i| keep[i]).collect()
}

/// `max f_i(x), i = 1..k` and the two utilities over `{x ≥ 0 integer : Ax ≤ b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemInstance {
    pub a: Vec<Vec<Rational>>,
    pub b: Vec<Rational>,
    pub criteria: Vec<FractionalObjective>,
    pub utility: [FractionalObjective; 2],
}

impl ProblemInstance {
    /// Checks dimensions and `k ≥ 2`.
    pub fn new(
        a: Vec<Vec<Rational>>,
        b: Vec<Rational>,
        criteria: Vec<FractionalObjective>,
        utility: [FractionalObjective; 2],
    ) -> Result<Self> {
        let m = b.len();
        if a.len() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                found: a.len(),
            });
        }
        let n = utility[0].numerator.len();
        let forms = criteria
            .iter()
            .chain(utility.iter())
            .flat_map(|o| [&o.numerator, &o.denominator]);
        for len in a.iter().map(Vec::len).chain(forms.map(AffineForm::len)) {
            if len != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: len,
                });
            }
        }
        if criteria.len() < 2 {
            return Err(Error::AssumptionViolated(Assumption::TooFewCriteria(
                criteria.len(),
            )));
        }
        Ok(Self {
            a,
            b,
            criteria,
            utility,
        })
    }

    pub fn n(&self) -> usize {
        self.utility[0].numerator.len()
    }

    pub fn m(&self) -> usize {
        self.b.len()
    }

    pub fn k(&self) -> usize {
        self.criteria.len()
    }

    /// `Ax ≤ b` with every row scaled to integer coefficients, so that slack
    /// variables take integer values at integer points.
    pub fn base_domain(&self) -> Domain {
        let rows = self
            .a
            .iter()
            .zip(&self.b)
            .map(|(row, rhs)| {
                let scale = row
                    .iter()
                    .chain(std::iter::once(rhs))
                    .fold(BigInt::one(), |acc, v| acc.lcm(&v.denom()));
                let s = Rational::from(scale);
                Constraint::new(
                    row.iter().map(|v| v * &s).collect(),
                    Relation::Le,
                    rhs * &s,
                )
            })
            .collect();
        Domain::new(self.n(), rows)
    }

    pub fn contains(&self, x: &IntegerPoint) -> bool {
        if x.dim() != self.n() || x.0.iter().any(Signed::is_negative) {
            return false;
        }
        let xr = x.to_rationals();
        self.a
            .iter()
            .zip(&self.b)
            .all(|(row, rhs)| dot(row, &xr) <= *rhs)
    }

    pub fn criteria_image(&self, x: &IntegerPoint) -> Result<ObjectiveVector> {
        self.criteria
            .iter()
            .map(|o| evaluate(o, x))
            .collect::<Result<Vec<_>>>()
            .map(ObjectiveVector)
    }

    pub fn utility_image(&self, x: &IntegerPoint) -> Result<ObjectiveVector> {
        self.utility
            .iter()
            .map(|o| evaluate(o, x))
            .collect::<Result<Vec<_>>>()
            .map(ObjectiveVector)
    }
}
