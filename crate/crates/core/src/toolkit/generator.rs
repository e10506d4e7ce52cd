//! Seeded random instances.
//!
//! Constraints are `≤` rows with entries drawn uniformly from `a_range` and
//! right-hand sides from `b_range`. Numerators draw coefficients and constant
//! from `num_range`, denominators from `den_range`. A denominator whose
//! minimum over the region is not positive gets its constant redrawn from
//! `[1, 10]`; if that still fails the whole instance is redrawn.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Assumption, Error, Result};
use crate::lp::{solve_lp, LpStatus, StandardLp};
use crate::model::{AffineForm, FractionalObjective, ProblemInstance};
use crate::rational::Rational;
use crate::toolkit::validate::validate_instance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub seed: u64,
    pub b_range: (i64, i64),
    pub a_range: (i64, i64),
    pub num_range: (i64, i64),
    pub den_range: (i64, i64),
    pub max_attempts: usize,
}

impl GeneratorConfig {
    /// Default ranges: `b ∈ [50, 100]`, `A ∈ [1, 30]`, numerators in
    /// `[−10, 10]`, denominators in `[0, 10]`.
    pub fn new(n: usize, m: usize, k: usize, seed: u64) -> Self {
        Self {
            n,
            m,
            k,
            seed,
            b_range: (50, 100),
            a_range: (1, 30),
            num_range: (-10, 10),
            den_range: (0, 10),
            max_attempts: 100,
        }
    }
}

fn draw(rng: &mut ChaCha8Rng, (lo, hi): (i64, i64)) -> Rational {
    Rational::from(rng.gen_range(lo..=hi))
}

fn form(rng: &mut ChaCha8Rng, n: usize, range: (i64, i64)) -> AffineForm {
    let coeffs = (0..n).map(|_| draw(rng, range)).collect();
    AffineForm::new(coeffs, draw(rng, range))
}

/// `min d(x)` over the region, `None` if the region is empty or unbounded
/// in the decreasing direction.
fn minimum(a: &[Vec<Rational>], b: &[Rational], n: usize, d: &AffineForm) -> Option<Rational> {
    let probe = ProblemInstance {
        a: a.to_vec(),
        b: b.to_vec(),
        criteria: Vec::new(),
        utility: [
            FractionalObjective::linear(AffineForm::new(vec![Rational::zero(); n], Rational::zero())),
            FractionalObjective::linear(AffineForm::new(vec![Rational::zero(); n], Rational::zero())),
        ],
    };
    let neg = AffineForm::new(d.coeffs.iter().map(|c| -c).collect(), -&d.constant);
    let s = solve_lp(&StandardLp {
        domain: probe.base_domain(),
        objective: neg.clone(),
    });
    (s.status == LpStatus::Optimal).then(|| -neg.eval(&s.values()))
}

fn attempt(cfg: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Option<ProblemInstance> {
    let n = cfg.n;
    let a: Vec<Vec<Rational>> = (0..cfg.m)
        .map(|_| (0..n).map(|_| draw(rng, cfg.a_range)).collect())
        .collect();
    let b: Vec<Rational> = (0..cfg.m).map(|_| draw(rng, cfg.b_range)).collect();
    let ratio = |rng: &mut ChaCha8Rng| -> Option<FractionalObjective> {
        let num = form(rng, n, cfg.num_range);
        let mut den = form(rng, n, cfg.den_range);
        let low = minimum(&a, &b, n, &den)?;
        if !low.is_positive() {
            let shift = &low - &den.constant;
            den.constant = draw(rng, (1, 10));
            if !(&shift + &den.constant).is_positive() {
                return None;
            }
        }
        Some(FractionalObjective::new(num, den))
    };
    let criteria = (0..cfg.k).map(|_| ratio(rng)).collect::<Option<Vec<_>>>()?;
    let utility = [ratio(rng)?, ratio(rng)?];
    let inst = ProblemInstance::new(a, b, criteria, utility).ok()?;
    validate_instance(&inst).ok()?;
    Some(inst)
}

/// Draws an instance that passes validation; deterministic in the seed.
pub fn generate(cfg: &GeneratorConfig) -> Result<ProblemInstance> {
    if cfg.k < 2 {
        return Err(Error::AssumptionViolated(Assumption::TooFewCriteria(cfg.k)));
    }
    if cfg.n == 0 || cfg.m == 0 {
        return Err(Error::GenerationFailed(0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.max_attempts {
        if let Some(inst) = attempt(cfg, &mut rng) {
            return Ok(inst);
        }
    }
    Err(Error::GenerationFailed(cfg.max_attempts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_in_seed() {
        let cfg = GeneratorConfig::new(5, 10, 3, 42);
        assert_eq!(generate(&cfg).unwrap(), generate(&cfg).unwrap());
        let other = GeneratorConfig::new(5, 10, 3, 43);
        assert_ne!(generate(&cfg).unwrap(), generate(&other).unwrap());
    }

    #[test]
    fn default_ranges_produce_valid_instances() {
        for seed in 0..5 {
            let inst = generate(&GeneratorConfig::new(4, 3, 2, seed)).unwrap();
            assert_eq!((inst.n(), inst.m(), inst.k()), (4, 3, 2));
            for row in &inst.a {
                assert!(row.iter().all(|v| *v >= Rational::from(1) && *v <= Rational::from(30)));
            }
            assert!(validate_instance(&inst).is_ok());
        }
    }

    #[test]
    fn rejects_single_criterion() {
        assert!(matches!(
            generate(&GeneratorConfig::new(2, 2, 1, 0)),
            Err(Error::AssumptionViolated(Assumption::TooFewCriteria(1)))
        ));
    }

    #[test]
    fn impossible_ranges_fail() {
        let mut cfg = GeneratorConfig::new(2, 2, 2, 7);
        cfg.den_range = (-10, -5);
        cfg.max_attempts = 5;
        assert!(matches!(generate(&cfg), Err(Error::GenerationFailed(5))));
    }
}
