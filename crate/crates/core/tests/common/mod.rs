#![allow(dead_code)]

use boilfp::oracle::{efficient_sets, EfficientSets};
use boilfp::toolkit::generator::{generate, GeneratorConfig};
use boilfp::{IntegerPoint, ProblemInstance};

pub const MAX_POINTS: usize = 500;

/// A small random instance with `n, m, k ∈ {2, 3}` and at most
/// [`MAX_POINTS`] feasible points, or `None` when the seed is rejected.
///
/// Seeds cycle through three range profiles: positive rows, rows with
/// negative entries, and denominators with negative coefficients.
pub fn small_instance(seed: u64) -> Option<(ProblemInstance, EfficientSets)> {
    let n = 2 + (seed % 2) as usize;
    let m = 2 + ((seed / 2) % 2) as usize;
    let k = 2 + ((seed / 4) % 2) as usize;
    let mut cfg = GeneratorConfig::new(n, m, k, seed);
    cfg.b_range = (8, 40);
    match seed % 3 {
        0 => cfg.a_range = (1, 8),
        1 => {
            cfg.a_range = (-4, 8);
            cfg.b_range = (0, 30);
        }
        _ => {
            cfg.a_range = (1, 6);
            cfg.den_range = (-3, 10);
        }
    }
    let inst = generate(&cfg).ok()?;
    let sets = efficient_sets(&inst, 1_000_000).ok()?;
    (sets.feasible.len() <= MAX_POINTS).then_some((inst, sets))
}

/// The first `count` accepted instances, scanning seeds upward from `start`.
pub fn small_instances(start: u64, count: usize) -> Vec<(u64, ProblemInstance, EfficientSets)> {
    let mut out = Vec::with_capacity(count);
    let mut seed = start;
    while out.len() < count {
        if let Some((inst, sets)) = small_instance(seed) {
            out.push((seed, inst, sets));
        }
        seed += 1;
    }
    out
}

pub fn sorted(mut v: Vec<IntegerPoint>) -> Vec<IntegerPoint> {
    v.sort();
    v
}

pub fn pt(c: &[i64]) -> IntegerPoint {
    IntegerPoint::from_i64(c)
}
