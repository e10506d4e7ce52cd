//! Small reference instances.

use crate::model::{AffineForm, FractionalObjective, ProblemInstance};
use crate::rational::Rational;

fn ratio(num: &[i64], num_const: i64, den: &[i64], den_const: i64) -> FractionalObjective {
    FractionalObjective::new(
        AffineForm::from_ints(num, num_const),
        AffineForm::from_ints(den, den_const),
    )
}

/// Two variables, rows `−x1 + 4x2 ≤ 0` and `2x1 − x2 ≤ 8`, three criteria
///
/// * `Z1 = (x1 − 4)/(−x2 + 2)`
/// * `Z2 = (−x1 + 4)/(x2 + 1)`
/// * `Z3 = −x1 + x2`
///
/// and utilities `f1 = (−x1 + x2 − 3)/(2x1 + x2 + 1)`,
/// `f2 = (−4x1 + 3x2 + 1)/(2x1 + x2 + 2)`.
pub fn worked_example() -> ProblemInstance {
    let r = |v: i64| Rational::from(v);
    ProblemInstance::new(
        vec![vec![r(-1), r(4)], vec![r(2), r(-1)]],
        vec![r(0), r(8)],
        vec![
            ratio(&[1, 0], -4, &[0, -1], 2),
            ratio(&[-1, 0], 4, &[0, 1], 1),
            ratio(&[-1, 1], 0, &[0, 0], 1),
        ],
        [
            ratio(&[-1, 1], -3, &[2, 1], 1),
            ratio(&[-4, 3], 1, &[2, 1], 2),
        ],
    )
    .expect("fixture is well formed")
}
