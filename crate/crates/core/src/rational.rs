//! Exact rational numbers.
//!
//! Values whose reduced numerator and denominator fit in an `i64` are kept
//! inline and combined through `i128` intermediates; anything larger is
//! promoted to a heap-allocated [`BigRational`]. The representation is
//! canonical (a value is `Big` only when it cannot be `Small`), so derived
//! equality and hashing agree with numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact fraction `num / den` with `den > 0` and `gcd(|num|, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(Box<BigRational>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(String);

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }

    /// Builds `num / den`, reducing to lowest terms.
    ///
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "rational with zero denominator");
        Self::from_big(BigRational::new(num, den))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = num.gcd(&den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(num),
                BigInt::from(den),
            )))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational keeps itself reduced with a positive denominator.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(r))),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n > 0,
            Repr::Big(b) => b.is_positive(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn signum(&self) -> i32 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Self {
        match &self.0 {
            Repr::Small(0, _) => panic!("reciprocal of zero"),
            Repr::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Repr::Big(b) => Self::from_big(b.recip()),
        }
    }

    /// Largest integer not above `self`.
    pub fn floor(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, d) => BigInt::from(Integer::div_floor(n, d)),
            Repr::Big(b) => b.floor().to_integer(),
        }
    }

    /// Smallest integer not below `self`.
    pub fn ceil(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, d) => BigInt::from(-Integer::div_floor(&-(*n as i128), &(*d as i128))),
            Repr::Big(b) => b.ceil().to_integer(),
        }
    }

    /// The integer value, if `self` is integral.
    pub fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.numer())
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    fn add_ref(&self, other: &Rational) -> Rational {
        match (&self.0, &other.0) {
            (Repr::Small(a, 1), Repr::Small(c, 1)) => match a.checked_add(*c) {
                Some(s) => Rational(Repr::Small(s, 1)),
                None => Self::from_i128(*a as i128 + *c as i128, 1),
            },
            (Repr::Small(_, _), Repr::Small(0, _)) => self.clone(),
            (Repr::Small(0, _), Repr::Small(_, _)) => other.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Self::from_i128(a + c, b)
                } else {
                    Self::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Self::from_big(self.to_big() + other.to_big()),
        }
    }

    fn sub_ref(&self, other: &Rational) -> Rational {
        match (&self.0, &other.0) {
            (Repr::Small(a, 1), Repr::Small(c, 1)) => match a.checked_sub(*c) {
                Some(s) => Rational(Repr::Small(s, 1)),
                None => Self::from_i128(*a as i128 - *c as i128, 1),
            },
            (Repr::Small(_, _), Repr::Small(0, _)) => self.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Self::from_i128(a - c, b)
                } else {
                    Self::from_i128(a * d - c * b, b * d)
                }
            }
            _ => Self::from_big(self.to_big() - other.to_big()),
        }
    }

    fn mul_ref(&self, other: &Rational) -> Rational {
        match (&self.0, &other.0) {
            (Repr::Small(0, _), Repr::Small(_, _)) | (Repr::Small(_, _), Repr::Small(0, _)) => {
                Self::zero()
            }
            (Repr::Small(a, 1), Repr::Small(c, 1)) => match a.checked_mul(*c) {
                Some(p) => Rational(Repr::Small(p, 1)),
                None => Self::from_i128(*a as i128 * *c as i128, 1),
            },
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                // Cross-cancel first so the products are already reduced.
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                let g1 = a.gcd(&d);
                let g2 = c.gcd(&b);
                let num = (a / g1) * (c / g2);
                let den = (b / g2) * (d / g1);
                match (i64::try_from(num), i64::try_from(den)) {
                    (Ok(n), Ok(dd)) => Rational(Repr::Small(n, dd)),
                    _ => Self::from_i128(num, den),
                }
            }
            _ => Self::from_big(self.to_big() * other.to_big()),
        }
    }

    fn div_ref(&self, other: &Rational) -> Rational {
        assert!(!other.is_zero(), "division by zero rational");
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                let g1 = a.gcd(&c);
                let g2 = d.gcd(&b);
                let g1 = if g1 == 0 { 1 } else { g1 };
                let mut num = (a / g1) * (d / g2);
                let mut den = (b / g2) * (c / g1);
                if den < 0 {
                    num = -num;
                    den = -den;
                }
                match (i64::try_from(num), i64::try_from(den)) {
                    (Ok(n), Ok(dd)) => Rational(Repr::Small(n, dd)),
                    _ => Self::from_i128(num, den),
                }
            }
            _ => Self::from_big(self.to_big() / other.to_big()),
        }
    }

    /// `self - a * b`, the tableau update kernel.
    pub fn sub_mul(&self, a: &Rational, b: &Rational) -> Rational {
        if a.is_zero() || b.is_zero() {
            return self.clone();
        }
        self.sub_ref(&a.mul_ref(b))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if b == d {
                    a.cmp(c)
                } else {
                    (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
                }
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Self::from_integer(n as i64)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        match n.to_i64() {
            Some(v) => Self::from_integer(v),
            None => Rational(Repr::Big(Box::new(BigRational::from_integer(n)))),
        }
    }
}

impl From<&BigInt> for Rational {
    fn from(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(v) => Self::from_integer(v),
            None => Rational(Repr::Big(Box::new(BigRational::from_integer(n.clone())))),
        }
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Self::from_big(r)
    }
}

impl From<&Rational> for BigRational {
    fn from(r: &Rational) -> Self {
        r.to_big()
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p` or `p/q` with optional sign on `p`; decimals are rejected.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let valid = |x: &str, signed: bool| {
            let digits = if signed {
                x.strip_prefix(['-', '+']).unwrap_or(x)
            } else {
                x
            };
            !digits.is_empty() && digits.bytes().all(|c| c.is_ascii_digit())
        };
        if !valid(num, true) || !valid(den, false) {
            return Err(err());
        }
        let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| err())?;
        let d: BigInt = den.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Self::from_bigints(n, d))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                self.$imp(rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$imp(&rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                self.$imp(rhs)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$imp(&rhs)
            }
        }
        impl $assign_trait<&Rational> for Rational {
            fn $assign_method(&mut self, rhs: &Rational) {
                *self = self.$imp(rhs);
            }
        }
        impl $assign_trait<Rational> for Rational {
            fn $assign_method(&mut self, rhs: Rational) {
                *self = self.$imp(&rhs);
            }
        }
    };
}

forward_binop!(Add, add, add_ref, AddAssign, add_assign);
forward_binop!(Sub, sub, sub_ref, SubAssign, sub_assign);
forward_binop!(Mul, mul, mul_ref, MulAssign, mul_assign);
forward_binop!(Div, div, div_ref, DivAssign, div_assign);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational(Repr::Small(m, *d)),
                None => Rational::from_i128(-(*n as i128), *d as i128),
            },
            Repr::Big(b) => Rational::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::one()
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// Shorthand for `Rational::new(num, den)`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// Exact dot product of two equally long slices.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn reduces_and_normalizes_sign() {
        let r = Rational::new(6, -4);
        assert_eq!(r.numer(), BigInt::from(-3));
        assert_eq!(r.denom(), BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(Rational::new(0, -5), Rational::zero());
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(rat(32, 7).floor(), BigInt::from(4));
        assert_eq!(rat(32, 7).ceil(), BigInt::from(5));
        assert_eq!(rat(-3, 4).floor(), BigInt::from(-1));
        assert_eq!(rat(-3, 4).ceil(), BigInt::from(0));
        assert_eq!(rat(3, 1).floor(), BigInt::from(3));
        assert_eq!(rat(3, 1).ceil(), BigInt::from(3));
    }

    #[test]
    fn parse_literals() {
        assert_eq!("-45/79".parse::<Rational>().unwrap(), rat(-45, 79));
        assert_eq!(" 7 ".parse::<Rational>().unwrap(), rat(7, 1));
        assert_eq!("+2/4".parse::<Rational>().unwrap(), rat(1, 2));
        assert!("1.5".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let huge = Rational::from_integer(i64::MAX);
        let sum = &huge + &huge;
        assert_eq!(sum.numer(), BigInt::from(i64::MAX) * 2);
        assert!(matches!(sum.0, Repr::Big(_)));
        let back = &sum - &huge;
        assert_eq!(back, huge);
        assert!(matches!(back.0, Repr::Small(_, _)));
        let min = Rational::from_integer(i64::MIN);
        assert_eq!((-&min).numer(), -BigInt::from(i64::MIN));
    }

    #[test]
    fn parse_display_big() {
        let s = "123456789012345678901234567891/2";
        let r: Rational = s.parse().unwrap();
        assert_eq!(r.to_string(), s);
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        prop_oneof![
            (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n, d)),
            (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Rational::new(n, d)),
            (any::<i64>(), any::<i64>(), 1i64..1000).prop_map(|(a, b, d)| {
                Rational::from_bigints(BigInt::from(a) * BigInt::from(b), BigInt::from(d))
            }),
        ]
    }

    proptest! {
        #[test]
        fn add_sub_roundtrip(a in arb_rational(), b in arb_rational()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn mul_div_roundtrip(a in arb_rational(), b in arb_rational()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(&(&a * &b) / &b, a);
        }

        #[test]
        fn agrees_with_bigrational(a in arb_rational(), b in arb_rational()) {
            let (x, y) = (BigRational::from(&a), BigRational::from(&b));
            prop_assert_eq!(BigRational::from(&(&a + &b)), &x + &y);
            prop_assert_eq!(BigRational::from(&(&a - &b)), &x - &y);
            prop_assert_eq!(BigRational::from(&(&a * &b)), &x * &y);
            if !b.is_zero() {
                prop_assert_eq!(BigRational::from(&(&a / &b)), &x / &y);
            }
            prop_assert_eq!(a.cmp(&b), x.cmp(&y));
            prop_assert_eq!(a.floor(), x.floor().to_integer());
            prop_assert_eq!(a.ceil(), x.ceil().to_integer());
        }

        #[test]
        fn display_parse_roundtrip(a in arb_rational()) {
            prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
        }

        #[test]
        fn small_order_matches_cross_multiplication(n1 in -1000i64..1000, d1 in 1i64..1000,
                                                    n2 in -1000i64..1000, d2 in 1i64..1000) {
            let expected = big(n1, d1).cmp(&big(n2, d2));
            prop_assert_eq!(Rational::new(n1, d1).cmp(&Rational::new(n2, d2)), expected);
        }
    }
}
