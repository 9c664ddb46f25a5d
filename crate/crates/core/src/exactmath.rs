//! Exact rational scalars and the small combinatorial toolkit the polynomial
//! families are built from.
//!
//! [`Rational`] wraps an arbitrary-precision ratio that is always stored in
//! lowest terms with a positive denominator, so `==` is structural equality.
//! It serializes as the string `"p/q"`, or `"p"` when the denominator is one.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Error, Result};

/// Arbitrary-precision rational number in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom`, reducing and moving the sign to the numerator.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// The integer value, if the denominator is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    /// `self^exp` for a non-negative exponent.
    pub fn pow(&self, exp: u32) -> Rational {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }
}

pub fn rat_add(a: &Rational, b: &Rational) -> Rational {
    a + b
}

pub fn rat_sub(a: &Rational, b: &Rational) -> Rational {
    a - b
}

pub fn rat_mul(a: &Rational, b: &Rational) -> Rational {
    a * b
}

pub fn rat_div(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_div(b)
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_owned());
        let s_trim = s.trim();
        match s_trim.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Rational::new(n, d)
            }
            None => {
                let n: BigInt = s_trim.parse().map_err(|_| bad())?;
                Ok(Rational::from_integer(n))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::from_integer(n)
            }
        }
    )*};
}
from_int!(i32, i64, u32, u64, usize);

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $assign_tr:ident, $assign:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $assign_tr<&Rational> for Rational {
            fn $assign(&mut self, rhs: &Rational) {
                self.0.$assign(&rhs.0);
            }
        }
    };
}
binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// `n!`
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `n!!` for `n >= -1`, with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> Result<BigInt> {
    if n < -1 {
        return Err(domain(format!("double factorial is undefined for n = {n}")));
    }
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(acc)
}

/// Falling factorial `x (x-1) ... (x-n+1)`; the empty product for `n = 0` is one.
pub fn falling_factorial(x: &Rational, n: u32) -> Rational {
    (0..n).map(|k| x - &Rational::from(k)).product()
}

/// Binomial coefficient `C(k, l)`, zero when `l > k`.
pub fn binomial(k: u64, l: u64) -> BigInt {
    if l > k {
        return BigInt::zero();
    }
    let l = l.min(k - l);
    // Running product stays integral: after step i it equals C(k - l + i, i).
    (1..=l).fold(BigInt::one(), |acc, i| acc * (k - l + i) / i)
}

/// Number of ways to write a non-negative integer tuple of `parts` entries
/// with sum at most `bound` (the index set of a `parts`-fold nested sum).
pub fn bounded_compositions(parts: u64, bound: u64) -> BigInt {
    if parts == 0 {
        return BigInt::one();
    }
    binomial(bound + parts, parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
        a.gcd(b)
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn field_arithmetic() {
        assert_eq!(rat_add(&r(1, 2), &r(1, 3)), r(5, 6));
        assert_eq!(rat_mul(&r(0, 1), &r(7, 3)), r(0, 1));
        assert_eq!(rat_div(&r(3, 4), &r(3, 4)).unwrap(), r(1, 1));
        assert_eq!(rat_sub(&r(1, 2), &r(1, 2)), Rational::zero());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            rat_div(&r(1, 2), &Rational::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(Rational::new(1, 0), Err(Error::DivisionByZero));
        assert!(Rational::zero().recip().is_err());
    }

    #[test]
    fn canonical_form() {
        let x = r(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        let z = r(0, -17);
        assert_eq!(z.denom(), &BigInt::one());
        assert_eq!(z, Rational::zero());
        assert_eq!(gcd(x.numer(), x.denom()), BigInt::one());
    }

    #[test]
    fn string_form() {
        assert_eq!(r(5, 6).to_string(), "5/6");
        assert_eq!(r(-4, 2).to_string(), "-2");
        assert_eq!(Rational::zero().to_string(), "0");
        assert_eq!("10/-4".parse::<Rational>().unwrap(), r(-5, 2));
        assert_eq!("7".parse::<Rational>().unwrap(), r(7, 1));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert_eq!(serde_json::to_string(&r(3, 4)).unwrap(), "\"3/4\"");
    }

    #[test]
    fn double_factorial_values() {
        assert_eq!(double_factorial(-1).unwrap(), BigInt::one());
        assert_eq!(double_factorial(0).unwrap(), BigInt::one());
        assert_eq!(double_factorial(5).unwrap(), BigInt::from(15));
        assert_eq!(double_factorial(6).unwrap(), BigInt::from(48));
        assert!(double_factorial(-2).is_err());
    }

    #[test]
    fn double_factorial_pairs_multiply_to_factorial() {
        for n in 1..=40i64 {
            let lhs = double_factorial(n).unwrap() * double_factorial(n - 1).unwrap();
            assert_eq!(lhs, factorial(n as u64), "n = {n}");
        }
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(&r(5, 2), 0), Rational::one());
        assert_eq!(falling_factorial(&r(3, 1), 2), r(6, 1));
        assert_eq!(falling_factorial(&r(5, 2), 2), r(15, 4));
    }

    #[test]
    fn falling_factorial_step() {
        let x = r(-7, 3);
        for n in 1..15u32 {
            let step = falling_factorial(&x, n - 1) * (&x - &Rational::from(n - 1));
            assert_eq!(falling_factorial(&x, n), step);
        }
    }

    #[test]
    fn half_integer_falling_factorial_times_power_of_two_is_integral() {
        for i in 1..=20i64 {
            for l in 0..=20u32 {
                let arg = r(i, 2) + Rational::from(l) - Rational::one();
                let v = falling_factorial(&arg, l) * Rational::from(2).pow(l);
                assert!(v.is_integer(), "i = {i}, l = {l}: {v}");
            }
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 0), BigInt::one());
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(9, 5), BigInt::from(126));
    }

    #[test]
    fn binomial_matches_factorials() {
        for k in 0..30u64 {
            for l in 0..=k {
                assert_eq!(
                    binomial(k, l),
                    factorial(k) / (factorial(l) * factorial(k - l))
                );
            }
        }
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..200).prop_map(|(n, d)| r(n, d))
    }

    proptest! {
        #[test]
        fn add_commutes(a in small_rational(), b in small_rational()) {
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn mul_distributes(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn results_stay_reduced(a in small_rational(), b in small_rational()) {
            for v in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(v.denom() > &BigInt::zero());
                prop_assert!(gcd(v.numer(), v.denom()).is_one());
            }
        }

        #[test]
        fn string_round_trip(a in small_rational()) {
            prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
        }
    }
}
