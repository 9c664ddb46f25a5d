//! Truncated formal power series in `t` whose coefficients are polynomials
//! in `x`.
//!
//! A [`Series`] of order `K` stores and vouches for the coefficients of
//! `t^0 ..= t^K`. Binary operations on series of different orders truncate to
//! the smaller one, so a result never claims more precision than its inputs.

use std::ops::{Add, Mul, Sub};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{domain, Result};
use crate::exactmath::{factorial, falling_factorial, Rational};
use crate::poly::Poly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<Poly>,
}

impl Series {
    /// Builds a series of order `order`, padding with zeros or dropping
    /// terms past `t^order`.
    pub fn from_polys(mut coeffs: Vec<Poly>, order: usize) -> Self {
        coeffs.resize(order + 1, Poly::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::from_polys(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Series::from_polys(vec![Poly::one()], order)
    }

    /// The series `t`, truncated at `order`.
    pub fn t(order: usize) -> Self {
        Series::from_polys(vec![Poly::zero(), Poly::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Coefficient of `t^k`.
    ///
    /// # Panics
    /// If `k` exceeds the truncation order.
    pub fn coeff(&self, k: usize) -> &Poly {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series::from_polys(
            self.coeffs[..=order.min(self.order())].to_vec(),
            order.min(self.order()),
        )
    }

    pub fn scale(&self, p: &Poly) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// `n`-th derivative in `t`; the order drops by `n`.
    pub fn derivative_t(&self, n: usize) -> Result<Series> {
        if n > self.order() {
            return Err(domain(format!(
                "cannot differentiate {n} times a series of order {}",
                self.order()
            )));
        }
        let coeffs = (n..=self.order())
            .map(|k| {
                // (k)_n = k! / (k-n)!
                let falling = factorial(k as u64) / factorial((k - n) as u64);
                self.coeffs[k].scale(&Rational::from(falling))
            })
            .collect();
        Ok(Series { coeffs })
    }

    /// `exp(x u(t))` truncated at `order`, for a `u` with constant
    /// coefficients and zero constant term.
    pub fn exp_x_scaled(u: &Series, order: usize) -> Result<Series> {
        if !u.coeffs[0].is_zero() {
            return Err(domain("exp argument must have zero constant term"));
        }
        if let Some(k) = u.coeffs.iter().position(|c| c.degree().unwrap_or(0) > 0) {
            return Err(domain(format!(
                "exp argument coefficient of t^{k} is not constant"
            )));
        }
        let order = order.min(u.order());
        let u = u.truncate(order);
        let mut acc = Series::one(order);
        let mut power = Series::one(order);
        // u has valuation >= 1, so u^m vanishes below t^m and m <= order suffices.
        for m in 1..=order {
            power = &power * &u;
            let weight = Poly::monomial(
                Rational::new(1, factorial(m as u64)).expect("factorial is nonzero"),
                m,
            );
            acc = &acc + &power.scale(&weight);
        }
        Ok(acc)
    }
}

/// Cauchy product truncated at the smaller order.
pub fn series_mul(a: &Series, b: &Series) -> Series {
    let order = a.order().min(b.order());
    let coeffs = (0..=order)
        .map(|k| (0..=k).map(|l| &a.coeffs[l] * &b.coeffs[k - l]).sum())
        .collect();
    Series { coeffs }
}

/// Expansion of `(1 - 2t)^e` through `t^order`:
/// the `t^l` coefficient is `(e)_l (-2)^l / l!` with `(e)_l` the falling factorial.
pub fn binom_series(e: &Rational, order: usize) -> Series {
    let coeffs = (0..=order)
        .map(|l| {
            let c = falling_factorial(e, l as u32) * Rational::from(-2).pow(l as u32);
            let c = c
                .checked_div(&Rational::from(factorial(l as u64)))
                .expect("factorial is nonzero");
            Poly::constant(c)
        })
        .collect();
    Series { coeffs }
}

/// `sqrt(1 - 2t)` through `t^order`.
pub fn sqrt_one_minus_2t(order: usize) -> Series {
    binom_series(&Rational::new(1, 2).expect("nonzero denominator"), order)
}

/// `F(t, x) = exp(x (1 - sqrt(1 - 2t)))` through `t^order`. The coefficient of
/// `t^k` is `p_k(x) / k!`.
pub fn generating_function(order: usize) -> Series {
    let u = &Series::one(order) - &sqrt_one_minus_2t(order);
    Series::exp_x_scaled(&u, order)
        .expect("1 - sqrt(1 - 2t) has constant coefficients and no constant term")
}

impl Mul<&Series> for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        series_mul(self, rhs)
    }
}

impl Add<&Series> for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
            .collect();
        Series { coeffs }
    }
}

impl Sub<&Series> for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
            .collect();
        Series { coeffs }
    }
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Series", 2)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("terms", &self.coeffs)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::binomial;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn consts(cs: &[Rational]) -> Series {
        Series::from_polys(
            cs.iter().cloned().map(Poly::constant).collect(),
            cs.len() - 1,
        )
    }

    fn int_consts(cs: &[i64]) -> Series {
        consts(&cs.iter().map(|&c| Rational::from(c)).collect::<Vec<_>>())
    }

    #[test]
    fn cauchy_product() {
        let a = int_consts(&[1, 1, 0]);
        let b = int_consts(&[1, -1, 0]);
        assert_eq!(&a * &b, int_consts(&[1, 0, -1]));
        let s = generating_function(5);
        assert_eq!(&s * &Series::one(5), s);
    }

    #[test]
    fn product_truncates_to_weaker_order() {
        let a = int_consts(&[1, 1, 1, 1]);
        let b = int_consts(&[1, 1]);
        assert_eq!((&a * &b).order(), 1);
        assert_eq!((&a + &b).order(), 1);
    }

    #[test]
    fn constant_terms_multiply() {
        let prod = &generating_function(4) * &binom_series(&q(-1, 2), 4);
        assert_eq!(prod.coeff(0), &Poly::one());
    }

    #[test]
    fn t_derivatives() {
        let t2 = Series::from_polys(vec![Poly::zero(), Poly::zero(), Poly::one()], 2);
        let d = t2.derivative_t(1).unwrap();
        assert_eq!(d.order(), 1);
        assert_eq!(
            d,
            Series::from_polys(vec![Poly::zero(), Poly::from_ints(&[2])], 1)
        );
        assert_eq!(t2.derivative_t(0).unwrap(), t2);
        assert!(t2.derivative_t(3).is_err());
    }

    #[test]
    fn binomial_expansions() {
        assert_eq!(binom_series(&Rational::one(), 2), int_consts(&[1, -2, 0]));
        assert_eq!(
            binom_series(&q(-1, 2), 2),
            consts(&[q(1, 1), q(1, 1), q(3, 2)])
        );
        assert_eq!(binom_series(&q(7, 3), 0), Series::one(0));
    }

    /// Independent term formula: the t^l coefficient of (1 - 2t)^(-1/2) is
    /// C(2l, l) / 2^l.
    #[test]
    fn inverse_sqrt_matches_central_binomials() {
        let s = binom_series(&q(-1, 2), 12);
        for l in 0..=12u64 {
            let expected =
                Rational::new(binomial(2 * l, l), num_bigint::BigInt::from(1u64 << l)).unwrap();
            assert_eq!(s.coeff(l as usize), &Poly::constant(expected), "l = {l}");
        }
        // Squaring gives the geometric series of 2t.
        let sq = &s * &s;
        for l in 0..=12usize {
            assert_eq!(sq.coeff(l), &Poly::constant(Rational::from(1i64 << l)));
        }
    }

    #[test]
    fn square_root_squares_back() {
        let r = sqrt_one_minus_2t(10);
        assert_eq!(r.coeff(0), &Poly::one());
        assert_eq!(r.coeff(1), &Poly::constant(Rational::from(-1)));
        let mut expected = vec![Rational::one(), Rational::from(-2)];
        expected.resize(11, Rational::zero());
        assert_eq!(&r * &r, consts(&expected));
        assert_eq!(sqrt_one_minus_2t(0), Series::one(0));
    }

    #[test]
    fn exponent_additivity() {
        let exps = [
            q(1, 2),
            q(-1, 2),
            q(1, 1),
            q(-1, 1),
            q(3, 2),
            q(-3, 2),
            q(-5, 2),
        ];
        for a in &exps {
            for b in &exps {
                let lhs = &binom_series(a, 16) * &binom_series(b, 16);
                assert_eq!(lhs, binom_series(&(a + b), 16), "a = {a}, b = {b}");
            }
        }
    }

    #[test]
    fn exp_of_t() {
        let e = Series::exp_x_scaled(&Series::t(2), 2).unwrap();
        let expected =
            Series::from_polys(vec![Poly::one(), Poly::x(), Poly::monomial(q(1, 2), 2)], 2);
        assert_eq!(e, expected);
        assert_eq!(
            Series::exp_x_scaled(&Series::zero(3), 3).unwrap(),
            Series::one(3)
        );
    }

    #[test]
    fn exp_rejects_bad_arguments() {
        assert!(Series::exp_x_scaled(&Series::one(3), 3).is_err());
        let xt = Series::t(3).scale(&Poly::x());
        assert!(Series::exp_x_scaled(&xt, 3).is_err());
    }

    #[test]
    fn generating_function_low_terms() {
        let u = &Series::one(4) - &sqrt_one_minus_2t(4);
        let e = Series::exp_x_scaled(&u, 4).unwrap();
        assert_eq!(e.coeff(2), &Poly::from_ints(&[0, 1, 1]).scale(&q(1, 2)));

        let f = generating_function(4);
        assert_eq!(f.coeff(0), &Poly::one());
        assert_eq!(f.coeff(1), &Poly::x());
        assert_eq!(
            f.coeff(4).scale(&Rational::from(24)),
            Poly::from_ints(&[0, 15, 15, 6, 1])
        );
    }

    #[test]
    fn generating_function_first_derivative() {
        // F' = x (1 - 2t)^(-1/2) F
        let k = 14;
        let f = generating_function(k + 1);
        let lhs = f.derivative_t(1).unwrap();
        let rhs = (&binom_series(&q(-1, 2), k) * &generating_function(k)).scale(&Poly::x());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_dump() {
        let s = serde_json::to_string(&Series::t(1)).unwrap();
        assert_eq!(s, r#"{"order":1,"terms":[{"coeffs":[]},{"coeffs":["1"]}]}"#);
    }
}
