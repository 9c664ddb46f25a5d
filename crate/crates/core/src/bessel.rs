//! Bessel polynomials `y_n(x)` and reverse Bessel polynomials `p_n(x)`.
//!
//! `p_n` can be built three ways, and the test suites check that they agree:
//! the explicit coefficient sum ([`p_poly`]), reversal of `y_{n-1}`
//! ([`p_via_reversal`]), and a terminating confluent hypergeometric series
//! ([`p_via_1f1`]). `p_0 = 1` comes from the constant term of the generating
//! function, so the reversal and hypergeometric routes start at `n = 1`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{domain, Result};
use crate::exactmath::{double_factorial, factorial, Rational};
use crate::poly::Poly;

/// `y_n(x) = sum_{k=0}^{n} (n+k)! / ((n-k)! k! 2^k) x^k`.
pub fn y_poly(n: usize) -> Poly {
    let n = n as u64;
    let coeffs = (0..=n)
        .map(|k| {
            let num = factorial(n + k);
            let den = factorial(n - k) * factorial(k) * (BigInt::one() << k);
            Rational::new(num, den).expect("nonzero denominator")
        })
        .collect();
    Poly::new(coeffs)
}

/// `p_n(x) = sum_{k=1}^{n} (2n-k-1)! / (2^{n-k} (k-1)! (n-k)!) x^k`, and `p_0 = 1`.
pub fn p_poly(n: usize) -> Poly {
    if n == 0 {
        return Poly::one();
    }
    let n = n as u64;
    let mut coeffs = vec![Rational::zero()];
    coeffs.extend((1..=n).map(|k| {
        let num = factorial(2 * n - k - 1);
        let den = (BigInt::one() << (n - k)) * factorial(k - 1) * factorial(n - k);
        Rational::new(num, den).expect("nonzero denominator")
    }));
    Poly::new(coeffs)
}

/// `p_n(x) = x^n y_{n-1}(1/x)` for `n >= 1`.
pub fn p_via_reversal(n: usize) -> Result<Poly> {
    if n == 0 {
        return Err(domain("reversal route needs n >= 1"));
    }
    y_poly(n - 1).reverse(n)
}

/// `p_n(x) = (2n-3)!! x 1F1(1-n; 2-2n; 2x)` for `n >= 1`.
pub fn p_via_1f1(n: usize) -> Result<Poly> {
    if n == 0 {
        return Err(domain("hypergeometric route needs n >= 1"));
    }
    let n = n as i64;
    let series = hyp1f1_terminating(1 - n, 2 - 2 * n, &Rational::from(2))?;
    let lead = Rational::from(double_factorial(2 * n - 3)?);
    Ok(series.shift(1).scale(&lead))
}

/// `1F1(a; b; c x)` for a non-positive integer `a`, as a polynomial in `x`.
///
/// Terms are built by the ratio `(a+k) c / ((b+k)(k+1))`, so the series stops
/// once the numerator parameter reaches zero. Fails if the denominator
/// parameter reaches zero first.
pub fn hyp1f1_terminating(a: i64, b: i64, c: &Rational) -> Result<Poly> {
    if a > 0 {
        return Err(domain(format!(
            "numerator parameter {a} does not terminate the series"
        )));
    }
    let mut coeffs = Vec::with_capacity((1 - a) as usize);
    let mut term = Rational::one();
    for k in 0..=(-a) {
        coeffs.push(term.clone());
        if a + k == 0 {
            break;
        }
        let denom = Rational::from((b + k) * (k + 1));
        if denom.is_zero() {
            return Err(domain(format!(
                "denominator parameter {b} hits zero before termination"
            )));
        }
        term = (term * Rational::from(a + k) * c).checked_div(&denom)?;
    }
    Ok(Poly::new(coeffs))
}

/// `x^2 y_n'' + 2 (x + 1) y_n' - n (n + 1) y_n`, which vanishes identically.
pub fn ode_residual_y(n: usize) -> Poly {
    ode_residual(&y_poly(n), n)
}

/// Residual of the Bessel-polynomial differential equation for an arbitrary
/// candidate `y` at index `n`.
pub fn ode_residual(y: &Poly, n: usize) -> Poly {
    let x2 = Poly::monomial(Rational::one(), 2);
    let two_x_plus_2 = Poly::from_ints(&[2, 2]);
    let eigen = Rational::from(n * (n + 1));
    &(&(&x2 * &y.derivative(2)) + &(&two_x_plus_2 * &y.derivative(1))) - &y.scale(&eigen)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum FamilyKind {
    /// Bessel polynomials `y_n`.
    Y,
    /// Reverse Bessel polynomials `p_n`.
    P,
}

/// `y_0 ..= y_max_n` or `p_0 ..= p_max_n`, built once and read many times.
#[derive(Clone, Debug)]
pub struct BesselFamily {
    kind: FamilyKind,
    polys: Vec<Poly>,
}

impl BesselFamily {
    pub fn new(kind: FamilyKind, max_n: usize) -> Self {
        let build = match kind {
            FamilyKind::Y => y_poly,
            FamilyKind::P => p_poly,
        };
        BesselFamily {
            kind,
            polys: (0..=max_n).map(build).collect(),
        }
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn max_n(&self) -> usize {
        self.polys.len() - 1
    }

    /// # Panics
    /// If `n > max_n`.
    pub fn get(&self, n: usize) -> &Poly {
        &self.polys[n]
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }
}
