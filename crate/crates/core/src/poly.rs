//! Dense univariate polynomials in `x` over [`Rational`].
//!
//! Coefficients are stored in ascending order of power and are kept
//! normalized (no trailing zeros), so two polynomials are equal exactly when
//! their coefficient vectors are.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::exactmath::Rational;

/// Dense polynomial `sum_k coeffs[k] x^k`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "RawPoly")]
pub struct Poly {
    coeffs: Vec<Rational>,
}

#[derive(Deserialize)]
struct RawPoly {
    coeffs: Vec<Rational>,
}

impl From<RawPoly> for Poly {
    fn from(raw: RawPoly) -> Self {
        Poly::new(raw.coeffs)
    }
}

impl Poly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from integer coefficients, ascending powers.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    /// `c * x^power`
    pub fn monomial(c: Rational, power: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Poly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// If the polynomial is a single term `c x^k`, returns `(c, k)`.
    pub fn as_monomial(&self) -> Option<(&Rational, usize)> {
        let deg = self.degree()?;
        self.coeffs[..deg]
            .iter()
            .all(Rational::is_zero)
            .then(|| (&self.coeffs[deg], deg))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// `order`-th formal derivative with respect to `x`.
    pub fn derivative(&self, order: usize) -> Poly {
        if order >= self.coeffs.len() {
            return Poly::zero();
        }
        let coeffs = (order..self.coeffs.len())
            .map(|k| {
                // k (k-1) ... (k-order+1)
                let falling: Rational = (k - order + 1..=k).map(Rational::from).product();
                &self.coeffs[k] * &falling
            })
            .collect();
        Poly::new(coeffs)
    }

    /// `x^n p(1/x)`: the coefficient of `x^k` moves to `x^(n-k)`.
    pub fn reverse(&self, n: usize) -> Result<Poly> {
        match self.degree() {
            None => Ok(Poly::zero()),
            Some(d) if d > n => Err(domain(format!(
                "cannot reverse a degree-{d} polynomial to degree {n}"
            ))),
            Some(_) => {
                let mut coeffs = vec![Rational::zero(); n + 1];
                for (k, c) in self.coeffs.iter().enumerate() {
                    coeffs[n - k] = c.clone();
                }
                Ok(Poly::new(coeffs))
            }
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    /// Index of the lowest power where `self` and `other` differ.
    pub fn first_difference(&self, other: &Poly) -> Option<usize> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find(|&k| self.coeff(k) != other.coeff(k))
    }

    /// LaTeX rendering in descending powers, e.g. `x^{4}+6x^{3}+15x^{2}+15x`.
    pub fn to_latex(&self) -> String {
        self.render(
            |c| {
                if c.is_integer() {
                    c.to_string()
                } else {
                    format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
                }
            },
            |k| format!("x^{{{k}}}"),
        )
    }

    fn render(
        &self,
        coeff: impl Fn(&Rational) -> String,
        power: impl Fn(usize) -> String,
    ) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if k == 0 || !mag.is_one() {
                out.push_str(&coeff(&mag));
            }
            match k {
                0 => {}
                1 => out.push('x'),
                _ => out.push_str(&power(k)),
            }
        }
        out
    }
}

/// Plain-text rendering in descending powers, e.g. `3x^2+3x+1`.
/// Non-integer coefficients are parenthesized: `(1/2)x^2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.render(
            |c| {
                if c.is_integer() {
                    c.to_string()
                } else {
                    format!("({c})")
                }
            },
            |k| format!("x^{k}"),
        );
        f.write_str(&s)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Poly::new(coeffs)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |acc, p| acc + p)
    }
}
