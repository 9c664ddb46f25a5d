//! Exact-arithmetic toolkit for Bessel polynomials `y_n(x)`, reverse Bessel
//! polynomials `p_n(x)`, and the coefficient family `a_j(N, x)` that expresses
//! every `t`-derivative of the generating function
//! `F(t, x) = exp(x (1 - sqrt(1 - 2t)))` as
//!
//! ```text
//! F^(N) = ( sum_{i=N}^{2N-1} a_{i-N}(N, x) (1 - 2t)^(-i/2) ) F
//! ```
//!
//! Everything is computed over exact rationals, so every identity check is a
//! structural equality test with no tolerance.
//!
//! - [`exactmath`]: [`Rational`] scalars and combinatorial primitives
//! - [`poly`]: dense polynomials in `x`
//! - [`series`]: truncated power series in `t` with polynomial coefficients
//! - [`bessel`]: `y_n` and `p_n` by every available construction, plus the ODE residual
//! - [`coeffs`]: the `a_j(N, x)` table by recurrence and by nested-sum closed form
//! - [`identities`]: verification reports for the derivative and recurrence identities
//! - [`cli`]: the command-line front end used by the `bessel-identities` binary
//!
//! ```
//! use bessel_identities::{bessel, coeffs};
//!
//! let table = coeffs::coeffs_recurrence(4).unwrap();
//! assert_eq!(table.row_sum(4).unwrap(), bessel::p_poly(4));
//! assert_eq!(bessel::p_poly(4).to_string(), "x^4+6x^3+15x^2+15x");
//! ```

pub mod bessel;
pub mod cli;
pub mod coeffs;
mod error;
pub mod exactmath;
pub mod identities;
pub mod poly;
pub mod series;

pub use error::{Error, Result};
pub use exactmath::Rational;
pub use poly::Poly;
pub use series::Series;
