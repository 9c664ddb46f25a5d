//! Exact verification of the identities tying the Bessel families to the
//! coefficient table, reported cell by cell.
//!
//! Every check compares an independent reference (`expected`) with the value
//! computed from the coefficient table under test (`actual`). The whole grid is
//! always evaluated, so a report lists every failing cell, not just the first.
//!
//! - [`Identity::Theorem1`]: for each `N`, the Taylor coefficients through `t^K` of
//!   `(d/dt)^N F` agree with those of `sum_i a_{i-N}(N, x) (1-2t)^(-i/2) F`.
//! - [`Identity::Theorem2`]: for each `(N, k)`,
//!   `p_{k+N} = sum_{i=N}^{2N-1} a_{i-N}(N, x) sum_{l=0}^{k} C(k, l) 2^l (i/2 + l - 1)_l p_{k-l}`
//!   with `(y)_l` the falling factorial.
//! - [`Identity::GenFunc`]: `n! [t^n] F = p_n`.
//! - [`Identity::Ode`]: `y_n` solves `x^2 y'' + 2(x+1) y' - n(n+1) y = 0`.
//! - [`Identity::ClosedForm`]: nested-sum value equals the table cell.
//! - [`Identity::RowSum`]: `sum_j a_j(N, x) = p_N`.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::bessel::{ode_residual_y, BesselFamily, FamilyKind};
use crate::coeffs::{coeff_closed_form, coeffs_recurrence, CoeffTable};
use crate::error::{domain, Result};
use crate::exactmath::{binomial, factorial, falling_factorial, Rational};
use crate::poly::Poly;
use crate::series::{binom_series, generating_function, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Identity {
    Theorem1,
    Theorem2,
    GenFunc,
    #[serde(rename = "ODE")]
    Ode,
    ClosedForm,
    RowSum,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Theorem1 => "Theorem1",
            Identity::Theorem2 => "Theorem2",
            Identity::GenFunc => "GenFunc",
            Identity::Ode => "ODE",
            Identity::ClosedForm => "ClosedForm",
            Identity::RowSum => "RowSum",
        }
    }
}

/// Named parameters of one grid cell, serialized as a JSON object in
/// insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params(Vec<(&'static str, usize)>);

impl Params {
    pub fn new(pairs: &[(&'static str, usize)]) -> Self {
        Params(pairs.to_vec())
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.0.iter().find(|(k, _)| *k == name).map(|&(_, v)| v)
    }

    pub fn pairs(&self) -> &[(&'static str, usize)] {
        &self.0
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<_> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// A failing cell. `index` is the lowest power where `expected` and `actual`
/// first differ (a power of `t` for [`Identity::Theorem1`], of `x` otherwise).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub params: Params,
    pub index: usize,
    pub expected: Poly,
    pub actual: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub identity: Identity,
    pub grid: Vec<Params>,
    pub passed: bool,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    fn new(identity: Identity) -> Self {
        VerifyReport {
            identity,
            grid: Vec::new(),
            passed: true,
            failures: Vec::new(),
        }
    }

    fn check_poly(&mut self, params: Params, expected: Poly, actual: Poly) {
        if let Some(index) = expected.first_difference(&actual) {
            self.failures.push(Failure {
                params: params.clone(),
                index,
                expected,
                actual,
            });
        }
        self.grid.push(params);
        self.passed = self.failures.is_empty();
    }

    fn check_series(&mut self, params: Params, expected: &Series, actual: &Series) {
        let mismatch = expected
            .coeffs()
            .iter()
            .zip(actual.coeffs())
            .position(|(e, a)| e != a);
        if let Some(index) = mismatch {
            self.failures.push(Failure {
                params: params.clone(),
                index,
                expected: expected.coeff(index).clone(),
                actual: actual.coeff(index).clone(),
            });
        }
        self.grid.push(params);
        self.passed = self.failures.is_empty();
    }
}

/// Shared inputs for a batch of checks: the table under test plus memoized
/// reverse Bessel polynomials and generating-function terms.
pub struct Verifier {
    table: CoeffTable,
    p: BesselFamily,
    gf: Series,
}

impl Verifier {
    /// `p_n` is precomputed for `n <= max_p`, and `F` through `t^max_order`.
    pub fn new(table: CoeffTable, max_p: usize, max_order: usize) -> Self {
        Verifier {
            table,
            p: BesselFamily::new(FamilyKind::P, max_p),
            gf: generating_function(max_order),
        }
    }

    pub fn table(&self) -> &CoeffTable {
        &self.table
    }

    fn row(&self, n: usize) -> Result<&[Poly]> {
        self.table
            .row(n)
            .ok_or_else(|| domain(format!("coefficient table has no row N={n}")))
    }

    fn p(&self, n: usize) -> Result<&Poly> {
        self.p
            .polys()
            .get(n)
            .ok_or_else(|| domain(format!("p_{n} was not precomputed")))
    }

    fn gf(&self, order: usize) -> Result<Series> {
        if order > self.gf.order() {
            return Err(domain(format!(
                "generating function was not expanded to order {order}"
            )));
        }
        Ok(self.gf.truncate(order))
    }

    /// Left and right sides of the derivative identity for one `N`, through `t^order`.
    pub fn theorem1_sides(&self, n: usize, order: usize) -> Result<(Series, Series)> {
        let lhs = self.gf(order + n)?.derivative_t(n)?;
        let row = self.row(n)?;
        let mut weight = Series::zero(order);
        for (m, a) in row.iter().enumerate() {
            let i = (n + m) as i64;
            let expo = Rational::new(-i, 2)?;
            weight = &weight + &binom_series(&expo, order).scale(a);
        }
        let rhs = &weight * &self.gf(order)?;
        Ok((lhs, rhs))
    }

    /// Right side of the polynomial recurrence identity for `(N, k)`.
    pub fn theorem2_rhs(&self, n: usize, k: usize) -> Result<Poly> {
        let row = self.row(n)?;
        // inner[l] depends on i only through the falling factorial, so the
        // p_{k-l} and binomial factors are shared across i.
        let shared: Vec<Poly> = (0..=k)
            .map(|l| {
                let scale =
                    Rational::from(binomial(k as u64, l as u64)) * Rational::from(2).pow(l as u32);
                Ok(self.p(k - l)?.scale(&scale))
            })
            .collect::<Result<_>>()?;
        let mut total = Poly::zero();
        for (m, a) in row.iter().enumerate() {
            let half_i = Rational::new((n + m) as i64, 2)?;
            let inner: Poly = shared
                .iter()
                .enumerate()
                .map(|(l, base)| {
                    let arg = &half_i + &Rational::from(l as i64 - 1);
                    base.scale(&falling_factorial(&arg, l as u32))
                })
                .sum();
            total = total + a * &inner;
        }
        Ok(total)
    }

    pub fn theorem1(
        &self,
        ns: impl IntoIterator<Item = usize>,
        order: usize,
    ) -> Result<VerifyReport> {
        let mut report = VerifyReport::new(Identity::Theorem1);
        for n in ns {
            let (lhs, rhs) = self.theorem1_sides(n, order)?;
            report.check_series(Params::new(&[("N", n), ("K", order)]), &lhs, &rhs);
        }
        Ok(report)
    }

    pub fn theorem2(
        &self,
        ns: impl IntoIterator<Item = usize>,
        ks: impl IntoIterator<Item = usize> + Clone,
    ) -> Result<VerifyReport> {
        let mut report = VerifyReport::new(Identity::Theorem2);
        for n in ns {
            for k in ks.clone() {
                let expected = self.p(k + n)?.clone();
                let actual = self.theorem2_rhs(n, k)?;
                report.check_poly(Params::new(&[("N", n), ("k", k)]), expected, actual);
            }
        }
        Ok(report)
    }

    pub fn gen_func(&self, order: usize) -> Result<VerifyReport> {
        let mut report = VerifyReport::new(Identity::GenFunc);
        let gf = self.gf(order)?;
        for n in 0..=order {
            let actual = gf.coeff(n).scale(&Rational::from(factorial(n as u64)));
            report.check_poly(Params::new(&[("n", n)]), self.p(n)?.clone(), actual);
        }
        Ok(report)
    }

    pub fn ode(&self, n_max: usize) -> VerifyReport {
        let mut report = VerifyReport::new(Identity::Ode);
        for n in 0..=n_max {
            report.check_poly(Params::new(&[("n", n)]), Poly::zero(), ode_residual_y(n));
        }
        report
    }

    pub fn closed_form(&self, n_max: usize) -> Result<VerifyReport> {
        let mut report = VerifyReport::new(Identity::ClosedForm);
        for n in 1..=n_max {
            let row = self.row(n)?;
            for (j, cell) in row.iter().enumerate() {
                report.check_poly(
                    Params::new(&[("N", n), ("j", j)]),
                    coeff_closed_form(n, j)?,
                    cell.clone(),
                );
            }
        }
        Ok(report)
    }

    pub fn row_sum(&self, n_max: usize) -> Result<VerifyReport> {
        let mut report = VerifyReport::new(Identity::RowSum);
        for n in 1..=n_max {
            let actual = self.row(n)?.iter().cloned().sum();
            report.check_poly(Params::new(&[("N", n)]), self.p(n)?.clone(), actual);
        }
        Ok(report)
    }
}

/// Checks the derivative identity for a single `N` through `t^order`.
pub fn verify_theorem1(n: usize, order: usize) -> Result<VerifyReport> {
    if n < 1 {
        return Err(domain("N must be at least 1"));
    }
    let v = Verifier::new(coeffs_recurrence(n)?, 0, order + n);
    v.theorem1([n], order)
}

/// Checks the polynomial recurrence identity for a single `(N, k)`.
pub fn verify_theorem2(n: usize, k: usize) -> Result<VerifyReport> {
    if n < 1 {
        return Err(domain("N must be at least 1"));
    }
    let v = Verifier::new(coeffs_recurrence(n)?, n + k, 0);
    v.theorem2([n], [k])
}

/// Every check over the standard grid, against the recurrence-built table.
pub fn verify_all(n_max: usize, k_max: usize, order: usize) -> Result<Vec<VerifyReport>> {
    verify_all_with_table(coeffs_recurrence(n_max.max(1))?, n_max, k_max, order)
}

/// Every check over the standard grid, against a caller-supplied table
/// (which must cover `N <= n_max`):
/// ODE for `n <= n_max`, generating function for `n <= order`, closed form and
/// row sums for `N <= n_max`, the derivative identity for `N <= n_max` at order
/// `order`, and the recurrence identity for `N <= n_max`, `k <= k_max`.
pub fn verify_all_with_table(
    table: CoeffTable,
    n_max: usize,
    k_max: usize,
    order: usize,
) -> Result<Vec<VerifyReport>> {
    if n_max < 1 {
        return Err(domain("n_max must be at least 1"));
    }
    if table.n_max() < n_max {
        return Err(domain(format!(
            "table covers N <= {}, need {n_max}",
            table.n_max()
        )));
    }
    let v = Verifier::new(table, (n_max + k_max).max(order), order + n_max);
    Ok(vec![
        v.ode(n_max),
        v.gen_func(order)?,
        v.closed_form(n_max)?,
        v.row_sum(n_max)?,
        v.theorem1(1..=n_max, order)?,
        v.theorem2(1..=n_max, 0..=k_max)?,
    ])
}
