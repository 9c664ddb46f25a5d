//! The coefficient family `a_j(N, x)`, `0 <= j <= N-1`, defined by
//!
//! ```text
//! (d/dt)^N F = ( sum_{i=N}^{2N-1} a_{i-N}(N, x) (1 - 2t)^(-i/2) ) F,
//! F(t, x) = exp(x (1 - sqrt(1 - 2t))).
//! ```
//!
//! [`coeffs_recurrence`] builds the table row by row from `a_0(1, x) = x`:
//!
//! ```text
//! a_0(N+1)     = x a_0(N)
//! a_N(N+1)     = (2N-1) a_{N-1}(N)
//! a_{i-N}(N+1) = (i-1) a_{i-N-1}(N) + x a_{i-N}(N),   N+1 <= i <= 2N-1
//! ```
//!
//! [`coeff_closed_form`] evaluates the explicit nested sum independently,
//!
//! ```text
//! a_j(N) = x^{N-j} sum_{i_j=0}^{N-j-1} ... sum_{i_1=0}^{N-j-1-i_j-...-i_2}
//!          prod_{k=1}^{j} (N - i_j - ... - i_k - (j - 2k + 2)),
//! ```
//!
//! whose index set is every tuple `(i_1, ..., i_j)` of non-negative integers
//! with sum at most `N - j - 1`. Its cost grows like `C(N-1, j)`; the recurrence
//! is the construction used everywhere else.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{domain, Result};
use crate::exactmath::{double_factorial, Rational};
use crate::poly::Poly;

/// Triangular table of `a_j(N, x)` for `1 <= N <= n_max`, `0 <= j <= N-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    // rows[N - 1][j] = a_j(N, x)
    rows: Vec<Vec<Poly>>,
}

impl CoeffTable {
    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    /// `a_0(N, x) ..= a_{N-1}(N, x)`, or `None` if `N` is outside the table.
    pub fn row(&self, n: usize) -> Option<&[Poly]> {
        n.checked_sub(1)
            .and_then(|i| self.rows.get(i))
            .map(Vec::as_slice)
    }

    /// `a_j(N, x)`, or `None` outside the triangle.
    pub fn get(&self, n: usize, j: usize) -> Option<&Poly> {
        self.row(n)?.get(j)
    }

    /// `sum_j a_j(N, x)`; equals `p_N(x)`.
    pub fn row_sum(&self, n: usize) -> Option<Poly> {
        self.row(n).map(|r| r.iter().cloned().sum())
    }

    /// Copy of the table with `delta` added to cell `(N, j)`. Used to build
    /// deliberately broken fixtures for the verifier.
    pub fn with_cell_offset(&self, n: usize, j: usize, delta: &Poly) -> Result<CoeffTable> {
        let mut out = self.clone();
        let cell = n
            .checked_sub(1)
            .and_then(|i| out.rows.get_mut(i))
            .and_then(|r| r.get_mut(j))
            .ok_or_else(|| domain(format!("cell (N={n}, j={j}) is outside the table")))?;
        *cell = &*cell + delta;
        Ok(out)
    }
}

#[derive(Serialize)]
struct ColumnJson<'a> {
    #[serde(rename = "N")]
    n: usize,
    a: &'a [Poly],
}

impl Serialize for CoeffTable {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let columns: Vec<_> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| ColumnJson { n: i + 1, a: r })
            .collect();
        let mut st = serializer.serialize_struct("CoeffTable", 2)?;
        st.serialize_field("n_max", &self.n_max())?;
        st.serialize_field("columns", &columns)?;
        st.end()
    }
}

/// Builds rows `1..=n_max` by the recurrence seeded with `a_0(1, x) = x`.
pub fn coeffs_recurrence(n_max: usize) -> Result<CoeffTable> {
    if n_max < 1 {
        return Err(domain("coefficient table needs n_max >= 1"));
    }
    let x = Poly::x();
    let mut rows = vec![vec![x.clone()]];
    for n in 1..n_max {
        let prev = &rows[n - 1];
        let mut next = Vec::with_capacity(n + 1);
        next.push(&x * &prev[0]);
        // index m = i - N runs over 1..=N-1
        for m in 1..n {
            let i = n + m;
            next.push(&prev[m - 1].scale(&Rational::from(i - 1)) + &(&x * &prev[m]));
        }
        next.push(prev[n - 1].scale(&Rational::from(2 * n - 1)));
        rows.push(next);
    }
    Ok(CoeffTable { rows })
}

/// Result of evaluating one nested-sum cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormCell {
    /// The integer `c` with `a_j(N, x) = c x^{N-j}`.
    pub coefficient: BigInt,
    /// Number of index tuples the nested sum visited.
    pub tuples: u64,
}

/// Calls `f` on every tuple of `parts` non-negative integers whose sum is at
/// most `bound`, in odometer order (first entry varies fastest). With
/// `parts == 0` the single empty tuple is visited.
pub fn for_each_bounded_composition(parts: usize, bound: u64, mut f: impl FnMut(&[u64])) {
    let mut digits = vec![0u64; parts];
    let mut sum = 0u64;
    loop {
        f(&digits);
        let mut pos = 0;
        loop {
            if pos == parts {
                return;
            }
            if sum < bound {
                digits[pos] += 1;
                sum += 1;
                break;
            }
            sum -= digits[pos];
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// Evaluates the nested sum for `a_j(N, x)` and counts the visited tuples.
pub fn closed_form_cell(n: usize, j: usize) -> Result<ClosedFormCell> {
    if n < 1 || j >= n {
        return Err(domain(format!(
            "a_j(N, x) needs 0 <= j <= N-1, got N={n}, j={j}"
        )));
    }
    let n_i = n as i64;
    let j_i = j as i64;
    let bound = (n - j - 1) as u64;
    let mut total = BigInt::zero();
    let mut tuples = 0u64;
    for_each_bounded_composition(j, bound, |idx| {
        tuples += 1;
        // idx[k - 1] = i_k; walk k = j..1 so the suffix sum i_j + ... + i_k grows by one term per step.
        let mut suffix = 0i64;
        let mut term = BigInt::one();
        for k in (1..=j).rev() {
            suffix += idx[k - 1] as i64;
            let k_i = k as i64;
            term *= n_i - suffix - (j_i - 2 * k_i + 2);
        }
        total += term;
    });
    Ok(ClosedFormCell {
        coefficient: total,
        tuples,
    })
}

/// `a_j(N, x)` from the nested-sum closed form.
pub fn coeff_closed_form(n: usize, j: usize) -> Result<Poly> {
    let cell = closed_form_cell(n, j)?;
    Ok(Poly::monomial(Rational::from(cell.coefficient), n - j))
}

/// Whole table from the closed form, cell by cell.
pub fn coeffs_closed_form(n_max: usize) -> Result<CoeffTable> {
    if n_max < 1 {
        return Err(domain("coefficient table needs n_max >= 1"));
    }
    let rows = (1..=n_max)
        .map(|n| {
            (0..n)
                .map(|j| coeff_closed_form(n, j))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoeffTable { rows })
}

/// `sum_{j=0}^{N-1} a_j(N, x)` from the recurrence.
pub fn coeff_sum_row(n: usize) -> Result<Poly> {
    let table = coeffs_recurrence(n)?;
    Ok(table.row_sum(n).expect("row N exists in a table of size N"))
}

/// Boundary values `a_0(N, x) = x^N` and `a_{N-1}(N, x) = (2N-3)!! x`.
pub fn boundary_cells(n: usize) -> Result<(Poly, Poly)> {
    if n < 1 {
        return Err(domain("boundary cells need N >= 1"));
    }
    let first = Poly::monomial(Rational::one(), n);
    let last = Poly::monomial(Rational::from(double_factorial(2 * n as i64 - 3)?), 1);
    Ok((first, last))
}
