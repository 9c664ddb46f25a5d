//! Expanding F(t, x) = exp(x (1 - sqrt(1 - 2t))) as a truncated power series
//! and reading off p_n(x) = n! [t^n] F.
//!
//! ```bash
//! cargo run -p bessel-identities --example generating_function
//! ```

use bessel_identities::bessel::p_poly;
use bessel_identities::exactmath::{factorial, Rational};
use bessel_identities::series::{binom_series, generating_function, sqrt_one_minus_2t};
use bessel_identities::Poly;

fn main() -> bessel_identities::Result<()> {
    let order = 8;

    let root = sqrt_one_minus_2t(order);
    let terms: Vec<String> = root.coeffs().iter().map(ToString::to_string).collect();
    println!("sqrt(1 - 2t) = [{}] + O(t^{})", terms.join(", "), order + 1);

    let f = generating_function(order);
    println!("\nn! [t^n] F(t, x):");
    for n in 0..=order {
        let p = f.coeff(n).scale(&Rational::from(factorial(n as u64)));
        let tag = if p == p_poly(n) { "= p_n" } else { "!= p_n" };
        println!("  n = {n}: {p}  {tag}");
    }

    // F' = x (1 - 2t)^(-1/2) F
    let lhs = generating_function(order + 1).derivative_t(1)?;
    let rhs = (&binom_series(&Rational::new(-1, 2)?, order) * &f).scale(&Poly::x());
    println!(
        "\nF' == x (1 - 2t)^(-1/2) F through t^{order}: {}",
        lhs == rhs
    );

    println!("\nJSON dump of F through t^2:");
    println!(
        "{}",
        serde_json::to_string_pretty(&generating_function(2)).expect("serializable")
    );
    Ok(())
}
