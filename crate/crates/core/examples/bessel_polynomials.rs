//! Bessel and reverse Bessel polynomials, built three independent ways.
//!
//! ```bash
//! cargo run -p bessel-identities --example bessel_polynomials
//! ```

use bessel_identities::bessel::{ode_residual_y, p_poly, p_via_1f1, p_via_reversal, y_poly};

fn main() -> bessel_identities::Result<()> {
    println!("Bessel polynomials y_n(x):");
    for n in 0..=6 {
        println!("  y_{n} = {}", y_poly(n));
    }

    println!("\nReverse Bessel polynomials p_n(x) = x^n y_(n-1)(1/x):");
    for n in 0..=6 {
        println!("  p_{n} = {}", p_poly(n));
    }

    println!("\nAgreement of the explicit sum, reversal, and 1F1 routes:");
    for n in 1..=12 {
        let explicit = p_poly(n);
        let agree = p_via_reversal(n)? == explicit && p_via_1f1(n)? == explicit;
        println!("  n = {n:>2}: {}", if agree { "agree" } else { "DISAGREE" });
    }

    println!("\nResidual of x^2 y'' + 2(x+1) y' - n(n+1) y:");
    for n in [0, 5, 10, 20] {
        println!("  n = {n:>2}: {}", ode_residual_y(n));
    }
    Ok(())
}
