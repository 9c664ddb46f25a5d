//! One instance of the polynomial recurrence identity, expanded term by term:
//!
//! p_{k+N} = sum_{i=N}^{2N-1} a_{i-N}(N, x) sum_{l=0}^{k} C(k, l) 2^l (i/2 + l - 1)_l p_{k-l}
//!
//! ```bash
//! cargo run -p bessel-identities --example theorem2_expansion -- 3 2
//! ```

use bessel_identities::bessel::p_poly;
use bessel_identities::coeffs::coeffs_recurrence;
use bessel_identities::exactmath::{binomial, falling_factorial, Rational};
use bessel_identities::Poly;

fn main() -> bessel_identities::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("non-negative integer"));
    let n = args.next().unwrap_or(2).max(1);
    let k = args.next().unwrap_or(2);

    let table = coeffs_recurrence(n)?;
    let mut total = Poly::zero();
    for (m, a) in table.row(n).unwrap().iter().enumerate() {
        let i = n + m;
        println!("i = {i}, a_{m}({n}, x) = {a}");
        let mut inner = Poly::zero();
        for l in 0..=k {
            let arg = Rational::new(i as i64, 2)? + Rational::from(l as i64 - 1);
            let weight = Rational::from(binomial(k as u64, l as u64))
                * Rational::from(2).pow(l as u32)
                * falling_factorial(&arg, l as u32);
            println!(
                "    l = {l}: C({k},{l}) 2^{l} ({arg})_{l} = {weight}  times p_{}",
                k - l
            );
            inner = inner + p_poly(k - l).scale(&weight);
        }
        total = total + a * &inner;
    }
    println!("\nright side  = {total}");
    println!("p_{}        = {}", k + n, p_poly(k + n));
    println!("identity holds: {}", total == p_poly(k + n));
    Ok(())
}
