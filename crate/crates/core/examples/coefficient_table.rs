//! The triangular table a_j(N, x) from the recurrence, checked cell by cell
//! against the nested-sum closed form.
//!
//! ```bash
//! cargo run -p bessel-identities --example coefficient_table
//! ```

use bessel_identities::bessel::p_poly;
use bessel_identities::cli::{render_table, OutputFormat};
use bessel_identities::coeffs::{closed_form_cell, coeffs_recurrence};

fn main() -> bessel_identities::Result<()> {
    let n_max = 7;
    let table = coeffs_recurrence(n_max)?;
    print!("{}", render_table(&table, OutputFormat::Text));

    println!("\nClosed form against recurrence:");
    for n in 1..=n_max {
        let mut visited = Vec::new();
        for j in 0..n {
            let cell = closed_form_cell(n, j)?;
            let (c, _) = table.get(n, j).unwrap().as_monomial().unwrap();
            assert_eq!(
                c.to_integer().as_ref(),
                Some(&cell.coefficient),
                "N={n} j={j}"
            );
            visited.push(cell.tuples);
        }
        println!("  N = {n}: all cells agree; tuples visited per j: {visited:?}");
    }

    println!("\nRow sums reproduce p_N:");
    for n in 1..=n_max {
        let sum = table.row_sum(n).unwrap();
        println!(
            "  N = {n}: {sum}  {}",
            if sum == p_poly(n) { "= p_N" } else { "!= p_N" }
        );
    }

    println!("\nLaTeX:");
    print!(
        "{}",
        render_table(&coeffs_recurrence(4)?, OutputFormat::Latex)
    );
    Ok(())
}
