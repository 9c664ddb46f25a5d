//! Running every identity check, then breaking one table cell on purpose to
//! see how failures are reported.
//!
//! ```bash
//! cargo run -p bessel-identities --example verify_identities
//! ```

use bessel_identities::cli::{render_reports, OutputFormat};
use bessel_identities::coeffs::coeffs_recurrence;
use bessel_identities::identities::{verify_all, verify_all_with_table};
use bessel_identities::Poly;

fn main() -> bessel_identities::Result<()> {
    let (n_max, k_max, order) = (6, 10, 16);

    println!("Clean table (N <= {n_max}, k <= {k_max}, t-order {order}):");
    let reports = verify_all(n_max, k_max, order)?;
    print!("{}", render_reports(&reports, OutputFormat::Text));

    println!("\nSame grid with a_1(4, x) increased by 1:");
    let broken = coeffs_recurrence(n_max)?.with_cell_offset(4, 1, &Poly::one())?;
    let reports = verify_all_with_table(broken, n_max, 2, 6)?;
    print!("{}", render_reports(&reports, OutputFormat::Text));
    Ok(())
}
