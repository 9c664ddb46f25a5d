//! Wall-time comparison of the O(N^2) recurrence with the nested-sum closed
//! form, whose index set for a_j(N, x) has C(N-1, j) tuples.
//!
//! ```bash
//! cargo run --release -p bessel-identities --example recurrence_vs_closed_form
//! ```

use bessel_identities::cli::{bench, render_bench, OutputFormat};

fn main() {
    let rows = bench(18, 3);
    print!("{}", render_bench(&rows, OutputFormat::Text));
    let last = rows.last().unwrap();
    let total: u64 = last.tuples.iter().sum();
    println!(
        "\nN = {}: closed form visits {total} tuples (2^(N-1) = {}), recurrence touches {} cells",
        last.n,
        1u64 << (last.n - 1),
        last.n * (last.n + 1) / 2
    );
}
