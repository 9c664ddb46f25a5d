//! Command-line front end.
//!
//! ```text
//! bessel-identities y N                      Bessel polynomial y_N
//! bessel-identities p N                      reverse Bessel polynomial p_N
//! bessel-identities coeffs NMAX [--method recurrence|closed-form]
//! bessel-identities verify theorem1|theorem2|all [--n-max] [--k-max] [--order]
//! bessel-identities bench [--n-max] [--reps]
//! ```
//!
//! Global flags: `--format text|json|csv|latex`, `--out PATH`.
//! Exit codes: 0 success, 1 an identity check failed, 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bessel::{p_poly, y_poly};
use crate::coeffs::{closed_form_cell, coeffs_closed_form, coeffs_recurrence, CoeffTable};
use crate::identities::{verify_all_with_table, Verifier, VerifyReport};
use crate::poly::Poly;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recurrence,
    ClosedForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Theorem1,
    Theorem2,
    All,
}

#[derive(Debug, Parser)]
#[command(
    name = "bessel-identities",
    version,
    about = "Exact Bessel polynomial identities"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Write the output stream to PATH instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bessel polynomial y_N.
    Y {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Reverse Bessel polynomial p_N.
    P {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Triangular table of a_j(N, x), rows j, columns N.
    Coeffs {
        #[arg(allow_negative_numbers = true)]
        n_max: i64,
        #[arg(long, value_enum, default_value = "recurrence")]
        method: Method,
    },
    /// Check identities exactly over a parameter grid.
    Verify {
        #[arg(value_enum)]
        which: Which,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 10)]
        k_max: usize,
        #[arg(long, default_value_t = 16)]
        order: usize,
        /// Add 1 to table cell "N,J" before verifying.
        #[arg(long, hide = true, value_name = "N,J")]
        perturb: Option<String>,
    },
    /// Time the recurrence against the nested-sum closed form.
    Bench {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 5)]
        reps: usize,
    },
}

struct Usage(String);

impl<T: Into<String>> From<T> for Usage {
    fn from(s: T) -> Self {
        Usage(s.into())
    }
}

/// Parses `args` (including the program name), writes the command's output
/// to `out` (or the `--out` file) and diagnostics to `err`, and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let (code, text) = match dispatch(&cli) {
        Ok(pair) => pair,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\nFor more information, try '--help'.");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text),
        None => out.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    code
}

fn dispatch(cli: &Cli) -> Result<(i32, String), Usage> {
    let fmt = cli.format;
    match &cli.command {
        Command::Y { n } => Ok((EXIT_OK, render_poly(&y_poly(non_negative(*n, "N")?), fmt))),
        Command::P { n } => Ok((EXIT_OK, render_poly(&p_poly(non_negative(*n, "N")?), fmt))),
        Command::Coeffs { n_max, method } => {
            let n_max = non_negative(*n_max, "NMAX")?;
            if n_max < 1 {
                return Err("NMAX must be at least 1".into());
            }
            let table = match method {
                Method::Recurrence => coeffs_recurrence(n_max),
                Method::ClosedForm => coeffs_closed_form(n_max),
            }
            .map_err(|e| e.to_string())?;
            Ok((EXIT_OK, render_table(&table, fmt)))
        }
        Command::Verify {
            which,
            n_max,
            k_max,
            order,
            perturb,
        } => {
            if *n_max < 1 {
                return Err("--n-max must be at least 1".into());
            }
            if fmt == OutputFormat::Latex {
                return Err("verify supports --format text, json or csv".into());
            }
            let mut table = coeffs_recurrence(*n_max).map_err(|e| e.to_string())?;
            if let Some(spec) = perturb {
                let (n, j) = parse_cell(spec)?;
                table = table
                    .with_cell_offset(n, j, &Poly::one())
                    .map_err(|e| e.to_string())?;
            }
            let reports =
                run_verify(*which, table, *n_max, *k_max, *order).map_err(|e| e.to_string())?;
            let code = if reports.iter().all(|r| r.passed) {
                EXIT_OK
            } else {
                EXIT_FAILED
            };
            Ok((code, render_reports(&reports, fmt)))
        }
        Command::Bench { n_max, reps } => {
            if *n_max < 1 || *reps < 1 {
                return Err("--n-max and --reps must be at least 1".into());
            }
            if fmt == OutputFormat::Latex {
                return Err("bench supports --format text, json or csv".into());
            }
            let rows = bench(*n_max, *reps);
            Ok((EXIT_OK, render_bench(&rows, fmt)))
        }
    }
}

fn non_negative(n: i64, name: &str) -> Result<usize, Usage> {
    usize::try_from(n).map_err(|_| Usage(format!("{name} must be non-negative, got {n}")))
}

fn parse_cell(spec: &str) -> Result<(usize, usize), Usage> {
    let bad = || Usage(format!("expected N,J for --perturb, got {spec:?}"));
    let (n, j) = spec.split_once(',').ok_or_else(bad)?;
    Ok((
        n.trim().parse().map_err(|_| bad())?,
        j.trim().parse().map_err(|_| bad())?,
    ))
}

fn run_verify(
    which: Which,
    table: CoeffTable,
    n_max: usize,
    k_max: usize,
    order: usize,
) -> crate::Result<Vec<VerifyReport>> {
    match which {
        Which::All => verify_all_with_table(table, n_max, k_max, order),
        Which::Theorem1 => {
            let v = Verifier::new(table, 0, order + n_max);
            Ok(vec![v.theorem1(1..=n_max, order)?])
        }
        Which::Theorem2 => {
            let v = Verifier::new(table, n_max + k_max, 0);
            Ok(vec![v.theorem2(1..=n_max, 0..=k_max)?])
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn render_poly(p: &Poly, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Text => format!("{p}\n"),
        OutputFormat::Latex => format!("{}\n", p.to_latex()),
        OutputFormat::Json => to_json(p),
        OutputFormat::Csv => {
            let mut s = String::from("power,coefficient\n");
            for (k, c) in p.coeffs().iter().enumerate() {
                let _ = writeln!(s, "{k},{c}");
            }
            s
        }
    }
}

/// Renders the table with rows `j = 0..n_max-1` and columns `N = 1..n_max`,
/// leaving cells below the diagonal blank.
pub fn render_table(table: &CoeffTable, fmt: OutputFormat) -> String {
    let n_max = table.n_max();
    let cell = |j: usize, n: usize, f: &dyn Fn(&Poly) -> String| {
        table.get(n, j).map(f).unwrap_or_default()
    };
    match fmt {
        OutputFormat::Json => to_json(table),
        OutputFormat::Text => {
            let mut grid = vec![std::iter::once("j\\N".to_owned())
                .chain((1..=n_max).map(|n| n.to_string()))
                .collect::<Vec<_>>()];
            for j in 0..n_max {
                let mut row = vec![j.to_string()];
                row.extend((1..=n_max).map(|n| cell(j, n, &|p| p.to_string())));
                grid.push(row);
            }
            let widths: Vec<usize> = (0..=n_max)
                .map(|c| grid.iter().map(|r| r[c].len()).max().unwrap_or(0))
                .collect();
            let mut s = String::new();
            for row in &grid {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(v, w)| format!("{v:>w$}"))
                    .collect();
                let _ = writeln!(s, "{}", line.join("  ").trim_end());
            }
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from("j");
            for n in 1..=n_max {
                let _ = write!(s, ",{n}");
            }
            s.push('\n');
            for j in 0..n_max {
                s.push_str(&j.to_string());
                for n in 1..=n_max {
                    let _ = write!(s, ",{}", cell(j, n, &|p| p.to_string()));
                }
                s.push('\n');
            }
            s
        }
        OutputFormat::Latex => {
            let mut s = String::from("\\begin{bmatrix}\n");
            for j in 0..n_max {
                let cells: Vec<String> =
                    (1..=n_max).map(|n| cell(j, n, &|p| p.to_latex())).collect();
                let _ = writeln!(s, "{} \\\\", cells.join(" & "));
            }
            s.push_str("\\end{bmatrix}\n");
            s
        }
    }
}

pub fn render_reports(reports: &[VerifyReport], fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Json => to_json(&reports),
        OutputFormat::Csv => {
            let mut s = String::from("identity,passed,cells,failures\n");
            for r in reports {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    r.identity.name(),
                    r.passed,
                    r.grid.len(),
                    r.failures.len()
                );
            }
            s
        }
        OutputFormat::Text | OutputFormat::Latex => {
            let mut s = String::new();
            for r in reports {
                let status = if r.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "{:<10} {status}  {} cells",
                    r.identity.name(),
                    r.grid.len()
                );
                for f in &r.failures {
                    let _ = writeln!(
                        s,
                        "  {} first mismatch at index {}: expected {}, actual {}",
                        f.params, f.index, f.expected, f.actual
                    );
                }
            }
            s
        }
    }
}

/// Timing of one `N` in the recurrence-versus-closed-form comparison.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    #[serde(rename = "N")]
    pub n: usize,
    /// Best wall time to build rows `1..=N` by recurrence.
    pub recurrence_us: f64,
    /// Best wall time to evaluate every cell of row `N` by nested sums.
    pub closed_form_us: f64,
    /// Index tuples visited by the nested sum for each `j = 0..N-1`.
    pub tuples: Vec<u64>,
}

pub fn bench(n_max: usize, reps: usize) -> Vec<BenchRow> {
    (1..=n_max)
        .map(|n| {
            let mut recurrence_us = f64::INFINITY;
            let mut closed_form_us = f64::INFINITY;
            let mut tuples = Vec::new();
            for _ in 0..reps.max(1) {
                let start = Instant::now();
                let table = coeffs_recurrence(n).expect("n >= 1");
                std::hint::black_box(&table);
                recurrence_us = recurrence_us.min(start.elapsed().as_secs_f64() * 1e6);

                let start = Instant::now();
                let cells: Vec<_> = (0..n)
                    .map(|j| closed_form_cell(n, j).expect("j < n"))
                    .collect();
                closed_form_us = closed_form_us.min(start.elapsed().as_secs_f64() * 1e6);
                tuples = cells.iter().map(|c| c.tuples).collect();
            }
            BenchRow {
                n,
                recurrence_us,
                closed_form_us,
                tuples,
            }
        })
        .collect()
}

pub fn render_bench(rows: &[BenchRow], fmt: OutputFormat) -> String {
    let join = |t: &[u64], sep: &str| t.iter().map(u64::to_string).collect::<Vec<_>>().join(sep);
    match fmt {
        OutputFormat::Json => to_json(&rows),
        OutputFormat::Csv => {
            let mut s = String::from("N,recurrence_us,closed_form_us,tuples\n");
            for r in rows {
                let _ = writeln!(
                    s,
                    "{},{:.3},{:.3},{}",
                    r.n,
                    r.recurrence_us,
                    r.closed_form_us,
                    join(&r.tuples, " ")
                );
            }
            s
        }
        OutputFormat::Text | OutputFormat::Latex => {
            let mut s = format!(
                "{:>3}  {:>14}  {:>14}  tuples by j\n",
                "N", "recurrence_us", "closed_form_us"
            );
            for r in rows {
                let _ = writeln!(
                    s,
                    "{:>3}  {:>14.3}  {:>14.3}  {}",
                    r.n,
                    r.recurrence_us,
                    r.closed_form_us,
                    join(&r.tuples, " ")
                );
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("bessel-identities").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn poly_commands() {
        assert_eq!(
            run_str(&["y", "2"]),
            (0, "3x^2+3x+1\n".into(), String::new())
        );
        let (code, out, _) = run_str(&["p", "0", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v, serde_json::json!({"coeffs": ["1"]}));
        let (code, out, err) = run_str(&["p", "-1"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("non-negative"));
        assert_eq!(
            run_str(&["p", "4", "--format", "latex"]).1,
            "x^{4}+6x^{3}+15x^{2}+15x\n"
        );
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["coeffs", "0"]).0, 2);
        assert_eq!(run_str(&["coeffs", "-3"]).0, 2);
        assert_eq!(run_str(&["verify", "all", "--n-max", "0"]).0, 2);
        assert_eq!(run_str(&["verify", "nothing"]).0, 2);
        assert_eq!(run_str(&["bench", "--reps", "0"]).0, 2);
        assert_eq!(run_str(&["y"]).0, 2);
        assert_eq!(
            run_str(&["verify", "all", "--perturb", "9,9", "--n-max", "2"]).0,
            2
        );
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn coeffs_text_table() {
        let (code, out, _) = run_str(&["coeffs", "4"]);
        assert_eq!(code, 0);
        let expected = "\
j\\N  1    2     3      4
  0  x  x^2   x^3    x^4
  1       x  3x^2   6x^3
  2            3x  15x^2
  3                  15x
";
        assert_eq!(out, expected);
        assert_eq!(run_str(&["coeffs", "1"]).1, "j\\N  1\n  0  x\n");
        assert_eq!(
            run_str(&["coeffs", "4", "--method", "closed-form"]).1,
            expected
        );
    }

    #[test]
    fn coeffs_csv_and_latex() {
        let csv = run_str(&["coeffs", "3", "--format", "csv"]).1;
        assert_eq!(csv, "j,1,2,3\n0,x,x^2,x^3\n1,,x,3x^2\n2,,,3x\n");
        let tex = run_str(&["coeffs", "2", "--format", "latex"]).1;
        assert_eq!(
            tex,
            "\\begin{bmatrix}\nx & x^{2} \\\\\n & x \\\\\n\\end{bmatrix}\n"
        );
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(
            run_str(&["verify", "theorem2", "--n-max", "1", "--k-max", "0"]).0,
            0
        );
        assert_eq!(
            run_str(&["verify", "theorem1", "--n-max", "3", "--order", "6"]).0,
            0
        );
        let (code, out, _) = run_str(&[
            "verify",
            "all",
            "--n-max",
            "3",
            "--k-max",
            "2",
            "--order",
            "5",
            "--perturb",
            "2,1",
        ]);
        assert_eq!(code, 1);
        assert!(out.contains("RowSum     FAIL"));
        assert!(out.contains("ODE        PASS"));
        assert_eq!(run_str(&["verify", "all", "--format", "latex"]).0, 2);
    }

    #[test]
    fn bench_rows() {
        let rows = bench(10, 1);
        assert_eq!(rows.len(), 10);
        assert_eq!(rows[9].tuples[5], 126);
        assert_eq!(
            rows.iter().map(|r| r.n).collect::<Vec<_>>(),
            (1..=10).collect::<Vec<_>>()
        );
        let (code, out, _) = run_str(&["bench", "--n-max", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 2);
    }

    #[test]
    fn out_flag_writes_file() {
        let dir = std::env::temp_dir().join(format!("bessel-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("p4.txt");
        let (code, out, _) = run_str(&["p", "4", "--out", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(out.is_empty());
        assert_eq!(
            std::fs::read_to_string(&path).unwrap(),
            "x^4+6x^3+15x^2+15x\n"
        );
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
