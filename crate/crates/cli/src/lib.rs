//! Command-line front end: argument parsing, suite dispatch and report output.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use qsuper::coeff::Rational;
use qsuper::graded::GradingContext;
use qsuper::induction::InducedSide;
use qsuper::report::Report;
use qsuper::rmatrix::RKind;
use qsuper::suites::{self, CoordCheck};

/// Exit code for malformed arguments or expressions.
pub const EXIT_USAGE: i32 = 2;
/// Exit code when a report contains a failed check.
pub const EXIT_FAILED: i32 = 1;

#[derive(Parser, Debug)]
#[command(name = "qsuper", version, about = "Exact verification suites for U_q(gl(m|n)) and its quantum superspace")]
struct Cli {
    #[arg(long, global = true, default_value_t = 1)]
    m: usize,
    #[arg(long, global = true, default_value_t = 1)]
    n: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Relations, Hopf axioms, S², star structure and unitarity.
    Verify {
        #[arg(long)]
        probe_degree: Option<usize>,
        #[arg(long)]
        q0: Option<String>,
    },
    /// Decompose a tensor power into irreducible summands.
    Decompose {
        /// Factors E and Ed joined by `*`.
        #[arg(long, default_value = "E")]
        word: String,
        #[arg(long, default_value_t = 2)]
        power: usize,
    },
    /// Intertwining, braid and RTT checks for one R-matrix.
    Rmatrix {
        #[arg(long, default_value = "pp")]
        kind: String,
        #[arg(long)]
        probe_degree: Option<usize>,
    },
    /// Coordinate-function suites.
    Coords {
        #[arg(long, default_value = "antipode")]
        check: String,
        #[arg(long)]
        probe_degree: Option<usize>,
    },
    /// Rewrite a superspace expression to normal form; `@path` reads it
    /// from a file.
    Normalform {
        expr: Option<String>,
        /// Run the rewriting and identity suite instead.
        #[arg(long)]
        identities: bool,
        #[arg(long)]
        probe_degree: Option<usize>,
    },
    /// Build an induced module and run the Borel–Weil and Frobenius checks.
    Induce {
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value = "bar")]
        side: String,
        #[arg(long)]
        probe_degree: Option<usize>,
    },
}

fn usage(err: &mut impl Write, msg: impl std::fmt::Display) -> i32 {
    let _ = writeln!(err, "error: {msg}");
    EXIT_USAGE
}

fn configure_threads() {
    if let Some(n) = std::env::var("QSUPER_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // A second call in the same process keeps the existing pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Runs one command, writing the report to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = write!(if e.use_stderr() { err as &mut dyn Write } else { out as &mut dyn Write }, "{e}");
            return code;
        }
    };
    configure_threads();
    if cli.m == 0 || cli.n == 0 {
        return usage(err, "--m and --n must be at least 1");
    }
    let ctx = GradingContext::new(cli.m, cli.n);
    let degree = |d: Option<usize>| d.unwrap_or_else(|| suites::default_probe_degree(&ctx));
    let report: Report = match cli.command {
        Command::Verify { probe_degree, q0 } => {
            let q0 = match q0 {
                None => suites::default_q0(),
                Some(s) => match s.parse::<Rational>() {
                    Ok(v) => v,
                    Err(e) => return usage(err, format!("invalid --q0 '{s}': {e}")),
                },
            };
            suites::verify_report(&ctx, degree(probe_degree), &q0)
        }
        Command::Decompose { word, power } => match suites::parse_factor_word(&word) {
            Ok(w) => suites::decompose_report(&ctx, &w, power),
            Err(e) => return usage(err, e),
        },
        Command::Rmatrix { kind, probe_degree } => match RKind::from_label(&kind) {
            Some(k) => suites::rmatrix_report(&ctx, k, degree(probe_degree)),
            None => return usage(err, format!("unknown --kind '{kind}', expected pp, bb or mixed")),
        },
        Command::Coords { check, probe_degree } => match CoordCheck::from_label(&check) {
            Some(c) => suites::coords_report(&ctx, c, degree(probe_degree)),
            None => return usage(err, format!("unknown --check '{check}', expected antipode, star or peterweyl")),
        },
        Command::Normalform { expr, identities, probe_degree } => {
            if identities {
                suites::identities_report(&ctx, degree(probe_degree))
            } else {
                let Some(src) = expr else {
                    return usage(err, "normalform needs an expression or --identities");
                };
                let src = match src.strip_prefix('@') {
                    Some(path) => match std::fs::read_to_string(path) {
                        Ok(s) => s.trim().to_string(),
                        Err(e) => return usage(err, format!("cannot read {path}: {e}")),
                    },
                    None => src,
                };
                match suites::normalform_report(&ctx, &src) {
                    Ok(r) => r,
                    Err(e) => return usage(err, e),
                }
            }
        }
        Command::Induce { k, side, probe_degree } => match InducedSide::from_label(&side) {
            Some(s) => suites::induce_report(&ctx, k, s, degree(probe_degree)),
            None => return usage(err, format!("unknown --side '{side}', expected bar or unbar")),
        },
    };
    let text = match cli.format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
    };
    if out.write_all(text.as_bytes()).is_err() {
        return EXIT_FAILED;
    }
    if report.passed {
        0
    } else {
        EXIT_FAILED
    }
}
