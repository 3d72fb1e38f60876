//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! The process exits nonzero if any criterion fails for a reason other than
//! the one known-false sub-check (the derived superspace identity taken
//! without graded signs).

#[path = "../../core/tests/common/oracle.rs"]
mod oracle;

use std::path::Path;
use std::process::{Command, Output};
use std::time::Instant;

use qsuper::coeff::Rational;
use qsuper::coords::CoordEvaluator;
use qsuper::graded::GradingContext;
use qsuper::induction;
use qsuper::report::Check;
use qsuper::rmatrix::{self, RKind};
use qsuper::superspace::Rewriter;
use qsuper::suites;
use qsuper::uq;
use serde_json::json;

const DESK: [(usize, usize); 4] = [(1, 1), (2, 1), (1, 2), (2, 2)];
const LITERAL_IDENTITY: &str = "derived identity as displayed";

struct Outcome {
    passed: bool,
    /// Failed only through the known-false literal identity.
    expected_failure: bool,
    detail: String,
}

impl Outcome {
    fn from_checks(checks: &[Check], what: &str) -> Self {
        let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed()).collect();
        let detail = match failed.first() {
            None => format!("{} checks ({what})", checks.len()),
            Some(c) => format!(
                "{} of {} checks failed ({what}); first: {}: {}",
                failed.len(),
                checks.len(),
                c.name,
                c.witness.as_deref().unwrap_or("")
            ),
        };
        Outcome {
            passed: failed.is_empty(),
            expected_failure: false,
            detail,
        }
    }

    fn fail(detail: String) -> Self {
        Outcome {
            passed: false,
            expected_failure: false,
            detail,
        }
    }
}

fn ctx(m: usize, n: usize) -> GradingContext {
    GradingContext::new(m, n)
}

fn label(m: usize, n: usize) -> String {
    format!("({m},{n})")
}

fn tag(prefix: &str, checks: Vec<Check>) -> Vec<Check> {
    checks
        .into_iter()
        .map(|mut c| {
            c.name = format!("{prefix} {}", c.name);
            c
        })
        .collect()
}

fn relations() -> Outcome {
    let mut all = Vec::new();
    for (m, n) in DESK {
        all.extend(tag(&label(m, n), suites::relation_checks(&ctx(m, n))));
    }
    Outcome::from_checks(&all, "E, Ed, E⊗E, E⊗E⊗E, E⊗Ed, Ed⊗Ed at (1,1),(2,1),(1,2),(2,2)")
}

fn hopf() -> Outcome {
    let mut all = Vec::new();
    for (m, n) in DESK {
        all.extend(tag(&label(m, n), suites::hopf_checks(&ctx(m, n))));
    }
    Outcome::from_checks(&all, "coassociativity in E⊗E⊗E, antipode and counit in E")
}

fn square_antipode() -> Outcome {
    let mut all = Vec::new();
    for (m, n) in DESK {
        all.extend(tag(&label(m, n), suites::square_antipode_checks(&ctx(m, n))));
    }
    Outcome::from_checks(&all, "all generators in E")
}

fn intertwining() -> Outcome {
    let mut all = Vec::new();
    for (m, n) in DESK {
        let c = ctx(m, n);
        for kind in RKind::ALL {
            all.extend(tag(&label(m, n), rmatrix::check_intertwiner(&c, &rmatrix::build_r_matrix(&c, kind))));
        }
    }
    Outcome::from_checks(&all, "pp, bb, mixed; all generators")
}

fn braid() -> Outcome {
    let mut all = Vec::new();
    for (m, n) in [(1, 1), (2, 1)] {
        let c = ctx(m, n);
        for kind in [RKind::VectorVector, RKind::DualDual] {
            all.extend(tag(&label(m, n), vec![rmatrix::check_braid(&c, &rmatrix::build_r_matrix(&c, kind))]));
        }
    }
    Outcome::from_checks(&all, "pp and bb at (1,1),(2,1)")
}

fn rtt() -> Outcome {
    let mut all = Vec::new();
    for (m, n, degree) in [(1, 1, 4), (2, 1, 3)] {
        let c = ctx(m, n);
        let ev = CoordEvaluator::new(c);
        let probes = uq::probe_monomials(&c, degree);
        for kind in RKind::ALL {
            let rm = rmatrix::build_r_matrix(&c, kind);
            all.extend(tag(&format!("{} degree {degree}", label(m, n)), vec![rmatrix::check_rtt(&ev, &rm, &probes)]));
        }
    }
    Outcome::from_checks(&all, "all kinds, all entries; degree 4 at (1,1), 3 at (2,1)")
}

fn antipode_and_star() -> Outcome {
    let c = ctx(1, 1);
    let ev = CoordEvaluator::new(c);
    let probes = uq::probe_monomials(&c, 4);
    let mut all = suites::antipode_checks(&ev, &probes);
    all.extend(suites::coordinate_star_checks(&ev, &probes));
    let has_derived = all.iter().any(|x| x.name.contains("tb[1,2]"));
    let mut out = Outcome::from_checks(&all, "(1,1), probe degree 4, includes S(tb[1,2]) = -t[2,1]");
    if !has_derived {
        out = Outcome::fail("the S(tb[1,2]) check is missing".into());
    }
    out
}

fn unitarity() -> Outcome {
    let mut all = Vec::new();
    let mut gram = None;
    for q0 in [Rational::new(3.into(), 2.into()), Rational::from_integer(2.into())] {
        for (m, n) in DESK {
            let (checks, data) = suites::unitarity_checks(&ctx(m, n), &q0);
            all.extend(tag(&format!("{} q0={q0}", label(m, n)), checks));
            if (m, n) == (1, 1) && q0 == Rational::new(3.into(), 2.into()) {
                gram = data.get("gram E at q0=3/2").cloned();
            }
        }
    }
    let want = json!([["1", "0"], ["0", "2/3"]]);
    if gram.as_ref() != Some(&want) {
        return Outcome::fail(format!("Gram of E at (1,1), q0=3/2 is {gram:?}, expected diag(1, 2/3)"));
    }
    Outcome::from_checks(&all, "q0 in {3/2, 2}; E, E⊗E type 1, Ed type 2; (1,1) Gram diag(1, 2/3)")
}

fn decomposition() -> Outcome {
    // Oracle first: brute-force highest-weight closure in an independent
    // numeric model at q = 2.
    let model = oracle::Model::new(2, 1, oracle::int(2));
    let e = model.vector();
    let mut expected: Vec<usize> = model
        .highest_weight_closures(&model.tensor(&e, &e))
        .into_iter()
        .map(|(_, d)| d)
        .collect();
    expected.sort();

    let report = suites::decompose_report(&ctx(2, 1), &[false], 2);
    let mut got: Vec<usize> = report.data["summands"]
        .as_array()
        .map(|a| a.iter().filter_map(|s| s["dim"].as_u64()).map(|d| d as usize).collect())
        .unwrap_or_default();
    got.sort();
    let lambda1 = report.checks.iter().filter(|c| c.name.contains("in Λ1")).count();
    let mut out = Outcome::from_checks(&report.checks, &format!("summand dims {got:?}, oracle {expected:?}"));
    if got != expected || got.len() != 2 || got.iter().sum::<usize>() != 9 || lambda1 != 2 {
        out = Outcome::fail(format!("summand dims {got:?}, oracle {expected:?}, Λ1 checks {lambda1}"));
    }
    out
}

fn rewriting() -> Outcome {
    let mut all = Vec::new();
    for (m, n) in [(1, 1), (2, 1), (1, 2)] {
        let report = suites::identities_report(&ctx(m, n), 4);
        all.extend(tag(&label(m, n), report.checks));
    }
    let failed: Vec<&Check> = all.iter().filter(|c| !c.passed()).collect();
    let only_literal = !failed.is_empty() && failed.iter().all(|c| c.name.ends_with(LITERAL_IDENTITY));
    let mut out = Outcome::from_checks(&all, "measure, confluence, identities, soundness at probe degree 4");
    if only_literal {
        out.expected_failure = true;
        out.detail = format!(
            "only the literal identity Σ q^(2ρ,ε_c) z_c zb_c − q^(2ρ,ε_N) fails ({}); \
             it is false in the algebra, the graded-sign form rewrites to 0; other {} checks pass",
            failed
                .iter()
                .map(|c| format!("{}: {}", c.name, c.witness.as_deref().unwrap_or("")))
                .collect::<Vec<_>>()
                .join("; "),
            all.len() - failed.len()
        );
    }
    out
}

fn borel_weil() -> Outcome {
    let mut all = Vec::new();
    for (m, n) in [(1, 1), (2, 1), (1, 2)] {
        let c = ctx(m, n);
        let ev = CoordEvaluator::new(c);
        let rw = Rewriter::new(c);
        let probes = uq::probe_monomials(&c, 2);
        for k in 0..=3 {
            let (checks, _) = induction::borel_weil_check(&ev, &rw, k, &probes);
            all.extend(tag(&label(m, n), checks));
        }
    }
    Outcome::from_checks(&all, "k ≤ 3 at (1,1),(2,1),(1,2): dimension, relations, weight pair, irreducible")
}

fn frobenius() -> Outcome {
    let mut all = Vec::new();
    let mut nonzero = 0;
    for (m, n) in [(1, 1), (2, 1), (1, 2)] {
        let c = ctx(m, n);
        let ev = CoordEvaluator::new(c);
        let rw = Rewriter::new(c);
        let (checks, dims) = induction::frobenius_check(&ev, &rw, 2);
        nonzero += dims.iter().filter(|d| d.left > 0).count();
        all.extend(tag(&label(m, n), checks));
    }
    let mut out = Outcome::from_checks(&all, &format!("k ≤ 2, both sides; {nonzero} nonzero Hom spaces"));
    if nonzero == 0 {
        out = Outcome::fail("every Hom space is zero".into());
    }
    out
}

fn run_cli(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsuper"))
        .args(args)
        .env("QSUPER_THREADS", threads)
        .output()
        .expect("qsuper runs")
}

fn cli_contract() -> Outcome {
    let runs: [&[&str]; 6] = [
        &["--m", "2", "--n", "1", "verify"],
        &["--m", "2", "--n", "1", "decompose"],
        &["--m", "2", "--n", "1", "rmatrix", "--kind", "mixed", "--probe-degree", "2"],
        &["normalform", "zb[1]*z[1] + z[2]*z[1]"],
        &["--m", "2", "--n", "1", "induce", "--k", "2", "--side", "unbar"],
        &["--format", "text", "coords", "--check", "star", "--probe-degree", "2"],
    ];
    for args in runs {
        let a = run_cli(args, "1");
        let b = run_cli(args, "1");
        let c = run_cli(args, "4");
        if !a.status.success() {
            return Outcome::fail(format!("{args:?} exited with {:?}", a.status.code()));
        }
        if a.stdout != b.stdout || a.stdout != c.stdout {
            return Outcome::fail(format!("{args:?} output differs between runs"));
        }
    }
    let fixture = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/broken_expr.txt");
    let broken = run_cli(&["normalform", &format!("@{}", fixture.display())], "1");
    if broken.status.code() != Some(2) || broken.stderr.is_empty() || !broken.stdout.is_empty() {
        return Outcome::fail(format!("broken fixture exited with {:?}", broken.status.code()));
    }
    let usage = run_cli(&["rmatrix", "--kind", "sideways"], "1");
    if usage.status.code() != Some(2) {
        return Outcome::fail(format!("bad --kind exited with {:?}", usage.status.code()));
    }
    let failing = run_cli(&["normalform", "--identities", "--probe-degree", "2"], "1");
    if failing.status.code() != Some(1) {
        return Outcome::fail(format!("failing suite exited with {:?}", failing.status.code()));
    }
    Outcome {
        passed: true,
        expected_failure: false,
        detail: "6 commands byte-identical over 3 runs (1 and 4 threads); broken fixture → 2, bad usage → 2, failing suite → 1"
            .into(),
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("relations", relations),
        ("Hopf axioms", hopf),
        ("S² = Ad K2ρ", square_antipode),
        ("R-matrix intertwining", intertwining),
        ("braid relation", braid),
        ("RTT relations", rtt),
        ("antipode and star on coordinates", antipode_and_star),
        ("unitarity", unitarity),
        ("decomposition of E⊗E at (2,1)", decomposition),
        ("rewriting", rewriting),
        ("Borel–Weil", borel_weil),
        ("Frobenius reciprocity", frobenius),
        ("CLI determinism and exit codes", cli_contract),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let status = if out.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status} {name} [{:.1}s]: {}",
            i + 1,
            start.elapsed().as_secs_f64(),
            out.detail
        );
        if !out.passed && !out.expected_failure {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        println!("{unexpected} criteria failed unexpectedly");
        std::process::exit(1);
    }
}
