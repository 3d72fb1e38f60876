//! Exit codes, output formats and argument handling of the front end.

use qsuper_cli::{run, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("qsuper").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn json_report_shape() {
    let (code, out, _) = call(&["--m", "1", "--n", "1", "decompose", "--word", "E", "--power", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "qsuper-report/1");
    assert_eq!(v["passed"], true);
    assert_eq!(v["parameters"]["m"], 1);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] == "pass" && c["name"].is_string()));
}

#[test]
fn text_format_is_not_json() {
    let (code, out, _) = call(&["--format", "text", "normalform", "zb[1]*z[1]"]);
    assert_eq!(code, 0);
    assert!(serde_json::from_str::<serde_json::Value>(&out).is_err());
    assert!(out.contains("q"), "{out}");
}

#[test]
fn usage_errors_exit_two_with_empty_stdout() {
    for args in [
        vec!["rmatrix", "--kind", "sideways"],
        vec!["coords", "--check", "nothing"],
        vec!["induce", "--side", "left"],
        vec!["--m", "0", "verify"],
        vec!["normalform"],
        vec!["normalform", "z[1]*"],
        vec!["verify", "--q0", "abc"],
        vec!["frobnicate"],
    ] {
        let (code, out, err) = call(&args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn expression_from_file() {
    let path = std::env::temp_dir().join(format!("qsuper-cli-{}.txt", std::process::id()));
    std::fs::write(&path, "zb[1]*z[1]\n").unwrap();
    let direct = call(&["normalform", "zb[1]*z[1]"]);
    let from_file = call(&["normalform", &format!("@{}", path.display())]);
    std::fs::remove_file(&path).ok();
    assert_eq!(direct.0, 0);
    assert_eq!(direct.1, from_file.1);
    let missing = call(&["normalform", "@/nonexistent/qsuper.txt"]);
    assert_eq!(missing.0, EXIT_USAGE);
}
