use std::process::{Command, Output};

use qpows_cli::{run_eval, Settings};

fn qpows(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpows"))
        .args(args)
        .env_remove("QPOWS_MAX_DEGREE")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = qpows(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn fails(args: &[&str], needle: &str) {
    let out = qpows(args);
    assert_eq!(out.status.code(), Some(1), "{args:?} should fail");
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.starts_with("error: "), "{err}");
    assert!(err.contains(needle), "{args:?}: {err}");
}

#[test]
fn goldens_match() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let cases = std::fs::read_to_string(dir.join("cases.tsv")).unwrap();
    for line in cases.lines().filter(|l| !l.starts_with('#')) {
        let f: Vec<&str> = line.split('\t').collect();
        let mut args = vec!["eval", f[2]];
        if f[1] != "-" {
            args.extend(["--order", f[1]]);
        }
        let want = std::fs::read_to_string(dir.join(format!("{}.txt", f[0]))).unwrap();
        assert_eq!(stdout(&args), want, "{}", f[0]);
        args.push("--json");
        let want = std::fs::read_to_string(dir.join(format!("{}.json", f[0]))).unwrap();
        assert_eq!(stdout(&args), want, "{}", f[0]);
    }
}

#[test]
fn text_output_reparses() {
    let s = Settings::default();
    for expr in [
        "convert(P[1,2,1,1], F)",
        "1/2*M[1] - M[2]",
        "convert(Z[2], S)",
        "convert(Pn{1|3|2,5|6|4}, Mn)",
        "G(2,1)*G(1)",
        "Pt[2,1]*Pt[1]",
        "convert(p[2,2,1], m)",
    ] {
        let once = run_eval(expr, &s, false).unwrap();
        assert_eq!(run_eval(&once, &s, false).unwrap(), once, "{expr}");
    }
}

#[test]
fn ordered_output_reparses() {
    let mut s = Settings::default();
    s.set_order_by_name("evenodd").unwrap();
    let once = run_eval("convert(M[2,3], P)", &s, false).unwrap();
    assert!(once.contains("P^evenodd["), "{once}");
    let back = run_eval(&format!("convert({once}, M)"), &Settings::default(), false).unwrap();
    assert_eq!(back, "M[2,3]");
}

#[test]
fn error_classes_exit_nonzero() {
    fails(&["eval", "convert(P[2,1"], "syntax error");
    fails(&["eval", "P[2,0]"], "zero part");
    fails(&["eval", "Pn{1,2|2}"], "invalid index");
    fails(&["eval", "M[2,1] + Mn{1|2}"], "space mismatch");
    fails(&["eval", "foo(M[1])"], "unknown function");
    fails(&["eval", "M[1]", "--order", "nosuch"], "unknown order");
    fails(
        &["eval", "projectf({2|1,3})", "--order", "min"],
        "does not project",
    );
}

#[test]
fn projectf_agrees_with_m_route() {
    assert_eq!(stdout(&["eval", "projectf({1,3|2})"]), "-F[1,2] + F[3]\n");
    assert_eq!(
        stdout(&["eval", "convert(project(convert(Pn{1,3|2}, Mn)), F)"]),
        "-F[1,2] + F[3]\n"
    );
}

#[test]
fn degree_cap_applies_to_enumeration() {
    let out = Command::new(env!("CARGO_BIN_EXE_qpows"))
        .args(["dualcheck", "5"])
        .env("QPOWS_MAX_DEGREE", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&["dualcheck", "4"]), "ok\n");
}
