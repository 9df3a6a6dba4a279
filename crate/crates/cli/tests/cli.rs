use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reticulation"))
        .args(args)
        .current_dir(root())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn validate_fixtures() {
    for f in ["fixtures/kowalski6.alg", "fixtures/iorgulescu5", "iorgulescu12", "chain4"] {
        let o = run(&["validate", f]);
        assert!(o.status.success(), "{f}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).contains("valid residuated lattice"));
    }
}

#[test]
fn stone_witness_for_the_twelve_element_algebra() {
    let o = run(&["stone", "fixtures/iorgulescu12"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("Stone: no (witness c, c^⊤={d,1})"), "{out}");
    assert!(out.contains("B(A) = {0,1}"));
    assert!(out.contains("conditions agree: yes"));
}

#[test]
fn stone_on_the_five_element_algebra() {
    let out = stdout(&run(&["stone", "iorgulescu5"]));
    assert!(out.contains("Stone: yes"));
    assert!(out.contains("strongly Stone: yes"));
    assert!(out.contains("~a v ~~a = 1: no (at a, value c)"));
}

#[test]
fn quotient_reports_both_sides() {
    let o = run(&["quotient", "fixtures/kowalski6", "--filter", "a"]);
    let out = stdout(&o);
    assert!(out.contains("F = {a,1}"));
    assert!(out.contains("c/F = {c,d}"));
    assert!(out.contains("sizes: |L(A/F)| = 4, |L(A)/λ(F)| = 4"), "{out}");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn quotient_by_the_whole_carrier() {
    let o = run(&["quotient", "kowalski6", "--filter", "0"]);
    assert!(stdout(&o).contains("sizes: |L(A/F)| = 1, |L(A)/λ(F)| = 1"));
    assert!(o.status.success());
}

#[test]
fn reticulate_prints_table_lambda_and_axioms() {
    let o = run(&["reticulate", "kowalski6"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("L(kowalski6) has 5 elements"));
    assert!(out.contains("names <0> <a> <b> <c> <1>"));
    assert!(out.contains("  d -> <c>"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn filters_are_listed() {
    let out = stdout(&run(&["filters", "kowalski6"]));
    assert!(out.starts_with("5 filters:"), "{out}");
    assert!(out.contains("{a,c,d,1}"));
    assert!(out.contains("isomorphism onto the 5 filters"));
}

#[test]
fn check_paper_passes() {
    let o = run(&["check-paper"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn export_dot_counts() {
    let count = |out: &str, pat: &str| out.lines().filter(|l| l.contains(pat)).count();
    let out = stdout(&run(&["export-dot", "kowalski6", "--reticulation"]));
    assert_eq!(count(&out, "[label="), 5);
    assert_eq!(count(&out, "->"), 5);
    assert!(out.contains("label=\"<b>\""));
    let out = stdout(&run(&["export-dot", "chain2"]));
    assert_eq!((count(&out, "[label="), count(&out, "->")), (2, 1));
}

#[test]
fn product_and_power_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.alg");
    let o = run(&["product", "chain2", "iorgulescu5", "-o", p.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&run(&["validate", p.to_str().unwrap()]));
    assert!(out.contains("with 10 elements"), "{out}");

    let out = stdout(&run(&["power", "chain3", "--atoms", "2"]));
    assert!(out.contains("size 9"), "{out}");
}

#[test]
fn colimit_of_a_system_file() {
    let dir = tempfile::tempdir().unwrap();
    let q = stdout(&run(&["power", "chain2", "--atoms", "1"]));
    std::fs::write(dir.path().join("two.alg"), q).unwrap();
    let sys = dir.path().join("s.sys");
    std::fs::write(
        &sys,
        "format reticulation-system 1\nalgebra i builtin:chain2\nalgebra j two.alg\nmap i j 0 1\n",
    )
    .unwrap();
    let o = run(&["colimit", sys.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.contains("# injection 0:"));
    assert!(out.contains("size 2"));
}

#[test]
fn usage_and_input_errors() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["quotient", "kowalski6"]).status.code(), Some(2));
    let o = run(&["validate", "no/such/file"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no such file"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, "format reticulation-algebra 1\nkind residuated-lattice\nname x\nsize 2\n").unwrap();
    let o = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["quotient", "kowalski6", "--filter", "zz"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&run(&["stone", "iorgulescu12"]));
    let b = stdout(&run(&["stone", "iorgulescu12"]));
    assert_eq!(a, b);
}
