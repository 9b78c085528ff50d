//! End-to-end tests of the `twa` binary: output contents, exit codes, the
//! JSON round trip, file formats and the order cap.

use std::process::Command;
use twa_cli::RunReport;

fn twa() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_twa"));
    c.env_remove("TWA_MAX_ORDER");
    c
}

fn run_ok(args: &[&str]) -> String {
    let out = twa().args(args).output().expect("spawn twa");
    assert!(
        out.status.success(),
        "`twa {}` failed: {}{}",
        args.join(" "),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn group_info_q8() {
    let out = run_ok(&["group", "info", "q8"]);
    assert!(out.contains("order     8"));
    assert!(out.contains("classes   [1, 1, 2, 2, 2]"));
    assert!(out.contains("camina    true"));
    assert!(out.contains("family    CaminaP2(2,3,1)"));
}

#[test]
fn group_info_cyclic_is_abelian() {
    let out = run_ok(&["group", "info", "cyclic:5"]);
    assert!(out.contains("family    Abelian"));
}

#[test]
fn group_info_rejects_bad_cayley_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    // Order-5 quasigroup with identity: not associative.
    std::fs::write(
        &path,
        "5\n1 2 3 4 5\n2 1 4 5 3\n3 5 1 2 4\n4 3 5 1 2\n5 4 2 3 1\n",
    )
    .unwrap();
    let out = twa()
        .args(["group", "info", &format!("cayley:{}", path.display())])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not associative at (i,j,k)="), "stderr: {err}");
}

#[test]
fn twa_frobenius_dimension() {
    let out = run_ok(&["twa", "frobenius:2:2", "--dim"]);
    assert!(out.contains("dim T     19"));
    assert!(out.contains("predicted 19"));
}

#[test]
fn twa_dihedral5_not_ac_but_consistent() {
    let out = run_ok(&["twa", "dihedral:5", "--ac"]);
    assert!(out.contains("family    NotAC"));
    assert!(out.contains("intersection_numbers=false schur_condition=false class_products=false"));
}

#[test]
fn twa_json_round_trips() {
    let out = run_ok(&["twa", "q8", "--dim", "--decomp", "--json"]);
    let report: RunReport = serde_json::from_str(&out).expect("valid report JSON");
    assert_eq!(report.dim_t, 28);
    assert_eq!(report.center_dim, 4);
    let reprinted = serde_json::to_string_pretty(&report).unwrap();
    let reparsed: RunReport = serde_json::from_str(&reprinted).unwrap();
    assert_eq!(report, reparsed);
    let decomp = report.decomposition.as_ref().unwrap();
    assert_eq!(decomp.generators.len(), 3);
    assert!(decomp.accounting_ok);
}

#[test]
fn verbose_decomp_prints_exact_entries() {
    let out = run_ok(&["twa", "q8", "--decomp", "--verbose"]);
    assert!(out.contains("1/2  -1/2"), "rationals print as a/b:\n{out}");
    let out = run_ok(&["twa", "heisenberg:3", "--decomp", "--verbose"]);
    assert!(
        out.contains("*z"),
        "cyclotomic entries print as coefficient tuples:\n{out}"
    );
}

#[test]
fn scheme_build_wreath_eq_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let inner = dir.path().join("z2.scm");
    let outer = dir.path().join("z2sq.scm");
    let combined = dir.path().join("w.scm");
    run_ok(&["scheme", "build", "cyclic:2", "-o", inner.to_str().unwrap()]);
    run_ok(&[
        "scheme",
        "build",
        "prod:cyclic:2,cyclic:2",
        "-o",
        outer.to_str().unwrap(),
    ]);
    run_ok(&[
        "scheme",
        "wreath",
        inner.to_str().unwrap(),
        outer.to_str().unwrap(),
        "-o",
        combined.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&combined).unwrap();
    let s = twa_core::scheme::parse_scheme_text(&text).unwrap();
    assert_eq!((s.size(), s.classes()), (8, 5));
    // Bit-exact round trip.
    assert_eq!(twa_core::scheme::scheme_to_text(&s), text);
}

#[test]
fn scheme_eq_center_and_k9_chains() {
    let out = run_ok(&["scheme", "eq", "heisenberg:3", "--wreath", "center"]);
    assert!(out.trim().ends_with("true"));
    let out = run_ok(&["scheme", "eq", "z3sq_q8", "--wreath", "k9-z2-z2sq"]);
    assert!(out.trim().ends_with("true"));
    let out = run_ok(&["scheme", "eq", "frobenius:3:1", "--wreath", "kp-cyclic"]);
    assert!(out.trim().ends_with("true"));
}

#[test]
fn twa_z3sq_q8_reproduces_the_order_72_values() {
    let out = run_ok(&["twa", "z3sq_q8", "--dim", "--decomp", "--json"]);
    let report: RunReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.dim_t, 44);
    assert_eq!(report.dim_t0, 44);
    assert_eq!(report.center_dim, 9);
    assert_eq!(report.class_sizes, vec![1, 8, 9, 18, 18, 18]);
    assert_eq!(report.wreath_check, Some(true));
    assert!(report.decomposition.unwrap().accounting_ok);
}

#[test]
fn scheme_wreath_rejects_invalid_scheme_files() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.scm");
    let good = dir.path().join("good.scm");
    let out_file = dir.path().join("w.scm");
    // Directed-path colors: structurally fine, fails axiom 3.
    std::fs::write(&bad, "3 4\n0 1 3\n2 0 1\n4 2 0\n").unwrap();
    run_ok(&["scheme", "build", "cyclic:2", "-o", good.to_str().unwrap()]);
    let out = twa()
        .args([
            "scheme",
            "wreath",
            bad.to_str().unwrap(),
            good.to_str().unwrap(),
            "-o",
            out_file.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn scheme_eq_failure_exits_nonzero() {
    // D10's scheme is not the trivial-by-cyclic wreath product.
    let out = twa()
        .args(["scheme", "eq", "dihedral:5", "--wreath", "kp-cyclic"])
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn order_cap_is_enforced() {
    let out = twa()
        .args(["group", "info", "cyclic:17"])
        .env("TWA_MAX_ORDER", "16")
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("order cap"));
    // Default cap admits order 256.
    run_ok(&["group", "info", "cyclic:256"]);
}

#[test]
fn semidirect_file_is_rejected_when_not_automorphism() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("action.txt");
    // Z3 acted on by Z2 with a non-automorphism map (transposes 0 and 1).
    std::fs::write(&path, "cyclic:3\ncyclic:2\n1 2 3\n2 1 3\n").unwrap();
    let out = twa()
        .args(["group", "info", &format!("semidirect:{}", path.display())])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not an automorphism"));
}

#[test]
fn semidirect_file_accepts_a_valid_action() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.txt");
    // Z3 x| Z2 with inversion: this is S3.
    std::fs::write(&path, "cyclic:3\ncyclic:2\n1 2 3\n1 3 2\n").unwrap();
    let out = run_ok(&["group", "info", &format!("semidirect:{}", path.display())]);
    assert!(out.contains("order     6"));
    assert!(out.contains("family    FrobeniusPR(3,1)"));
}
