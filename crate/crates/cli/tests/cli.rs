use std::path::Path;
use std::process::{Command, Output};

use qtbraid::linalg::Matrix;
use qtbraid::scalar::Cyclotomic;
use qtbraid_cli::RunReport;

fn qtbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtbraid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_report(args: &[&str]) -> (RunReport, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = qtbraid(&all);
    let text = String::from_utf8(out.stdout).unwrap();
    let report = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (report, out.status.code().unwrap())
}

fn read_matrix(path: &Path) -> Matrix {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn halves(rows: &[&[i64]]) -> Matrix {
    Matrix::from_int_rows(rows).unwrap().scale(&Cyclotomic::ratio(1, 2))
}

#[test]
fn gen_r_writes_z2_matrices() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("z2");
    let (report, code) = json_report(&["gen-r", "--orders", "2", "--output", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report.artifacts.len(), 4);
    assert_eq!(
        read_matrix(&out.join("gamma_r.json")),
        halves(&[&[1, 1, 1, -1], &[1, 1, -1, 1], &[1, -1, 1, 1], &[-1, 1, 1, 1]])
    );
    assert_eq!(
        read_matrix(&out.join("r_prime.json")),
        halves(&[&[1, 1, 1, -1], &[1, -1, 1, 1], &[1, 1, -1, 1], &[-1, 1, 1, 1]])
    );
}

#[test]
fn gen_r_trivial_and_larger_groups() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one");
    let (_, code) = json_report(&["gen-r", "--orders", "1", "--output", one.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(read_matrix(&one.join("r_prime.json")), Matrix::identity(1));

    let six = dir.path().join("six");
    json_report(&["gen-r", "--orders", "2,3", "--output", six.to_str().unwrap()]);
    let m = read_matrix(&six.join("r_prime.json"));
    assert_eq!((m.rows(), m.cols()), (36, 36));
}

#[test]
fn check_all_passes_for_z2() {
    let (report, code) = json_report(&["check", "--orders", "2", "--which", "all"]);
    assert_eq!(code, 0);
    assert!(report.checks.len() >= 10);
    assert!(report.checks.iter().all(|c| c.status == qtbraid_cli::Status::Pass));
    assert!(report.checks.iter().all(|c| !c.paper_anchor.is_empty()));
}

#[test]
fn check_braided_ybe_for_z3() {
    let (report, code) = json_report(&["check", "--orders", "3", "--which", "braided-ybe"]);
    assert_eq!(code, 0);
    assert_eq!(report.checks.len(), 1);
}

#[test]
fn literal_form_is_recorded() {
    let (report, code) = json_report(&["check", "--orders", "2,2", "--which", "ybe", "--form", "literal-eq17"]);
    assert_eq!(code, 0);
    let c = report.check("algebraic-ybe").unwrap();
    assert_eq!(c.status, qtbraid_cli::Status::Recorded);
    assert!(c.result.is_some());
}

#[test]
fn braid_relation_as_word_equality() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    qtbraid(&["braid", "--orders", "2", "--strands", "3", "--word", "1,2,1", "--output", a.to_str().unwrap()]);
    qtbraid(&["braid", "--orders", "2", "--strands", "3", "--word", "2,1,2", "--output", b.to_str().unwrap()]);
    assert_eq!(read_matrix(&a), read_matrix(&b));
    let e = dir.path().join("e.json");
    let out = qtbraid(&["braid", "--orders", "2", "--strands", "3", "--word", "", "--output", e.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(read_matrix(&e), Matrix::identity(8));
}

#[test]
fn braid_on_bell_state() {
    let (report, code) = json_report(&["braid", "--orders", "2", "--strands", "2", "--word", "1", "--state", "phi+"]);
    assert_eq!(code, 0);
    assert!(report.check("image").unwrap().detail.ends_with("= psi+"));
    assert_eq!(report.check("concurrence").unwrap().detail, "1.000000000000");
    assert_eq!(report.check("schmidt-rank-cut1").unwrap().detail, "2");
}

#[test]
fn braid_float_backend() {
    let (report, code) = json_report(&[
        "braid", "--orders", "2", "--strands", "2", "--word", "1", "--state", "00", "--backend", "float",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report.check("schmidt-rank-cut1").unwrap().detail, "2");
}

#[test]
fn compare_gates_table() {
    let (report, code) = json_report(&["compare-gates"]);
    // the displayed Bell matrix sends |11> to a product state
    assert_eq!(code, 1);
    let failed: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| c.status == qtbraid_cli::Status::Fail)
        .map(|c| c.name.as_str())
        .collect();
    assert_eq!(failed, vec!["B (as displayed): basis-actions"]);
    assert_eq!(report.table.len(), 7);
    assert_eq!(report.table[1][1], "yes");
    assert_eq!(report.table[1][4], "yes");
    assert_eq!(report.table[2][3], "0.000000");
    assert_eq!(report.table[3][3], "1.000000");
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(qtbraid(&["check", "--orders", "2", "--which", "nope"]).status.code(), Some(2));
    assert_eq!(qtbraid(&["check", "--orders", "2,x"]).status.code(), Some(2));
    assert_eq!(qtbraid(&["check", "--orders", "0"]).status.code(), Some(2));
    assert_eq!(qtbraid(&["braid", "--orders", "2", "--strands", "3", "--word", "3"]).status.code(), Some(2));
    assert_eq!(qtbraid(&["braid", "--orders", "2", "--strands", "3", "--word", "1,,2"]).status.code(), Some(2));
    assert_eq!(
        qtbraid(&["braid", "--orders", "2", "--strands", "3", "--word", "1", "--state", "phi+"]).status.code(),
        Some(2)
    );
    assert_eq!(qtbraid(&["gen-r", "--orders", "2", "--output", "/proc/qtbraid/x"]).status.code(), Some(2));
    assert_eq!(qtbraid(&["check", "--orders", "2", "--tolerance", "1e-6"]).status.code(), Some(2));
    assert_eq!(qtbraid(&["check"]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let args = ["check", "--orders", "2,2", "--which", "all", "--json"];
    let a = qtbraid(&args).stdout;
    let b = qtbraid(&args).stdout;
    assert_eq!(a, b);
    let t = String::from_utf8(a).unwrap();
    assert!(!t.contains("seconds"));
    let timed = String::from_utf8(qtbraid(&["check", "--orders", "2", "--which", "hopf", "--json", "--timings"]).stdout).unwrap();
    assert!(timed.contains("seconds"));
}

#[test]
fn exported_matrices_reimport_with_same_outcomes() {
    let dir = tempfile::tempdir().unwrap();
    for orders in ["2", "3", "2,2"] {
        let out = dir.path().join(orders.replace(',', "_"));
        qtbraid(&["gen-r", "--orders", orders, "--output", out.to_str().unwrap()]);
        let (fresh, c1) = json_report(&["check", "--orders", orders, "--which", "all"]);
        let (imported, c2) = json_report(&[
            "check",
            "--orders",
            orders,
            "--which",
            "all",
            "--r-tensor",
            out.join("r_tensor.json").to_str().unwrap(),
            "--r-matrix",
            out.join("r_prime.json").to_str().unwrap(),
        ]);
        assert_eq!(c1, c2);
        assert_eq!(fresh.checks, imported.checks, "{orders}");
    }
}

#[test]
fn help_documents_conventions() {
    for args in [&["--help"][..], &["braid", "--help"], &["check", "--help"]] {
        let out = qtbraid(args);
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains("multiplied out as written"), "{args:?}");
        assert!(text.contains("last letter acts on a state first"), "{args:?}");
    }
}
