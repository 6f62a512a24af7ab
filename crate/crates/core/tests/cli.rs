use std::process::Command;

use sectorial::cli::{run_with, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE};
use sectorial::io::{load_matrix, save_matrix};
use sectorial::CMatrix;

fn data(name: &str) -> String {
    format!("{}/examples/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(std::iter::once("sectorial").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn project_diag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pi.json");
    let (code, _, err) = run(&[
        "project", "--matrix", &data("diag_pm1.json"), "--theta", "1.570796", "--phi", "4.712389", "--tol", "1e-10",
        "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK, "{err}");
    let pi = load_matrix(&out).unwrap();
    assert!(pi.dist_inf(&CMatrix::from_real_diag(&[0.0, 1.0])) < 1e-9);
}

#[test]
fn ray_through_eigenvalue_exits_3_and_names_ray() {
    let bin = env!("CARGO_BIN_EXE_sectorial");
    let o = Command::new(bin)
        .args(["project", "--matrix", &data("diag_pm1.json"), "--theta", "0", "--phi", "3.14"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(EXIT_NUMERIC));
    let msg = String::from_utf8_lossy(&o.stderr);
    assert!(msg.contains("ray at angle 0"), "{msg}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["project", "--matrix", &data("diag_pm1.json"), "--theta", "1"]).0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&["project", "--matrix", "/nonexistent.json", "--theta", "1", "--phi", "4"]).0, EXIT_USAGE);
    assert_eq!(run(&["symbol", "--p", "xi^0.5", "--x", "0", "--xi", "1", "--theta", "3"]).0, EXIT_USAGE);
    assert_eq!(run(&["project", "--matrix", &data("diag_pm1.json"), "--theta", "2", "--phi", "1"]).0, EXIT_USAGE);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
}

#[test]
fn degree_flags_match_radians() {
    let (_, rad, _) = run(&["project", "--matrix", &data("nonnormal3.json"), "--theta", "1.5707963267948966", "--phi", "4.71238898038469"]);
    let (code, deg, _) = run(&["project", "--matrix", &data("nonnormal3.json"), "--theta-deg", "90", "--phi-deg", "270"]);
    assert_eq!(code, EXIT_OK);
    let a = sectorial::io::matrix_from_json(&rad).unwrap();
    let b = sectorial::io::matrix_from_json(&deg).unwrap();
    assert!(a.dist_inf(&b) < 1e-12);
}

#[test]
fn logm_and_powm_agree() {
    let (c1, log, _) = run(&["logm", "--matrix", &data("jordan.json"), "--theta", "3.141592653589793"]);
    let (c2, sqrt, _) = run(&["powm", "--matrix", &data("jordan.json"), "--theta", "3.141592653589793", "--s", "0.5"]);
    assert_eq!((c1, c2), (EXIT_OK, EXIT_OK));
    let l = sectorial::io::matrix_from_json(&log).unwrap();
    let r = sectorial::io::matrix_from_json(&sqrt).unwrap();
    let half = sectorial::numkernel::expm(&l.scale_real(0.5));
    assert!(half.dist_inf(&r) < 1e-9);
}

#[test]
fn symbol_log_term_closed_form() {
    let (code, out, err) = run(&["symbol", "--p", "xi^2 + 2 + sin(x)", "--j", "2", "--x", "0", "--xi", "2", "--theta", "3.14159"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let m = sectorial::io::matrix_from_json(&out).unwrap();
    assert!((m[(0, 0)].re - 0.5).abs() < 1e-9);
}

#[test]
fn max_panels_env_caps_quadrature() {
    let bin = env!("CARGO_BIN_EXE_sectorial");
    let args = ["project", "--matrix", &data("nonnormal3.json"), "--theta", "1.5707963", "--phi", "4.712389", "--tol", "1e-12"];
    let o = Command::new(bin).args(args).env("SECTORIAL_MAX_PANELS", "1").output().unwrap();
    assert_eq!(o.status.code(), Some(EXIT_NUMERIC));
    let o = Command::new(bin).args(args).env("SECTORIAL_MAX_PANELS", "lots").output().unwrap();
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
}

#[test]
fn converge_csv() {
    let (code, out, err) = run(&["converge", "--matrix", &data("jordan.json"), "--theta", "1.5707963", "--phi", "4.712389", "--nodes", "8,16"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "panels,max_error,wall_ms");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("8,"));
}

#[test]
fn matrix_json_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.json");
    let second = dir.path().join("b.json");
    save_matrix(&first, &load_matrix(data("nonnormal3.json")).unwrap()).unwrap();
    save_matrix(&second, &load_matrix(&first).unwrap()).unwrap();
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());
}

#[test]
fn verify_all_passes_and_writes_sorted_json() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("report.json");
    let (code, out, err) = run(&["verify", "--suite", "all", "--seed", "42", "--tol", "1e-8", "--json", json.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{out}{err}");
    let reports: Vec<serde_json::Value> = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert!(reports.len() >= 20);
    assert!(reports.iter().all(|r| r["pass"] == true));
    let names: Vec<&str> = reports.iter().map(|r| r["check"].as_str().unwrap()).collect();
    assert!(names.windows(2).all(|w| w[0] < w[1]));
}
