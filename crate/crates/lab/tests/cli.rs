use std::path::Path;
use std::process::{Command, Output};

use fueter_lab::{EXIT_CONFIG, EXIT_MISMATCH, EXIT_OK, EXIT_PRECONDITION};
use serde_json::Value;

fn lab(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fueter-lab")).args(args).arg("--out").arg(out).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn small_config(dir: &Path, extra: &str) -> String {
    write(dir, "small.toml", &format!("[corpus]\nsize = 8\nmax_degree = 4\n{extra}"))
}

#[test]
fn verify_passes_on_a_small_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = small_config(dir.path(), "");
    let o = lab(&["verify", "--config", &cfg], dir.path());
    assert_eq!(code(&o), EXIT_OK, "{}", String::from_utf8_lossy(&o.stderr));
    let report: Value = serde_json::from_slice(&std::fs::read(dir.path().join("verify.json")).unwrap()).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["entries"].as_array().unwrap().len(), 8);
    assert_eq!(report["confusion"]["eq2"]["true_positive"], 4);
}

#[test]
fn float_backend_and_ellipsoid_pass() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = small_config(dir.path(), "[domain]\nkind = \"ellipsoid\"\nr1 = 2.0\nr2 = 1.0\n");
    let o = lab(&["verify", "--config", &cfg, "--backend", "float"], dir.path());
    assert_eq!(code(&o), EXIT_OK, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn seed_flag_changes_the_report() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let cfg = small_config(a.path(), "");
    assert_eq!(code(&lab(&["verify", "--config", &cfg, "--seed", "1"], a.path())), EXIT_OK);
    assert_eq!(code(&lab(&["verify", "--config", &cfg, "--seed", "2"], b.path())), EXIT_OK);
    let read = |d: &Path| std::fs::read(d.join("verify.json")).unwrap();
    assert_ne!(read(a.path()), read(b.path()));
}

#[test]
fn impossible_tolerance_is_a_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = small_config(dir.path(), "[weak]\ntolerance = 1e-300\n");
    assert_eq!(code(&lab(&["verify", "--config", &cfg], dir.path())), EXIT_MISMATCH);
}

#[test]
fn malformed_config_exits_2_with_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "bad.toml", "[corpus]\nsize = \"fifty\"\n");
    let o = lab(&["verify", "--config", &cfg], dir.path());
    assert_eq!(code(&o), EXIT_CONFIG);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("bad.toml") && err.contains("size"), "{err}");
    let missing = dir.path().join("missing.toml").display().to_string();
    let o = lab(&["verify", "--config", &missing], dir.path());
    assert_eq!(code(&o), EXIT_CONFIG);
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing.toml"));
}

#[test]
fn conjugate_examples() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "f1.json", r#"[{"e": [0, 1, 1, 0], "re": "1", "im": "0"}]"#);
    let o = lab(&["conjugate", &input], dir.path());
    assert_eq!(code(&o), EXIT_OK, "{}", String::from_utf8_lossy(&o.stderr));
    let out: Value = serde_json::from_slice(&std::fs::read(dir.path().join("conjugate.json")).unwrap()).unwrap();
    assert_eq!(out["f2"], serde_json::json!([{"e": [0, 0, 0, 2], "re": "1/2", "im": "0/1"}]));
    assert_eq!(out["certificate"]["dprime_residual_exact_zero"], true);
    assert_eq!(out["certificate"]["compat_components"], serde_json::json!([]));

    let input = write(dir.path(), "z1.json", r#"[{"e": [1, 0, 0, 0], "re": "1", "im": "0"}]"#);
    assert_eq!(code(&lab(&["conjugate", &input], dir.path())), EXIT_OK);
    let out: Value = serde_json::from_slice(&std::fs::read(dir.path().join("conjugate.json")).unwrap()).unwrap();
    assert_eq!(out["f2"], serde_json::json!([]));
}

#[test]
fn non_harmonic_input_exits_3_with_laplacian() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "f1.json", r#"[{"e": [1, 1, 0, 0], "re": "1", "im": "0"}]"#);
    let o = lab(&["conjugate", &input], dir.path());
    assert_eq!(code(&o), EXIT_PRECONDITION);
    assert!(String::from_utf8_lossy(&o.stderr).contains("(4/1)"));
    let garbled = write(dir.path(), "g.json", "[{\"e\": [1]}]");
    assert_eq!(code(&lab(&["conjugate", &garbled], dir.path())), EXIT_CONFIG);
}

#[test]
fn moments_table() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&lab(&["moments"], dir.path())), EXIT_OK);
    let mut rdr = csv::Reader::from_path(dir.path().join("moments.csv")).unwrap();
    let rows: Vec<Vec<String>> = rdr.records().map(|r| r.unwrap().iter().map(String::from).collect()).collect();
    let find = |k: [&str; 4]| rows.iter().find(|r| r[..4] == k).unwrap().clone();
    let val = |r: &Vec<String>, i: usize| r[i].parse::<f64>().unwrap();
    let two_pi2 = 2.0 * std::f64::consts::PI.powi(2);
    let r = find(["0", "0", "0", "0"]);
    assert!((val(&r, 4) - two_pi2).abs() < 1e-15 && (val(&r, 5) - two_pi2).abs() < 1e-12);
    let r = find(["1", "1", "1", "1"]);
    assert!((val(&r, 4) - two_pi2 / 6.0).abs() < 1e-15 && (val(&r, 5) - two_pi2 / 6.0).abs() < 1e-12);
    let r = find(["1", "0", "0", "0"]);
    assert_eq!(val(&r, 4), 0.0);
    assert!(val(&r, 5).hypot(val(&r, 6)) < 1e-14);
    assert!(rows.iter().all(|r| val(r, 7) < 1e-12));
    assert!(dir.path().join("quadrature.csv").exists());
}

#[test]
fn reconstruct_table_converges() {
    let dir = tempfile::tempdir().unwrap();
    let o = lab(&["reconstruct"], dir.path());
    assert_eq!(code(&o), EXIT_OK, "{}", String::from_utf8_lossy(&o.stderr));
    let mut rdr = csv::Reader::from_path(dir.path().join("reconstruct.csv")).unwrap();
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(headers.get(headers.len() - 1), Some("seconds"));
    assert!(rdr.records().count() >= 9);
}
