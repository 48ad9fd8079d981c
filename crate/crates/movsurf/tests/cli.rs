//! End-to-end tests of the command-line front end: output shapes, exit
//! codes and seed determinism.

use std::path::Path;
use std::process::{Command, Output};

fn movsurf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_movsurf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn sample(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("samples")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn matrices_header_tensor() {
    let out = movsurf(&[
        "matrices",
        "--input",
        &sample("tensor_bilinear.txt"),
        "--which",
        "ms",
        "--d",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("9 x 9"), "{}", text);
    assert!(text.contains("rows:"));
    assert!(text.contains("cols:"));
}

#[test]
fn matrices_header_triangular_mp() {
    let out = movsurf(&[
        "matrices",
        "--input",
        &sample("triangular_cubic.txt"),
        "--which",
        "mp",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("21 x 24"));
}

#[test]
fn malformed_input_exits_2() {
    let dir = std::env::temp_dir().join("movsurf-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad_degree.txt");
    std::fs::write(
        &path,
        "case=tensor\nm=2\nn=1\nx1=s*t+u*v\nx2=s*v\nx3=u*t\nx4=u*v\n",
    )
    .unwrap();
    let out = movsurf(&[
        "matrices",
        "--input",
        path.to_str().unwrap(),
        "--which",
        "mp",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spaces_dimensions() {
    let out = movsurf(&[
        "spaces",
        "--input",
        &sample("tensor_bilinear.txt"),
        "--d",
        "2",
        "--sigma",
        "1,1",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("dimension 24"));

    let out = movsurf(&[
        "spaces",
        "--input",
        &sample("triangular_cubic.txt"),
        "--d",
        "1",
        "--sigma",
        "0",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("dimension 1"));
}

#[test]
fn resultant_engines_agree_on_zero_case() {
    let dir = std::env::temp_dir().join("movsurf-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("common_root.txt");
    std::fs::write(&path, "case=tensor\nm=1\nn=1\nx1=s*t\nx2=s*v\nx3=u*t\n").unwrap();
    for engine in ["koszul", "dixon"] {
        let out = movsurf(&[
            "resultant",
            "--input",
            path.to_str().unwrap(),
            "--engine",
            engine,
        ]);
        assert!(out.status.success());
        assert_eq!(stdout(&out).trim(), "0");
    }
}

#[test]
fn macaulay_degenerate_falls_back() {
    let dir = std::env::temp_dir().join("movsurf-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("shared_factor.txt");
    std::fs::write(&path, "case=triangular\nn=2\nx1=s^2\nx2=s*t\nx3=s*u\n").unwrap();
    let out = movsurf(&[
        "resultant",
        "--input",
        path.to_str().unwrap(),
        "--engine",
        "macaulay",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn implicitize_base_points_exits_2() {
    let out = movsurf(&[
        "implicitize",
        "--input",
        &sample("base_points.txt"),
        "--method",
        "res",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("base points"));
}

#[test]
fn implicitize_reports_power() {
    let out = movsurf(&[
        "implicitize",
        "--input",
        &sample("triangular_cubic.txt"),
        "--method",
        "res",
        "--validate",
        "5",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(X1+X2+X3-X4)^9"), "{}", text);
    assert!(text.contains("5/5"));
}

#[test]
fn verify_is_seed_deterministic() {
    let args = [
        "verify",
        "--case",
        "tensor",
        "--m",
        "1",
        "--n",
        "1",
        "--identity",
        "conj-61",
        "--trials",
        "4",
        "--seed",
        "9",
    ];
    let a = movsurf(&args);
    let b = movsurf(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("result: 4/4 pass"));
}

#[test]
fn verify_json_mirrors_text() {
    let out = movsurf(&[
        "verify",
        "--case",
        "triangular",
        "--n",
        "1",
        "--identity",
        "conj-62",
        "--trials",
        "2",
        "--seed",
        "5",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["trials"], 2);
    assert_eq!(v["passed"], v["total"]);
    assert!(v["checks"].as_array().unwrap().len() >= 2);
}

#[test]
fn verify_fixed_instance() {
    let out = movsurf(&[
        "verify",
        "--input",
        &sample("tensor_bilinear.txt"),
        "--identity",
        "thm-mth",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Res * |M*T| = +-P^h"));
    assert!(text.contains("pass"));
}

#[test]
fn failed_identity_exits_1() {
    // The planar cubic has six moving planes of degree 2, not three, so the
    // kernel dimension formula's hypothesis fails and the check reports it.
    let out = movsurf(&[
        "verify",
        "--input",
        &sample("triangular_cubic.txt"),
        "--identity",
        "dim-formula",
        "--d",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn unknown_identity_exits_2() {
    let out = movsurf(&[
        "verify",
        "--case",
        "tensor",
        "--m",
        "1",
        "--n",
        "1",
        "--identity",
        "nope",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
