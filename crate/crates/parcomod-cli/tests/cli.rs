use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parcomod")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn classify_affine_plane_is_geometric() {
    let q = corpus("q.json");
    let o = run(&["classify", q.to_str().unwrap(), "--pcd", "affine_d2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("geometric"));
    let o = run(&["--json", "classify", q.to_str().unwrap(), "--pcd", "affine_d2"]);
    let v = json(&o);
    assert_eq!(v["geometric"], true);
    assert_eq!(v["dim_xbh"], 29);
}

#[test]
fn classify_non_geometric_exits_one() {
    let q = corpus("q.json");
    let o = run(&["classify", q.to_str().unwrap(), "--pcd", "kc2_non_geometric"]);
    assert_eq!(o.status.code(), Some(1));
    let g = corpus("gf3.json");
    let args = ["classify", g.to_str().unwrap(), "--pcd", "cj_k4_ground"];
    assert_eq!(run(&args).status.code(), Some(1));
    assert_eq!(run(&[&args[..], &["--property", "quasi"]].concat()).status.code(), Some(0));
}

#[test]
fn lpa_witness_fails_pa_with_violation() {
    let q = corpus("q.json");
    let o = run(&["--json", "action-check", q.to_str().unwrap(), "--action", "lpa_witness", "--level", "pa"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let viol = &v["verdict"]["violation"];
    assert_eq!(viol["axiom"], "PA2");
    assert_eq!((viol["g"].clone(), viol["h"].clone(), viol["x"].clone()), (1.into(), 0.into(), 0.into()));
    let o = run(&["action-check", q.to_str().unwrap(), "--action", "lpa_witness", "--level", "lax"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn torsor_is_galois_over_k() {
    let q = corpus("q.json");
    let o = run(&["galois", q.to_str().unwrap(), "--algebra", "torsor_b", "--base", "k"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("bijective"));
    let o = run(&["galois", q.to_str().unwrap(), "--algebra", "kc2_trivial", "--base", "k"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn gencoass_on_affine_plane() {
    let q = corpus("q.json");
    let o = run(&["gencoass", q.to_str().unwrap(), "--pcd", "affine_d2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn tensor_witness_and_reflection() {
    let g = corpus("gf2.json");
    let g = g.to_str().unwrap();
    let args = ["tensor", g, "--left", "tensor_witness_left", "--right", "tensor_witness_right"];
    assert_eq!(run(&args).status.code(), Some(0));
    let o = run(&[&args[..], &["--property", "geometric"]].concat());
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["--json", "reflect", g, "--pcd", "tensor_witness", "--max-dim", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["universal"], true);
}

#[test]
fn reflect_respects_max_dim_env() {
    let g = corpus("gf2.json");
    let o = Command::new(env!("CARGO_BIN_EXE_parcomod"))
        .args(["reflect", g.to_str().unwrap(), "--pcd", "tensor_witness"])
        .env("PARCOMOD_MAX_DIM", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn input_errors_exit_two() {
    let q = corpus("q.json");
    assert_eq!(run(&["classify", q.to_str().unwrap(), "--pcd", "missing"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "/nonexistent.json", "--pcd", "x"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"field\": {\"type\": \"Q\"}, \"pcds\": [").unwrap();
    assert_eq!(run(&["classify", bad.to_str().unwrap(), "--pcd", "x"]).status.code(), Some(2));
}

#[test]
fn emit_corpus_matches_bundled() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["emit-corpus", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    for name in ["q.json", "gf2.json", "gf3.json"] {
        let fresh = std::fs::read(dir.path().join(name)).unwrap();
        assert_eq!(fresh, std::fs::read(corpus(name)).unwrap(), "{name}");
    }
}

#[test]
fn examples_run_filtered() {
    let o = run(&["--json", "examples", "run", "--filter", "torsor"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["holds"], true);
    assert!(!v["expectations"].as_array().unwrap().is_empty());
    assert_eq!(v["criteria"][0]["id"], 9);
}
