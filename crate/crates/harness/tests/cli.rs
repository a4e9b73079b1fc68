//! End-to-end runs of the `sphereconv` binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sphereconv"))
        .args(args)
        .env_remove("SPHERECONV_SEED")
        .output()
        .expect("binary runs")
}

fn json_file(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gen_is_deterministic_per_seed() {
    let a = run(&["gen", "sphere", "--seed", "7"]);
    let b = run(&["gen", "sphere", "--seed", "7"]);
    let c = run(&["gen", "sphere", "--seed", "8"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn seed_env_var_is_the_default_seed() {
    let flag = run(&["gen", "sphere", "--seed", "11"]);
    let env = Command::new(env!("CARGO_BIN_EXE_sphereconv"))
        .args(["gen", "sphere"])
        .env("SPHERECONV_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(flag.stdout, env.stdout);
}

#[test]
fn gen_cube_and_star_ball() {
    let dir = tempfile::tempdir().unwrap();
    let cube = dir.path().join("cube.json");
    assert!(run(&["gen", "euclid", "--shape", "cube", "--out", p(&cube)]).status.success());
    let v = json_file(&cube);
    assert_eq!(v["space"], "euclid");
    assert_eq!(v["vertices"].as_array().unwrap().len(), 8);

    let ball = dir.path().join("ball.json");
    assert!(run(&["gen", "star", "--shape", "ball", "--samples", "64", "--out", p(&ball)]).status.success());
    let v = json_file(&ball);
    let values = v["values"].as_array().unwrap();
    assert_eq!(values.len(), 64);
    assert!(values.iter().all(|x| x.as_f64() == Some(1.0)));
}

#[test]
fn apply_sphere_operations() {
    let dir = tempfile::tempdir().unwrap();
    let k = dir.path().join("k.json");
    let l = dir.path().join("l.json");
    assert!(run(&["gen", "sphere", "--seed", "3", "--out", p(&k)]).status.success());
    assert!(run(&["gen", "sphere", "--seed", "4", "--theta-max", "0.3", "--out", p(&l)]).status.success());

    // the trivial operation hands K back unchanged, bit for bit
    let out = dir.path().join("t.json");
    assert!(run(&["apply", "trivial_k", p(&k), p(&l), "--out", p(&out)]).status.success());
    assert_eq!(json_file(&out)["result"], json_file(&k));

    let out = dir.path().join("h.json");
    let o = run(&["apply", "transport-hull", p(&k), p(&k), "--out", p(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stdout));
    let v = json_file(&out);
    assert_eq!(v["contained_in_conv_union"], true);
    assert_eq!(v["provenance"]["seed"], 1);
    assert!(v["provenance"]["chart_center"].is_array());
}

#[test]
fn conv_union_of_two_points_is_a_segment() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let point = |x: [f64; 3]| format!(r#"{{"space":"sphere","ambient_dim":3,"center":{x:?},"generators":[{x:?}]}}"#);
    std::fs::write(&a, point([0.0, 0.0, 1.0])).unwrap();
    std::fs::write(&b, point([1.0, 0.0, 0.0])).unwrap();
    let out = dir.path().join("c.json");
    let o = run(&["apply", "conv_union", p(&a), p(&b), "--out", p(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stdout));
    assert_eq!(json_file(&out)["result"]["generators"].as_array().unwrap().len(), 2);
    assert_eq!(run(&["apply", "no-such-op", p(&a), p(&b)]).status.code(), Some(3));
}

#[test]
fn exit_codes() {
    // 0: passing suite
    assert_eq!(run(&["check", "discontinuity"]).status.code(), Some(0));
    // 2: assertions that cannot hold at a zero-width tolerance
    assert_eq!(run(&["check", "covariance", "--trials", "3", "--tol", "1e-300"]).status.code(), Some(2));
    // 3: preconditions and I/O
    let o = run(&["gen", "sphere", "--dim", "2"]);
    assert_eq!(o.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["error"], "precondition");
    assert_eq!(run(&["check", "no-such-suite"]).status.code(), Some(3));
    assert_eq!(run(&["metric", "hausdorff", "/nonexistent/a.json", "/nonexistent/b.json"]).status.code(), Some(3));
}

#[test]
fn metric_and_project() {
    let dir = tempfile::tempdir().unwrap();
    let cube = dir.path().join("cube.json");
    let cross = dir.path().join("cross.json");
    assert!(run(&["gen", "euclid", "--shape", "cube", "--out", p(&cube)]).status.success());
    assert!(run(&["gen", "euclid", "--shape", "cross", "--out", p(&cross)]).status.success());
    let out = dir.path().join("m.json");
    assert!(run(&["metric", "hausdorff", p(&cube), p(&cube), "--out", p(&out)]).status.success());
    assert_eq!(json_file(&out)["value"], 0.0);

    let out = dir.path().join("p.json");
    assert!(run(&["project", p(&cube), "--span", "[[1,0,0],[0,1,0]]", "--out", p(&out)]).status.success());
    assert_eq!(json_file(&out)["vertices"].as_array().unwrap().len(), 4);
}
