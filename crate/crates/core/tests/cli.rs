//! The `gcluster` binary: output and exit status.

use std::process::{Command, Output};

fn gcluster(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcluster"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn mutate_prints_the_seed() {
    let o = gcluster(&["mutate", "--config", "data/a2_principal.json", "--path", "1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["x"][0], "x1^-1*x2 + y1*x1^-1");
    assert_eq!(v["c_matrix"], serde_json::json!([[-1, 1], [0, 1]]));

    let root = gcluster(&["mutate", "--config", "data/a2.json"]);
    let twice = gcluster(&["mutate", "--config", "data/a2.json", "--path", "1,1"]);
    let x = |o: &Output| serde_json::from_str::<serde_json::Value>(&stdout(o)).unwrap()["x"].clone();
    assert_eq!(x(&root), serde_json::json!(["x1", "x2"]));
    assert_eq!(x(&root), x(&twice));
}

#[test]
fn explore_reports_counts() {
    let o = gcluster(&["explore", "--config", "data/a2.json", "--format", "dot"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("graph exchange {"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("5 vertices, 5 edges, complete"));

    let out = std::env::temp_dir().join("gcluster_depth0.json");
    let o = gcluster(&[
        "explore",
        "--config",
        "data/a2.json",
        "--depth",
        "0",
        "--format",
        "json",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(stdout(&o).trim(), "1 vertex, 0 edges, truncated");
    let g: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(g["complete"], false);

    let o = gcluster(&["explore", "--config", "data/rank2_generalized.json", "--format", "json"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("6 vertices, 6 edges, complete"));

    let o = gcluster(&["explore", "--config", "data/a2.json", "--format", "svg"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_status() {
    for (check, config) in [
        ("d-trichotomy", "data/a2.json"),
        ("connected-subgraph", "data/a3.json"),
        ("compatible-sets", "data/rank2_generalized.json"),
        ("cg-duality", "data/rank2_generalized.json"),
        ("separation", "data/rank2_tropical.json"),
        ("bijection", "data/pair_rank2.json"),
        ("d-equality", "data/pair_rank2.json"),
    ] {
        let o = gcluster(&["verify", check, "--config", config]);
        assert_eq!(o.status.code(), Some(0), "{check}: {}", stdout(&o));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["status"], "pass");
    }
    let o = gcluster(&["verify", "cluster-formula", "--config", "data/a2.json", "--trials", "3", "--rng-seed", "9"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_rejects_bad_input() {
    let o = gcluster(&["verify", "d-trichotomy", "--config", "data/bad_matrix.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("config error at B"));
    let o = gcluster(&["verify", "bijection", "--config", "data/a2.json"]);
    assert_eq!(o.status.code(), Some(2));
    let o = gcluster(&["verify", "no-such-check", "--config", "data/a2.json"]);
    assert_eq!(o.status.code(), Some(2));
}
