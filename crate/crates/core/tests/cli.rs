use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braid-strata"))
        .args(args)
        .env_remove("BRAID_STRATA_LIMIT")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn cells_lists_configuration_records() {
    let doc = json(&["cells", "--space", "euclidean", "--n", "3", "--k", "2", "--filter", "configuration"]);
    assert_eq!(doc["result"]["cells"].as_array().unwrap().len(), 24);
    assert_eq!(doc["result"]["count"], 24);
    assert_eq!(doc["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(doc["config"]["command"]["n"], 3);
    let first = &doc["result"]["cells"][0];
    assert!(first["tree"].is_string() && first["dim"].is_u64() && first["id"] == 0);
}

#[test]
fn sphere_poset_dot_has_six_ranked_nodes() {
    let out = run(&["poset", "--space", "sphere", "--n", "2", "--k", "2", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("// braid-strata"));
    assert_eq!(text.matches("[label=").count(), 6);
    assert_eq!(text.matches(" -> ").count(), 8);
    assert_eq!(text.matches("rank=same").count(), 3);

    let doc = json(&["poset", "--space", "sphere", "--n", "2", "--k", "2"]);
    let cells = doc["result"]["cells"].as_array().unwrap();
    assert_eq!(doc["result"]["space"], "sphere");
    assert_eq!(cells.iter().filter(|c| c["variant"] == "A").count(), 2);
    assert!(cells.iter().filter(|c| c["variant"] == "B").all(|c| c["ell"].is_null()));
}

#[test]
fn unordered_points_on_a_circle() {
    let doc = json(&["homology", "--space", "sphere", "--n", "3", "--k", "1", "--quotient"]);
    let degrees = doc["result"]["degrees"].as_array().unwrap();
    let betti: Vec<u64> = degrees.iter().map(|d| d["betti"].as_u64().unwrap()).collect();
    assert_eq!(betti, vec![1, 1]);
    assert!(degrees.iter().all(|d| d["torsion"].as_array().unwrap().is_empty()));
}

#[test]
fn complex_artifacts() {
    let doc = json(&["complex", "--space", "sphere", "--n", "2", "--k", "2"]);
    assert_eq!(doc["result"]["dims"], serde_json::json!([6, 12, 8]));
    let doc = json(&["complex", "--space", "sphere", "--n", "2", "--k", "2", "--quotient"]);
    assert_eq!(doc["result"]["dims"], serde_json::json!([3, 6, 4]));
    assert!(doc["result"]["face_table"].is_array());
}

#[test]
fn tc_tables() {
    let doc = json(&["tc", "--family", "sphere-product", "--ks", "2,3", "--n", "4"]);
    assert_eq!(doc["result"]["reports"][0]["value"], 7);

    let doc = json(&["tc", "--family", "tcs-sphere", "--n", "2", "--k", "5"]);
    let r = &doc["result"]["reports"][0];
    assert_eq!((r["upper"].as_u64(), r["value"].as_u64()), (Some(2), Some(2)));

    let doc = json(&["tc", "--family", "cohom-witness", "--n", "3", "--m", "1"]);
    let p = &doc["result"]["witness"]["products"][0];
    assert_eq!(p["target"], "u_1 u_2 u_3");
    assert_eq!(p["target_coefficient"], "-2");
    assert_eq!(doc["result"]["witness"]["cl_lower_bound"], 3);

    let doc = json(&["tc", "--family", "torus", "--k", "2", "--n", "3", "--witness"]);
    assert_eq!(doc["result"]["reports"][0]["value"], 4);
    assert_eq!(doc["result"]["witness"]["cl_lower_bound"], 4);

    let out = run(&["tc", "--family", "torus", "--k", "2", "--n", "3", "--unreduced"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("TC_3(T^2) = 5"));
}

#[test]
fn verify_sweeps() {
    let doc = json(&["verify", "dim-sphere", "--n-max", "3", "--k-max", "3"]);
    assert_eq!(doc["result"]["passed"], true);
    let dims: Vec<(u64, u64, u64)> = doc["result"]["instances"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| (i["n"].as_u64().unwrap(), i["k"].as_u64().unwrap(), i["measured"].as_u64().unwrap()))
        .collect();
    assert_eq!(dims, vec![(2, 1, 1), (2, 2, 2), (2, 3, 3), (3, 1, 1), (3, 2, 3), (3, 3, 5)]);

    let doc = json(&["verify", "dim-salvetti", "--n-max", "4", "--k-max", "2"]);
    assert_eq!(doc["result"]["passed"], true);

    let doc = json(&["verify", "oracle-consistency", "--n-max", "2", "--k-max", "2"]);
    let last = doc["result"]["instances"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(last["status"], "pass");
    assert!(last["detail"].as_str().unwrap().starts_with("5 raw sign vectors"));

    let doc = json(&["verify", "freeness", "--n-max", "3", "--k-max", "2"]);
    assert_eq!(doc["result"]["passed"], true);
}

#[test]
fn verify_reports_refusals_without_failing() {
    let doc = json(&["verify", "dim-sphere", "--n-max", "3", "--k-max", "1", "--limit-cells", "5"]);
    let statuses: Vec<&str> =
        doc["result"]["instances"].as_array().unwrap().iter().map(|i| i["status"].as_str().unwrap()).collect();
    assert_eq!(statuses, vec!["pass", "skipped"]);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["cells", "--space", "euclidean", "--k", "2"]).status.code(), Some(2));
    assert_eq!(run(&["cells", "--space", "euclidean", "--n", "0", "--k", "2"]).status.code(), Some(2));
    assert_eq!(run(&["cells", "--space", "sphere", "--n", "2", "--k", "2", "--filter", "all"]).status.code(), Some(2));
    assert_eq!(run(&["homology", "--space", "euclidean", "--n", "2", "--k", "1", "--quotient"]).status.code(), Some(2));
    assert_eq!(run(&["cells", "--space", "euclidean", "--n", "3", "--k", "2", "--format", "dot"]).status.code(), Some(2));
    assert_eq!(run(&["tc", "--family", "cohom-witness", "--n", "2", "--m", "1", "--d", "3"]).status.code(), Some(2));
    assert_eq!(
        run(&["poset", "--space", "sphere", "--n", "4", "--k", "3", "--limit-cells", "100"]).status.code(),
        Some(3)
    );
    let out = Command::new(env!("CARGO_BIN_EXE_braid-strata"))
        .args(["cells", "--space", "euclidean", "--n", "3", "--k", "2"])
        .env("BRAID_STRATA_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("refused"));
}

#[test]
fn artifacts_are_deterministic() {
    let dir = std::env::temp_dir().join(format!("braid-strata-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for path in [&a, &b] {
        let out = run(&[
            "homology", "--space", "sphere", "--n", "2", "--k", "2", "--quotient", "--format", "json", "--jobs", "2",
            "--out", path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    let first = std::fs::read(&a).unwrap();
    assert_eq!(first, std::fs::read(&b).unwrap());
    let doc: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(doc["result"]["degrees"][1]["torsion"], serde_json::json!([2]));
    std::fs::remove_dir_all(&dir).unwrap();
}
