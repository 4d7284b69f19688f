//! End-to-end tests of the `swb` binary: exit codes, output determinism,
//! and log replayability.

use std::path::PathBuf;
use std::process::{Command, Output};

fn swb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_swb"))
        .args(args)
        .env_remove("SWB_PRIME")
        .env_remove("SWB_LOG")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp_file(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("swb-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn dims_example_from_the_surface() {
    let out = swb(&[
        "hitchin", "dims", "--e", "0,1", "--m", "1,1", "--k", "1", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["expected_general"], 0);
    assert_eq!(v["end_twist_dim"], 8);
}

#[test]
fn gonality_table_example() {
    let out = swb(&["covers", "gonality-table", "--g", "9", "--theta", "even"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "12");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["hitchin", "dims", "--e", "0,1", "--m", "1,1"], // missing --k
        vec![
            "hitchin", "dims", "--e", "0,1", "--m", "1,1", "--k", "1", "--bogus", "x",
        ],
        vec!["nonsense", "op"],
        vec!["covers", "gonality-table", "--g", "9"], // --theta missing
    ] {
        let out = swb(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn data_errors_exit_3() {
    // unreadable file
    let out = swb(&["spectral", "disc", "--data", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(3));
    // malformed JSON
    let path = tmp_file("bad.json");
    std::fs::write(&path, "{ not json").unwrap();
    let out = swb(&["spectral", "disc", "--data", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    // well-formed JSON, malformed form text
    std::fs::write(
        &path,
        r#"{"schema_version":1,"type":"spectral_data","field":{"kind":"prime","p":1009},"n":1,"k":1,"s":["y^2; twist=1"]}"#,
    )
    .unwrap();
    let out = swb(&["spectral", "disc", "--data", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    // twist mismatch in the data
    std::fs::write(
        &path,
        r#"{"schema_version":1,"type":"spectral_data","field":{"kind":"prime","p":1009},"n":1,"k":1,"s":["x^2; twist=2"]}"#,
    )
    .unwrap();
    let out = swb(&["spectral", "disc", "--data", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let _ = std::fs::remove_file(&path);
}

#[test]
fn precondition_errors_exit_4() {
    // characteristic too small for the discriminant: n = 3 over F_3
    let path = tmp_file("smallchar.json");
    std::fs::write(
        &path,
        r#"{"schema_version":1,"type":"spectral_data","field":{"kind":"prime","p":3},"n":3,"k":1,"s":["x; twist=1","x^2; twist=2","1; twist=3"]}"#,
    )
    .unwrap();
    let out = swb(&["spectral", "disc", "--data", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    // identically zero discriminant rejected by classify
    std::fs::write(
        &path,
        r#"{"schema_version":1,"type":"spectral_data","field":{"kind":"prime","p":1009},"n":2,"k":1,"s":["1007*x; twist=1","x^2; twist=2"]}"#,
    )
    .unwrap();
    let out = swb(&["spectral", "classify", "--data", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    let _ = std::fs::remove_file(&path);
    // non-prime modulus
    let out = swb(&[
        "hitchin",
        "experiment",
        "--e",
        "0",
        "--m",
        "2",
        "--k",
        "1",
        "--prime",
        "1000",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn experiment_outputs_are_deterministic() {
    let args = [
        "hitchin",
        "experiment",
        "--e",
        "0,1",
        "--m",
        "1,1",
        "--k",
        "2",
        "--prime",
        "1009",
        "--seed",
        "33",
        "--samples",
        "5",
        "--format",
        "json",
    ];
    let a = swb(&args);
    let b = swb(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b), "payload must be byte-identical");
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["dominant"], true);
}

#[test]
fn log_records_replay_to_the_same_payload() {
    let log = tmp_file("log.jsonl");
    let _ = std::fs::remove_file(&log);
    let out = swb(&[
        "hitchin",
        "experiment",
        "--e",
        "0",
        "--m",
        "2",
        "--k",
        "1",
        "--seed",
        "7",
        "--samples",
        "4",
        "--format",
        "json",
        "--no-timestamp",
        "--out",
        log.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let line = std::fs::read_to_string(&log).unwrap();
    let record: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(record["schema_version"], 1);
    assert_eq!(record["command"], "hitchin experiment");
    assert!(record.get("timestamp_ms").is_none());
    // replay from the recorded parameters
    let p = &record["params"];
    let e: Vec<String> = p["e"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.to_string())
        .collect();
    let m: Vec<String> = p["m"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.to_string())
        .collect();
    let replay = swb(&[
        "hitchin",
        "experiment",
        "--e",
        &e.join(","),
        "--m",
        &m.join(","),
        "--k",
        &p["k"].to_string(),
        "--prime",
        &p["p"].to_string(),
        "--seed",
        &p["seed"].to_string(),
        "--samples",
        &p["samples"].to_string(),
        "--format",
        "json",
    ]);
    let replayed: serde_json::Value = serde_json::from_str(&stdout(&replay)).unwrap();
    assert_eq!(record["result"], replayed);
    let _ = std::fs::remove_file(&log);
}

#[test]
fn charpoly_round_trip_through_files() {
    use spectral_workbench::json::{to_json_string, TwistedEndoDoc};
    use spectral_workbench::spectral::{companion, SpectralData};
    let data = SpectralData::random(3, 1, 1009, 99).unwrap();
    let phi = companion(&data, 1);
    let path = tmp_file("endo.json");
    std::fs::write(&path, to_json_string(&TwistedEndoDoc::of(&phi))).unwrap();
    let out = swb(&[
        "spectral",
        "charpoly",
        "--endo",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: spectral_workbench::json::SpectralDataDoc =
        serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.into_data().unwrap(), data);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn rank_drop_cli_example() {
    let out = swb(&[
        "quartic",
        "rank-drop",
        "--fixture",
        "beauville-genus3",
        "--prime",
        "1163",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let points = v["points"].as_array().unwrap();
    for expected in [[1, 0, 0], [0, 1, 0], [1, 1, 0]] {
        assert!(points.iter().any(|p| p == &serde_json::json!(expected)));
    }
}

#[test]
fn hilbert_csv_rendering() {
    let out = swb(&[
        "covers",
        "hilbert",
        "--random",
        "--seed",
        "3",
        "--max-degree",
        "6",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("degree,r_theta,r_pullback"));
    assert_eq!(lines.next(), Some("0,1,1"));
    // degree 6: 5 and 9
    assert!(text.lines().any(|l| l == "6,5,9"));
}

#[test]
fn quartic_symbolic_subcommands() {
    let out = swb(&[
        "quartic",
        "det",
        "--fixture",
        "beauville-genus3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["degree"], 4);

    let out = swb(&[
        "quartic",
        "cofactors",
        "--fixture",
        "beauville-genus3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["cofactors"].as_array().unwrap().len(), 4);

    let out = swb(&[
        "quartic",
        "adjugate-check",
        "--fixture",
        "beauville-genus3",
        "--quad",
        "0,1,2,3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["holds"], true);

    let out = swb(&[
        "quartic",
        "smooth-check",
        "--fixture",
        "beauville-genus3",
        "--prime",
        "1009",
        "--e-max",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["report"]["status"], "smooth_over_checked_fields");
}

#[test]
fn covers_generation_subcommand() {
    let out = swb(&[
        "covers",
        "generation",
        "--random",
        "--seed",
        "5",
        "--d-gen",
        "3",
        "--d-target",
        "6",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["generated"], true);
    assert_eq!(v["target_dim"], 9);
}

#[test]
fn covers_hilbert_from_fixture_file() {
    use spectral_workbench::covers::Genus2ThetaRing;
    use spectral_workbench::json::{to_json_string, Genus2RingDoc};
    let ring = Genus2ThetaRing::random(1009, 21, true).unwrap();
    let path = tmp_file("ring.json");
    std::fs::write(&path, to_json_string(&Genus2RingDoc::of(&ring))).unwrap();
    let out = swb(&[
        "covers", "hilbert", "--fixture", path.to_str().unwrap(), "--max-degree", "8",
        "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let table = v["table"].as_array().unwrap();
    assert_eq!(table.len(), 9);
    assert_eq!(table[6]["r_pullback"], 9);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn spectral_classify_happy_path() {
    let path = tmp_file("flex.json");
    std::fs::write(
        &path,
        r#"{"schema_version":1,"type":"spectral_data","field":{"kind":"prime","p":1009},"n":3,"k":1,"s":["0; twist=1","0; twist=2","1008*x; twist=3"]}"#,
    )
    .unwrap();
    let out = swb(&[
        "spectral",
        "classify",
        "--data",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["squarefree"], false);
    let tags: Vec<&str> = v["classifications"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["tag"].as_str().unwrap())
        .collect();
    assert!(tags.contains(&"flex"));
    let _ = std::fs::remove_file(&path);
}

#[test]
fn env_var_supplies_default_prime() {
    let out = Command::new(env!("CARGO_BIN_EXE_swb"))
        .args([
            "hitchin",
            "experiment",
            "--e",
            "0",
            "--m",
            "1",
            "--k",
            "1",
            "--samples",
            "2",
            "--format",
            "json",
        ])
        .env("SWB_PRIME", "7")
        .env_remove("SWB_LOG")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["p"], 7);
}
