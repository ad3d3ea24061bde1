use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn ample(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ample")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn verify_example13_is_2_ample() {
    let out = ample(&["verify", "--ample", "2", "example13", "--expect", "ample"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["ample"]["result"], "ample");
    assert_eq!(v["config"]["args"]["ample"], 2);
}

#[test]
fn failed_expectation_exits_1() {
    let out = ample(&["verify", "--ample", "3", "example13", "--expect", "ample"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["ample"]["result"], "not_ample");
}

#[test]
fn dedekind_r3() {
    let out = ample(&["dedekind", "--r", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["reduced_dedekind"], 19);
    assert_eq!(v["min_vertices_for_ample"], 22);
}

#[test]
fn exit_codes_for_usage_and_limits() {
    assert_eq!(ample(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ample(&["verify", "--ample", "2", "/nonexistent/complex.txt"]).status.code(), Some(2));
    assert_eq!(ample(&["dedekind", "--r", "6"]).status.code(), Some(3));
    assert_eq!(ample(&["verify", "--ample", "5", "point"]).status.code(), Some(3));
    assert_eq!(ample(&["gen", "rado", "--budget", "1000000"]).status.code(), Some(3));
}

#[test]
fn paley_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for format in ["text", "structured"] {
        let path = dir.path().join(format!("paley.{format}"));
        let p = path.to_str().unwrap();
        let out = ample(&["gen", "--format", format, "-o", p, "paley", "--q", "13", "--p", "3"]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        let meta: Value = serde_json::from_str(&fs::read_to_string(format!("{p}.meta.json")).unwrap()).unwrap();
        assert_eq!(meta["metadata"]["g"], 2);

        let hom = json(&ample(&["homology", p, "--field", "rational"]));
        assert_eq!(hom["summary"]["vertices"], 13);
        let iso = ample(&["iso", p, p, "--expect", "isomorphic"]);
        assert_eq!(iso.status.code(), Some(0));
    }
}

#[test]
fn seeds_reproduce() {
    let a = ample(&["gen", "--seed", "9", "medial", "--n", "24"]);
    let b = ample(&["gen", "--seed", "9", "medial", "--n", "24"]);
    assert_eq!(a.stdout, b.stdout);
    let c = ample(&["census", "--seed", "3", "--ns", "10,12", "--trials", "2"]);
    let d = ample(&["--threads", "1", "census", "--seed", "3", "--ns", "10,12", "--trials", "2"]);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn experiments_write_csv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    fs::write(&cfg, r#"{"ns": [16], "trials": 2}"#).unwrap();
    let csv = dir.path().join("stats.csv");
    let out = ample(&[
        "medial-stats",
        "--config",
        cfg.to_str().unwrap(),
        "--trials",
        "3",
        "-o",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["config"]["trials"], 3);
    assert_eq!(v["config"]["ns"], serde_json::json!([16]));
    let table = fs::read_to_string(&csv).unwrap();
    assert_eq!(table.lines().count(), 4);
    let report: Value = serde_json::from_str(&fs::read_to_string(format!("{}.json", csv.display())).unwrap()).unwrap();
    assert_eq!(report["records"].as_array().unwrap().len(), 3);
}

#[test]
fn fill_loop_reports_missing_witness() {
    let out = ample(&["fill-loop", "cycle4", "--loop", "0,2,1,3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["missing_witness"]["u"].is_array());
}

#[test]
fn tc_bound_calculator() {
    let v = json(&ample(&["tc-bound", "--l", "100"]));
    assert_eq!(v["calculation"]["tc_bound"], 4);
}
