use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn radon(args: &[&str], replay_dir: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_radon"));
    cmd.args(args);
    if let Some(dir) = replay_dir {
        cmd.env("RADON_REPLAY_DIR", dir);
    }
    cmd.output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn gen_is_deterministic() {
    let a = radon(&["gen", "--dim", "3", "--seed", "7", "--bound", "9"], None);
    let b = radon(&["gen", "--dim", "3", "--seed", "7", "--bound", "9"], None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["dim"], 3);
    assert_eq!(v["points"].as_array().unwrap().len(), 5);
    assert_eq!(v["meta"]["seed"], 7);
    let c = radon(&["gen", "--dim", "3", "--seed", "8", "--bound", "9"], None);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn compute_and_verify_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("inst.json");
    let gen = radon(&["gen", "--dim", "4", "--seed", "123", "--bound", "20"], None);
    std::fs::write(&path, &gen.stdout).unwrap();
    let file = path.to_str().unwrap();

    let rec = radon(&["compute", "--algo", "recursive", file], None);
    let alg = radon(&["compute", "--algo", "algebraic", file], None);
    assert_eq!(rec.status.code(), Some(0));
    assert_eq!(json(&rec), json(&alg));

    let ver = radon(&["verify", file], None);
    assert_eq!(ver.status.code(), Some(0));
    let report = json(&ver);
    assert_eq!(report["verdict"]["status"], "pass");
    assert_eq!(report["oracle"]["radon_partitions"][0]["partition"], json(&rec)["partition"]);
    assert_eq!(report["oracle"]["radon_partitions"][0]["witness"], json(&rec)["witness"]);
}

#[test]
fn square_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sq.json");
    std::fs::write(&path, r#"{"dim":2,"points":[["0/1","0/1"],["1/1","0/1"],["0/1","1/1"],["1/1","1/1"]]}"#).unwrap();
    let out = radon(&["compute", "--algo", "recursive", path.to_str().unwrap()], None);
    let v = json(&out);
    assert_eq!(v["partition"], serde_json::json!([[1, 4], [2, 3]]));
    assert_eq!(v["witness"], serde_json::json!(["1/2", "1/2"]));
    assert_eq!(v["coeffs_I"], serde_json::json!(["1/2", "1/2"]));
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    };
    let dup = write("dup.json", r#"{"dim":1,"points":[["1/1"],["1/1"],["2/1"]]}"#);
    let float = write("float.json", r#"{"dim":1,"points":[[0.5],["1/1"],["2/1"]]}"#);
    let small = write("small.json", r#"{"dim":2,"points":[["0/1","0/1"],["1/1","0/1"],["0/1","1/1"]]}"#);
    let line = write("line.json", r#"{"dim":2,"points":[["0/1","0/1"],["0/1","1/1"],["1/1","1/1"],["0/1","2/1"]]}"#);

    for f in [&dup, &float, &small] {
        assert_eq!(radon(&["compute", "--algo", "algebraic", f], None).status.code(), Some(2), "{f}");
        assert_eq!(radon(&["verify", f], None).status.code(), Some(2), "{f}");
    }
    let out = radon(&["compute", "--algo", "recursive", &line], None);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["violating_subset"], serde_json::json!([1, 2, 4]));
    assert_eq!(radon(&["verify", &line], None).status.code(), Some(1));

    assert_eq!(radon(&["compute", "--algo", "magic", &line], None).status.code(), Some(2));
    assert_eq!(radon(&["gen", "--dim", "2"], None).status.code(), Some(2));
}

#[test]
fn fuzz_passes_and_reports_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = radon(&["fuzz", "--dims", "1..3", "--instances", "15", "--seed", "5"], Some(dir.path()));
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("total 45/45"), "{text}");
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn injected_fault_writes_replay_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = radon(&["fuzz", "--dims", "2..3", "--instances", "5", "--seed", "5", "--inject-fault"], Some(dir.path()));
    assert_eq!(out.status.code(), Some(1));
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1);
    let replay = files[0].to_str().unwrap();
    assert!(replay.contains("radon-fail-d"));
    assert_eq!(radon(&["verify", replay], None).status.code(), Some(0));
}
