use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn kmc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmc"))
        .args(args)
        .env_remove("KMC_MAX_CROSSINGS")
        .output()
        .expect("kmc runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn certify_trefoil_as_json() {
    let o = kmc(&["--json", "certify", fixture("trefoil.pd").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["verdict"], "MINIMAL");
    assert_eq!(v["n"], 3);
    assert_eq!(v["fields"].as_array().unwrap().len(), 2);
}

#[test]
fn certify_table_for_13n3663() {
    let table = fixture("13n3663_khq.json");
    let o = kmc(&["certify-table", table.to_str().unwrap(), "--n", "13"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: MINIMAL"));
    let o = kmc(&["certify-table", table.to_str().unwrap(), "--n", "12"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn certificate_json_feeds_the_table_path() {
    let o = kmc(&["--json", "certify", "--fields", "q", fixture("figure_eight.pd").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    std::fs::write(&cert, &o.stdout).unwrap();
    let o = kmc(&["--json", "certify-table", cert.to_str().unwrap(), "--n", "4", "--chi", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["verdict"], "MINIMAL");
}

#[test]
fn missing_file_is_an_error() {
    let o = kmc(&["certify", "/definitely/not/here.pd"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("here.pd"));
}

#[test]
fn malformed_input_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.pd");
    std::fs::write(&bad, "X 1 2 3\n").unwrap();
    let o = kmc(&["atom", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(kmc(&["certify", "--bogus", "x.pd"]).status.code(), Some(2));
    assert_eq!(kmc(&["kh", "--field", "z3", "x.pd"]).status.code(), Some(2));
    assert_eq!(kmc(&["--max-crossings", "0", "atom", "x.pd"]).status.code(), Some(2));
}

#[test]
fn crossing_cap_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_kmc"))
        .args(["kh", fixture("trefoil.pd").to_str().unwrap()])
        .env("KMC_MAX_CROSSINGS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn batch_over_a_directory() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["trefoil.pd", "trefoil_kinked.pd"] {
        std::fs::copy(fixture(name), dir.path().join(name)).unwrap();
    }
    std::fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
    let o = kmc(&["batch", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("trefoil.pd: MINIMAL"), "{text}");
    assert!(text.contains("trefoil_kinked.pd: INCONCLUSIVE"), "{text}");
    assert!(text.contains("1 minimal, 1 inconclusive, 0 failed"), "{text}");

    std::fs::write(dir.path().join("broken.pd"), "X 1 1\n").unwrap();
    let o = kmc(&["--json", "batch", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!((v["minimal"].as_u64(), v["failed"].as_u64()), (Some(1), Some(1)));
}

#[test]
fn empty_batch_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let o = kmc(&["batch", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 minimal, 0 inconclusive, 0 failed"));
}

#[test]
fn reports_for_the_virtual_trefoil() {
    let f = fixture("virtual_trefoil.gauss");
    let f = f.to_str().unwrap();
    let atom = json(&kmc(&["--json", "atom", f]));
    assert_eq!((atom["chi"].as_i64(), atom["orientable"].as_bool()), (Some(1), Some(false)));
    assert_eq!(kmc(&["kh", "--field", "q", f]).status.code(), Some(1));
    let k1 = json(&kmc(&["--json", "k1", f]));
    assert_eq!(k1["checks"]["constant_parity"], Value::Null);
    assert_eq!(kmc(&["bracket", f]).status.code(), Some(0));
}

#[test]
fn bracket_json_shape() {
    let v = json(&kmc(&["--json", "bracket", fixture("trefoil.pd").to_str().unwrap()]));
    assert_eq!(v["terms"], serde_json::json!({"-5": -1, "3": -1, "7": 1}));
    assert_eq!((v["span"].as_i64(), v["bound"].as_i64()), (Some(12), Some(12)));
    assert_eq!(v["one_complete"], true);
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let dir = fixture("");
    let one = kmc(&["--json", "--jobs", "1", "batch", dir.to_str().unwrap()]);
    let many = kmc(&["--json", "--jobs", "4", "batch", dir.to_str().unwrap()]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
}
