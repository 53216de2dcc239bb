use std::path::PathBuf;
use std::process::{Command, Output};

fn siegel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_siegel")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("siegel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn dims_d6_json() {
    let o = siegel(&["dims", "--domain", "D6", "--v", "1,1,0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dims"]["total"], 10);
    assert_eq!(v["dims"]["g_mhalf"], 2);
    assert!(v.get("bases").is_none());
}

#[test]
fn emit_bases_is_opt_in() {
    let o = siegel(&["dims", "--domain", "D6", "--v", "1,1,0", "--format", "json", "--emit-bases"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["bases"]["g1"]["basis"].as_array().unwrap().len(), 1);
    assert_eq!(v["fields"].as_array().unwrap().len(), 10);
}

#[test]
fn classify_four() {
    let o = siegel(&["classify", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("B2xB1xB1 14"));
}

#[test]
fn verify_paper_exit_codes() {
    assert_eq!(siegel(&["verify-paper"]).status.code(), Some(0));
    let o = siegel(&["verify-paper", "--d6-total", "11"]);
    assert_eq!(o.status.code(), Some(1));
    let fails: Vec<String> = stdout(&o).lines().filter(|l| l.starts_with("FAIL")).map(String::from).collect();
    assert_eq!(fails.len(), 1);
    assert!(fails[0].contains("D6(1,1,0)/total"));
}

#[test]
fn input_round_trip() {
    let o = siegel(&["dims", "--domain", "D4", "--alpha", "1", "--beta", "0", "--gamma", "0", "--delta", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let path = temp_file("d4.json", &v["spec"].to_string());
    let again = siegel(&["dims", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(again.status.code(), Some(0), "{}", stderr(&again));
    let w: serde_json::Value = serde_json::from_str(&stdout(&again)).unwrap();
    assert_eq!(w["dims"], v["dims"]);
    assert_eq!(w["dims"]["total"], 23);
}

#[test]
fn bad_inputs_exit_two() {
    let not_hermitian = temp_file("nh.json", r#"{"n": 4, "k": 2, "cone": "omega1", "H": [[["1","2"],["0","1"]], [["1","0"],["0","1"]]]}"#);
    let o = siegel(&["dims", "--input", not_hermitian.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("component 0 entry (1,0)"), "{}", stderr(&o));

    let k_big = temp_file("kbig.json", r#"{"n": 2, "k": 3, "cone": "omega2", "H": []}"#);
    assert_eq!(siegel(&["dims", "--input", k_big.to_str().unwrap()]).status.code(), Some(2));

    let not_omega = temp_file("neg.json", r#"{"n": 3, "k": 2, "cone": "omega1", "H": [[["1"]], [["-1"]]]}"#);
    let o = siegel(&["dims", "--input", not_omega.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("w = ("));

    let garbage = temp_file("bad.json", "{ not json");
    assert_eq!(siegel(&["dims", "--input", garbage.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(siegel(&["dims", "--input", "/nonexistent/spec.json"]).status.code(), Some(2));
}

#[test]
fn cone_info_and_bounds() {
    let o = siegel(&["cone-info", "--cone", "omega6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["dim_g"].as_u64(), v["isotropy_bound"].as_str()), (Some(7), Some("7")));
    let o = siegel(&["bounds", "--domain", "D6", "--v", "1,1,0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["total"], 10);
    assert_eq!(v["closed_form"], "15");
}
