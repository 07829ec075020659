use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charblock"))
        .args(args)
        .env_remove("CHARBLOCK_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    assert!(o.status.success(), "{}", stderr(o));
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn chartab_s3_text() {
    let o = run(&["chartab", &data("s3.grp")]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    let rows: Vec<Vec<&str>> = out
        .lines()
        .filter(|l| l.starts_with("X."))
        .map(|l| l.split_whitespace().skip(1).collect())
        .collect();
    assert_eq!(rows, vec![vec!["1", "1", "1"], vec!["1", "-1", "1"], vec!["2", ".", "-1"]]);
    assert!(out.contains("|C_G(x_K)|   6   2   3"), "{out}");
}

#[test]
fn chartab_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for g in ["s4", "sl23", "a5"] {
        let o = run(&["--format", "json", "chartab", &data(&format!("{g}.grp"))]);
        assert!(o.status.success(), "{}", stderr(&o));
        let path = dir.path().join(format!("{g}.tbl"));
        std::fs::write(&path, &o.stdout).unwrap();
        let v = run(&["verify", path.to_str().unwrap()]);
        assert!(v.status.success(), "{g}: {}", stderr(&v));
        assert!(stdout(&v).contains(": ok"));
    }
}

#[test]
fn blocks_s3_mod_2() {
    let v = json(&run(&["--format", "json", "blocks", &data("s3.tbl"), "-p", "2"]));
    let blocks = v["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 2);
    let defects: Vec<u64> = blocks.iter().map(|b| b["defect"].as_u64().unwrap()).collect();
    assert_eq!(defects, vec![1, 0]);
    assert_eq!(blocks[0]["lambda"], serde_json::json!(["1", "1", "0"]));
    assert_eq!(blocks[1]["lambda"], serde_json::json!(["1", "0", "1"]));
}

#[test]
fn blocks_from_group_file() {
    let v = json(&run(&["--format", "json", "blocks", &data("a5.grp"), "-p", "3"]));
    let irr: Vec<serde_json::Value> = v["blocks"].as_array().unwrap().iter().map(|b| b["irr"].clone()).collect();
    assert_eq!(irr, vec![serde_json::json!([1, 4, 5]), serde_json::json!([2]), serde_json::json!([3])]);
}

#[test]
fn verify_bad_table_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let mut t: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(data("s3.tbl")).unwrap()).unwrap();
    t["irr"][2] = serde_json::json!(["2", "0", "1"]);
    let path = dir.path().join("bad.tbl");
    std::fs::write(&path, t.to_string()).unwrap();
    let o = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("orthogonality"), "{}", stderr(&o));
}

#[test]
fn truncated_file_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(data("a5.tbl")).unwrap();
    let path = dir.path().join("cut.tbl");
    std::fs::write(&path, &text[..text.len() / 2]).unwrap();
    let o = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("parse error at line"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "/nonexistent/x.tbl"]).status.code(), Some(1));
    assert_eq!(run(&["blocks", &data("s3.tbl")]).status.code(), Some(1));
    assert_eq!(run(&["blocks", &data("s3.tbl"), "-p", "4"]).status.code(), Some(1));
    assert!(run(&["--help"]).status.success());
}

#[test]
fn decompose_a5_mod_2() {
    let v = json(&run(&["--format", "json", "decompose", &data("a5.tbl"), &data("a5.p2.brt")]));
    let b = &v["blocks"][0];
    assert_eq!(b["irr"], serde_json::json!([1, 2, 3, 5]));
    assert_eq!(b["C"], serde_json::json!([[4, 2, 2], [2, 2, 1], [2, 1, 2]]));
    assert_eq!(v["blocks"][1]["D"], serde_json::json!([[1]]));
}

#[test]
fn decompose_rejects_wrong_prime() {
    let o = run(&["decompose", &data("a5.tbl"), &data("s3.p2.brt")]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
}

#[test]
fn induce_from_a3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("theta.json");
    std::fs::write(&path, r#"{"values": ["1", "E(3)", "E(3)^2"]}"#).unwrap();
    let v = json(&run(&[
        "--format",
        "json",
        "induce",
        &data("s3.grp"),
        "(1,2,3)",
        path.to_str().unwrap(),
    ]));
    assert_eq!(v["values"], serde_json::json!(["2", "0", "-1"]));
    assert_eq!(v["constituents"], serde_json::json!(["0", "0", "1"]));
}

#[test]
fn induced_blocks() {
    let v = json(&run(&["--format", "json", "induced-block", &data("s3.grp"), "(1,2,3)", "-p", "2"]));
    assert!(v["blocks"][0]["induced"].is_null());
    let v = json(&run(&[
        "--format",
        "json",
        "induced-block",
        &data("a5.grp"),
        "(1,2)(3,4);(1,2,3)",
        "-p",
        "2",
    ]));
    assert_eq!(v["blocks"][0]["induced"], 1);
    assert_eq!(v["blocks"][0]["lambda"], serde_json::json!(["1", "1", "0", "0", "0"]));
}

#[test]
fn robinson_and_frobenius() {
    let v = json(&run(&["--format", "json", "robinson", &data("s3.grp"), "-p", "3", "-D", "(1,2,3)"]));
    assert_eq!(v["blocks"], 1);
    let o = run(&["robinson", &data("s3.grp"), "-p", "2", "-D", "(1,2)"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&run(&["--format", "json", "frobenius-kernel", &data("a4.grp"), "(1,2,3)"]));
    assert_eq!(v["order"], 4);
}

#[test]
fn brauer_hom_and_oracle() {
    let v = json(&run(&["--format", "json", "brauer-hom", &data("s3.grp"), "(1,2,3)"]));
    assert_eq!(v["prime"], 3);
    assert_eq!(v["normalizer_order"], 6);
    let v = json(&run(&["--format", "json", "oracle", &data("a4.grp"), "-p", "2"]));
    assert_eq!(v["blocks"], 1);
    assert_eq!(v["radical_dim"], 3);
}

#[test]
fn order_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_charblock"))
        .args(["classes", &data("a5.grp")])
        .env("CHARBLOCK_MAX_ORDER", "50")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cap of 50"), "{}", stderr(&o));
}

#[test]
fn report_s4() {
    let v = json(&run(&["--format", "json", "report", &data("s4.tbl")]));
    assert_eq!(v["linear_characters"], 2);
    assert_eq!(v["solvable"], true);
    assert_eq!(v["normal_subgroups"].as_array().unwrap().len(), 4);
}
