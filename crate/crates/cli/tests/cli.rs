use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qacodes")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn tmp(name: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name).to_string_lossy().into_owned()
}

#[test]
fn classes_of_c3_c3() {
    let out = stdout(&["classes", "--q", "2", "--group", "3,3"]);
    assert!(out.contains("rep=[1,1] size=2 members=[[1,1],[2,2]]"), "{out}");
    assert!(out.contains("field degrees: [1, 2, 2, 2, 2]"), "{out}");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["--json", "classes", "--q", "2", "--group", "3,3"])).unwrap();
    assert_eq!(json["classes"].as_array().unwrap().len(), 5);
}

#[test]
fn decompose_reports_idempotents() {
    let out = stdout(&["decompose", "--q", "2", "--group", "3"]);
    assert!(out.contains("e = 10 10 10"), "{out}");
    assert!(out.contains("idempotent identities verified"));
}

#[test]
fn construct_and_bound_27() {
    let code = data("qa-27-6-12.json");
    let out = stdout(&["construct", "--code", &code]);
    assert_eq!(out.lines().next(), Some("[27, 6, 12]"));
    let bound = stdout(&["bound", "--code", &code]);
    assert_eq!(bound.lines().last(), Some("12"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&["--json", "bound", "--code", &code])).unwrap();
    assert_eq!(json["value"], 12);
}

#[test]
fn construct_50() {
    let out = stdout(&["construct", "--code", &data("qa-50-12-18.json")]);
    assert_eq!(out.lines().next(), Some("[50, 12, 18]"));
}

#[test]
fn flattened_code_round_trips_through_constituents() {
    let flat = tmp("flat-27.json");
    stdout(&["construct", "--code", &data("qa-27-6-12.json"), "--out", &flat]);
    let distance = stdout(&["distance", "--code", &flat]);
    assert!(
        distance.starts_with("[27, 6, 12]\nweights 0:1 12:27 14:27 18:9\n"),
        "{distance}"
    );

    let back = tmp("back-27.json");
    std::fs::write(
        &back,
        stdout(&["--json", "constituents", "--code", &flat, "--group", "3,3"]),
    )
    .unwrap();
    let flat2 = tmp("flat-27-again.json");
    stdout(&["construct", "--code", &back, "--out", &flat2]);
    assert_eq!(
        std::fs::read_to_string(&flat).unwrap(),
        std::fs::read_to_string(&flat2).unwrap()
    );
}

#[test]
fn predicted_long_code() {
    let out = stdout(&["bound", "--predict", &data("long-binary.json")]);
    assert_eq!(out.trim(), "[6400, 3216, >= 48]");
}

#[test]
fn search_writes_report() {
    let report = tmp("search-27.json");
    let out = stdout(&[
        "search",
        "--q",
        "2",
        "--group",
        "3,3",
        "--index",
        "3",
        "--dmin",
        "12",
        "--dim",
        "6",
        "--outer-codes",
        "2",
        "--out",
        &report,
    ]);
    assert!(
        out.contains("[27, 6, 12] assignments=972 weights 12:27 14:27 18:9"),
        "{out}"
    );
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["codes"].as_array().unwrap().len(), 1);
    assert_eq!(json["codes"][0]["weight_distribution"][12], 27);
}

#[test]
fn family_csv() {
    let csv_path = tmp("family.csv");
    stdout(&[
        "family",
        "--q",
        "2",
        "--p",
        "5",
        "--outer",
        &data("lcd-outer.json"),
        "--lcd",
        "--out",
        &csv_path,
    ]);
    let text = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("i,n_i,length,dim,distance_exact_or_bound,rate,rel_distance,lcd")
    );
    assert_eq!(lines.next(), Some("0,2,50,1,25,0.020000,0.500000,true"));
    assert_eq!(lines.next(), Some("1,3,75,1,75,0.013333,1.000000,true"));
    assert_eq!(lines.next(), Some("2,4,100,2,25,0.020000,0.250000,true"));
}

#[test]
fn family_rejects_non_lcd_outer() {
    let outer = tmp("self-orthogonal.json");
    std::fs::write(
        &outer,
        r#"[{"q":2,"field_degree":1,"length":2,"generators":[["1","1"]]}]"#,
    )
    .unwrap();
    let out = run(&["family", "--q", "2", "--p", "3", "--outer", &outer, "--lcd"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "--json", "search", "--q", "2", "--group", "3,3", "--index", "2", "--dmin", "6",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let seq = [
        "--sequential",
        "--json",
        "search",
        "--q",
        "2",
        "--group",
        "3,3",
        "--index",
        "2",
        "--dmin",
        "6",
    ];
    assert_eq!(run(&args).stdout, run(&seq).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["classes", "--q", "6", "--group", "3"]).status.code(), Some(2));
    assert_eq!(run(&["classes", "--q", "3", "--group", "3"]).status.code(), Some(2));
    let out = run(&["construct", "--code", &data("qa-50-12-18.json"), "--cap", "100"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    assert_eq!(run(&["bound"]).status.code(), Some(2));
}

#[test]
fn reference_checks_pass() {
    let out = stdout(&["verify-paper", "--samples", "10"]);
    assert!(!out.contains("FAIL"), "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 13);
}
