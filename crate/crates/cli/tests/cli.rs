use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

fn locprime(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_locprime")).args(args).output().expect("binary runs")
}

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const Z6: &str = r#"{"ring": {"base": "int", "modulus": "6"},
    "module": {"generators": 1, "relations": []}, "ideals": {"I": ["3"]}}"#;
const X2: &str = r#"{"ring": {"base": "poly", "char": 2},
    "module": {"generators": 1, "relations": [[[0, 0, 1]]]},
    "ideals": {"I": [[0, 0, 1]], "J": [[0, 1]]}}"#;

fn line<'a>(out: &'a str, prefix: &str) -> &'a str {
    out.lines().find(|l| l.starts_with(prefix)).unwrap_or_else(|| panic!("no line `{prefix}` in\n{out}"))
}

#[test]
fn analyze_z6() {
    let f = file(Z6);
    let o = locprime(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(line(&out, "IReduced(I):").contains("holds"));
    assert!(line(&out, "IPrime(I):").starts_with("IPrime(I): fails (witness 2)"));
    assert!(line(&out, "ICoreduced(I):").contains("holds"));
    assert!(line(&out, "ICoprime(I):").contains("fails"));
    assert!(out.contains("oracle: all verdicts agree"));
}

#[test]
fn analyze_x_squared_structured() {
    let f = file(X2);
    let o = locprime(&["analyze", f.path().to_str().unwrap(), "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let find = |pred: &str, ideals: &[&str]| {
        v["local"]
            .as_array()
            .unwrap()
            .iter()
            .find(|r| r["predicate"] == pred && r["ideals"] == serde_json::json!(ideals))
            .unwrap_or_else(|| panic!("{pred} {ideals:?}"))["holds"]
            .as_bool()
            .unwrap()
    };
    assert!(find("IPrime", &["I"]));
    assert!(find("IJPrime", &["I", "J"]));
    assert!(!find("IPrime", &["J"]));
    assert_eq!(v["oracle_disagreements"], 0);
}

#[test]
fn malformed_row_exits_2_naming_the_row() {
    let f = file(r#"{"ring": {"base": "int"}, "module": {"generators": 2, "relations": [["1", "2"], ["3"]]}}"#);
    let o = locprime(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("module.relations[1]"), "{}", stderr(&o));
}

#[test]
fn bad_json_and_missing_file_exit_2() {
    let f = file("{not json");
    assert_eq!(locprime(&["analyze", f.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(locprime(&["analyze", "/no/such/file.json"]).status.code(), Some(2));
    assert_eq!(locprime(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn emit_input_round_trips() {
    let f = file(X2);
    let once = stdout(&locprime(&["analyze", f.path().to_str().unwrap(), "--emit-input"]));
    let g = file(&once);
    let twice = stdout(&locprime(&["analyze", g.path().to_str().unwrap(), "--emit-input"]));
    assert_eq!(once, twice);
    let a = locprime::description::ModuleDescription::parse(X2).unwrap();
    let b = locprime::description::ModuleDescription::parse(&once).unwrap();
    assert_eq!(a, b);
}

#[test]
fn compute_examples() {
    let z12 =
        file(r#"{"ring": {"base": "int", "modulus": "12"}, "module": {"generators": 1}, "ideals": {"I": ["2"]}}"#);
    let o = locprime(&["compute", z12.path().to_str().unwrap(), "lambda"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("invariant factors: [4]"), "{}", stdout(&o));

    let z = file(r#"{"ring": {"base": "int"}, "module": {"generators": 1}, "ideals": {"I": ["2"]}}"#);
    let o = locprime(&["compute", z.path().to_str().unwrap(), "lambda"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("NotRepresentable: positive free rank"), "{}", stdout(&o));

    let z6 = file(Z6);
    let o = locprime(&["compute", z6.path().to_str().unwrap(), "gamma", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["generators"], serde_json::json!(["(2)"]));
}

#[test]
fn compute_hom_tensor_localize() {
    let z12 = file(r#"{"ring": {"base": "int"}, "module": {"generators": 1, "relations": [["12"]]}}"#);
    let z8 = file(r#"{"ring": {"base": "int"}, "module": {"generators": 1, "relations": [["8"]]}}"#);
    let (a, b) = (z12.path().to_str().unwrap(), z8.path().to_str().unwrap());
    assert!(stdout(&locprime(&["compute", a, "hom", "--other", b])).contains("[4]"));
    assert!(stdout(&locprime(&["compute", a, "tensor", "--other", b])).contains("[4]"));
    assert!(stdout(&locprime(&["compute", a, "localize", "--prime", "3"])).contains("R/(3)^1"));
    assert_eq!(locprime(&["compute", a, "localize", "--prime", "4"]).status.code(), Some(2));
    assert_eq!(locprime(&["compute", a, "localize"]).status.code(), Some(2));
    assert_eq!(locprime(&["compute", a, "gamma", "--ideal", "K"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(locprime(&["verify", "no_such_law"]).status.code(), Some(2));
    assert_eq!(locprime(&["verify", "chart_prime", "--profile", "huge"]).status.code(), Some(2));
    assert_eq!(locprime(&["verify", "chart_prime", "--contexts", "Q"]).status.code(), Some(2));

    let o = locprime(&["verify", "pinned_examples"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("| {0, 2, 4} | {0, 2, 4}"), "{out}");
    assert!(!out.contains("MISMATCH"));

    let o = locprime(&["verify", "mgm_equivalence", "--seed", "1", "--count", "500"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn structured_reports_are_stable() {
    let run = || locprime(&["verify", "closure_sub", "--seed", "5", "--count", "30", "--format", "structured"]);
    let (a, b) = (run(), run());
    assert_eq!(a.status.code(), Some(0));
    let mut va: Value = serde_json::from_str(&stdout(&a)).unwrap();
    let mut vb: Value = serde_json::from_str(&stdout(&b)).unwrap();
    for key in ["law", "cases_run", "violations", "seed"] {
        assert!(va.get(key).is_some(), "missing {key}");
    }
    va["runtime_ms"] = Value::Null;
    vb["runtime_ms"] = Value::Null;
    assert_eq!(va, vb);
    assert_eq!(va["seed"], 5);
}

#[test]
fn a_case_descriptor_reruns() {
    let case = file(
        r#"{"ring": {"base": "int"}, "module": {"generators": 1, "relations": [["2"]]},
            "ideals": {"I": ["2"], "J": ["2"]}, "other": {"generators": 1, "relations": [["2"]]}}"#,
    );
    let o = locprime(&["verify", "gm_adjunction", "--case", case.path().to_str().unwrap(), "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cases_run"], 1);
}

#[test]
fn cases_missing_what_the_law_needs_exit_2() {
    let case =
        file(r#"{"ring": {"base": "int"}, "module": {"generators": 1, "relations": [["2"]]}, "ideals": {"I": ["2"]}}"#);
    let path = case.path().to_str().unwrap();
    assert_eq!(locprime(&["verify", "gm_adjunction", "--case", path]).status.code(), Some(2));
    assert_eq!(locprime(&["verify", "hom_transfer_inj", "--case", path]).status.code(), Some(2));
    assert_eq!(locprime(&["verify", "closure_sub", "--case", path]).status.code(), Some(0));
}
