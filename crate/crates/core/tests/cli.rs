use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn qtopo(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qtopo"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ranks(space: &Value) -> Vec<u64> {
    let top = space["dimension"].as_u64().unwrap();
    let mut out = vec![0; top as usize + 1];
    for row in space["homology"].as_array().unwrap() {
        out[row["degree"].as_i64().unwrap() as usize] = row["rank"].as_u64().unwrap();
    }
    out
}

#[test]
fn classify_pentagon_text() {
    let o = qtopo(&["classify", "--partition", "1,1,1,1,1"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Z = #_5(S^1 x S^1) [genus 5 surface]; Z^C = #_5(S^3 x S^4)"));
}

#[test]
fn homology_of_triple_product() {
    let o = qtopo(&["homology", "--partition", "2,2,2", "--space", "Z", "--format", "structured"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(ranks(&v["spaces"][0]), vec![1, 3, 3, 1]);
}

#[test]
fn pentagon_appendix_lists_ten_subsets_in_degree_one() {
    let o = qtopo(&["homology", "--partition", "1,1,1,1,1", "--space", "Z", "--format", "structured"], None);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["spaces"][0]["subsets_by_degree"].as_array().unwrap();
    let h1 = rows.iter().find(|r| r["degree"] == 1).unwrap();
    assert_eq!(h1["subsets"].as_array().unwrap().len(), 10);
}

#[test]
fn antipodal_pair_is_invalid() {
    let doc = r#"{"schema":1,"k":2,"lambdas":[[1,2],[0,1],[-1,-2],[3,-1]]}"#;
    let o = qtopo(&["check", "--config", "-", "--format", "structured"], Some(doc));
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["witness"], serde_json::json!([1, 3]));
    let o = qtopo(&["homology", "--config", "-"], Some(doc));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(qtopo(&["classify", "--partition", "1,1"], None).status.code(), Some(1));
    assert_eq!(qtopo(&["classify", "--config", "-"], Some("{\"schema\":1,\"oops\":1}")).status.code(), Some(1));
    assert_eq!(qtopo(&["check"], None).status.code(), Some(1));
    assert_eq!(qtopo(&["frobnicate"], None).status.code(), Some(1));
    assert_eq!(qtopo(&["--help"], None).status.code(), Some(0));
    assert_eq!(
        qtopo(&["homology", "--partition", "1,1,1,1,1", "--max-n", "4"], None).status.code(),
        Some(3)
    );
    // The complex open book needs 2n coordinates.
    assert_eq!(
        qtopo(&["open-book", "--partition", "1,1,1,1,1", "--max-n", "8"], None).status.code(),
        Some(3)
    );
    assert_eq!(
        qtopo(&["cross-validate", "--family", "partitions n<=5"], None).status.code(),
        Some(0)
    );
}

#[test]
fn structured_configurations_round_trip() {
    let o = qtopo(&["open-book", "--partition", "1,1,1,1,1", "--format", "structured"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let total = serde_json::to_string(&v["real"]["book"]["total"]).unwrap();
    let again = qtopo(&["homology", "--config", "-", "--space", "Z", "--format", "structured"], Some(&total));
    assert_eq!(again.status.code(), Some(0));
    let h: Value = serde_json::from_str(&stdout(&again)).unwrap();
    // Z' of the doubled pentagon: total space of a 3-dimensional open book.
    assert_eq!(h["spaces"][0]["dimension"], 3);
}

#[test]
fn output_is_independent_of_jobs() {
    let args = |jobs: &'static str| vec!["homology", "--partition", "1,2,1,2,1", "--format", "structured", "--jobs", jobs];
    let one = qtopo(&args("1"), None);
    let eight = qtopo(&args("8"), None);
    assert_eq!(one.stdout, eight.stdout);
    assert_eq!(one.stdout, qtopo(&args("1"), None).stdout);
}
