use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conclab")).args(args).env_remove("CONCLAB_TABLE").output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_conclab"))
        .args(args)
        .env_remove("CONCLAB_TABLE")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn figure_eight_bing() {
    let o = run(&["bing", "--name", "figure8"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("B(figure8) not boundary slice"));
}

#[test]
fn invariants_json() {
    let o = run(&["invariants", "--json", "--name", "trefoil"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["knot"], "trefoil");
    assert_eq!(v["arf"], 1);
    assert_eq!(v["signature"]["-1"]["value"], -2);
    assert_eq!(v["signature_integral"]["rational"], "-4/3");
}

#[test]
fn json_is_canonical_and_deterministic() {
    for args in [
        &["invariants", "--json", "--name", "figure8"][..],
        &["bing", "--json", "--name", "trefoil"],
        &["s-calc", "--json", "--scenario", "whitehead"],
        &["tb-grid", "--json", "--grid", "5; X=[1,2,3,4,5]; O=[3,4,5,1,2]"],
    ] {
        let a = stdout(&run(args));
        let b = stdout(&run(args));
        assert_eq!(a, b, "{args:?}");
        let v: Value = serde_json::from_str(a.trim()).unwrap();
        assert_eq!(v.to_string(), a.trim(), "{args:?}");
    }
}

#[test]
fn braid_source() {
    let o = run(&["invariants", "--json", "--braid", "1 1 1"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["signature"]["-1"]["value"], -2);
    assert_eq!(v["signature_integral"]["rational"], "-4/3");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["invariants", "--name", "no-such-knot"]).status.code(), Some(2));
    assert_eq!(run(&["invariants", "--braid", "1 x 2"]).status.code(), Some(3));
    assert_eq!(run(&["invariants", "--matrix", "/nonexistent/file.json"]).status.code(), Some(3));
    assert_eq!(run(&["tb-grid", "--grid", "3; X=[1,2]; O=[2,3,1]"]).status.code(), Some(3));
    let bad = std::env::temp_dir().join(format!("conclab-bad-{}.json", std::process::id()));
    std::fs::write(&bad, "{\"seifert_matrix\": [[1, 2]]}").unwrap();
    assert_eq!(run(&["invariants", "--matrix", bad.to_str().unwrap()]).status.code(), Some(3));
    std::fs::remove_file(bad).ok();
}

#[test]
fn error_json_on_stdout() {
    let o = run(&["invariants", "--json", "--name", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert!(v["error"].as_str().unwrap().contains("nope"));
}

#[test]
fn corrupted_table() {
    let path = std::env::temp_dir().join(format!("conclab-table-{}.json", std::process::id()));
    std::fs::write(&path, "[{\"name\": \"x\"").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_conclab"))
        .args(["invariants", "--name", "trefoil"])
        .env("CONCLAB_TABLE", &path)
        .output()
        .unwrap();
    std::fs::remove_file(path).ok();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn batch_keeps_order() {
    let names = ["figure8", "trefoil", "unknot", "stevedore", "trefoil", "figure8"];
    let o = run_stdin(&["invariants", "--json", "--batch", "-"], &names.map(|n| format!("{{\"name\":\"{n}\"}}")).join("\n"));
    assert!(o.status.success());
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let got: Vec<&str> = lines.iter().map(|v| v["knot"].as_str().unwrap()).collect();
    assert_eq!(got, names);
}

#[test]
fn batch_reports_worst_code() {
    let o = run_stdin(&["invariants", "--json", "--batch", "-"], "{\"name\":\"trefoil\"}\n{\"name\":\"mystery\"}\n{\"braid\":\"1 -2 1 -2\"}\n");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn s_calc_scenario_and_facts() {
    let o = run(&["s-calc", "--json", "--scenario", "whitehead"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("[-1,0]") && s.contains("[1,0]") && s.contains("[1,2]"), "{s}");
    let o = run(&["s-calc", "--scenario", "whitehead", "--fact", "Wh=2"]);
    assert!(o.status.success());
    let o = run(&["s-calc", "--json", "--scenario", "whitehead", "--fact", "Wh=2", "--fact", "B=-1"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["status"], "inconsistent");
    assert_eq!(v["link"], "B");
    assert_eq!(run(&["s-calc", "--scenario", "whitehead", "--fact", "Wh"]).status.code(), Some(3));
}

#[test]
fn tb_grid_and_mirror() {
    let g = "5; X=[1,2,3,4,5]; O=[3,4,5,1,2]";
    assert_eq!(json(&run(&["tb-grid", "--json", "--grid", g]))["tb"], 1);
    assert_eq!(json(&run(&["tb-grid", "--json", "--mirror", "--grid", g]))["tb"], -6);
}

#[test]
fn parse_braid_cmd() {
    let o = run(&["parse-braid", "--json", "--braid", "1 -2 1 -2"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["stats"]["strands"], 3);
    assert_eq!(v["stats"]["writhe"], 0);
}

#[test]
fn rep_check_trefoil() {
    let o = run(&["rep-check", "--name", "trefoil"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(run(&["rep-check", "--name", "unknot"]).status.code(), Some(3));
}

#[test]
fn verify_paper_passes() {
    let o = run(&["verify-paper", "--random", "10", "--seed", "7"]);
    assert!(o.status.success(), "{}", stdout(&o));
}
