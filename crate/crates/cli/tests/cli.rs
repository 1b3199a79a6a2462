use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::TempDir;

const D4: &str = r#"{"palette":"bi","nodes":4,"edges":[
 {"kind":"straight","i":1,"j":2,"colour":"R"},{"kind":"straight","i":1,"j":2,"colour":"G"},
 {"kind":"straight","i":1,"j":3,"colour":"R"},{"kind":"straight","i":1,"j":3,"colour":"G"},
 {"kind":"straight","i":1,"j":4,"colour":"R"},{"kind":"straight","i":1,"j":4,"colour":"G"},
 {"kind":"straight","i":2,"j":3,"colour":"R"},{"kind":"straight","i":2,"j":3,"colour":"G"},
 {"kind":"straight","i":2,"j":4,"colour":"R"},{"kind":"straight","i":2,"j":4,"colour":"G"},
 {"kind":"straight","i":3,"j":4,"colour":"R"},{"kind":"straight","i":3,"j":4,"colour":"G"}]}"#;
const A1: &str = r#"{"palette":"bi","nodes":4,"edges":[{"kind":"straight","i":1,"j":2,"colour":"R"}]}"#;
const EMPTY3: &str = r#"{"palette":"bi","nodes":3,"edges":[]}"#;
const BIPARTITE: &str = r#"{"palette":"bi","nodes":2,"edges":[{"kind":"straight","i":1,"j":2,"colour":"G"}]}"#;
const NOT_CRYSTAL: &str = r#"{"palette":"bi","nodes":3,"edges":[
 {"kind":"straight","i":1,"j":2,"colour":"R"},{"kind":"straight","i":2,"j":3,"colour":"R"}]}"#;

struct Fixture {
    dir: TempDir,
}

impl Fixture {
    fn new() -> Self {
        Fixture {
            dir: TempDir::new().unwrap(),
        }
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crystallograph"))
        .args(args)
        .output()
        .unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_crystallograph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

fn p(path: &std::path::Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn quotient_of_d4() {
    let f = Fixture::new();
    let (g, gp) = (f.file("d4.json", D4), f.file("a1.json", A1));
    let o = run(&["quotient", p(&g), p(&gp), "--verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let q = json(&o);
    assert_eq!(q["nodes"], 3);
    assert_eq!(q["edges"].as_array().unwrap().len(), 7);

    let r = json(&run(&["restrict", p(&g), p(&gp)]));
    assert_eq!(r["dimension"], 3);
    assert_eq!(r["covectors"].as_array().unwrap().len(), 14);

    let a = json(&run(&["arrangement", p(&g), p(&gp)]));
    assert_eq!(a["hyperplanes"].as_array().unwrap().len(), 7);
    assert_eq!(a["report"]["components"][0]["type"], "ExoticBD");
}

#[test]
fn classify_empty_graph() {
    let f = Fixture::new();
    let g = f.file("e.json", EMPTY3);
    let v = json(&run(&["classify", p(&g)]));
    let parts = v["components"].as_array().unwrap();
    assert_eq!(parts.len(), 3);
    for c in parts {
        assert_eq!(c["type"], "A");
        assert_eq!(c["nodes"].as_array().unwrap().len(), 1);
    }
    let text = stdout(&run(&["classify", p(&g), "--format", "text"]));
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn enumerate_counts() {
    assert_eq!(stdout(&run(&["enumerate", "--nodes", "1", "--count-only"])), "4\n");
    assert_eq!(stdout(&run(&["enumerate", "--nodes", "3", "--count-only"])), "144\n");
    assert_eq!(stdout(&run(&["enumerate", "--nodes", "2", "--quasi", "--count-only"])), "26\n");
    assert_eq!(stdout(&run(&["enumerate", "--nodes", "4", "--up-to-weyl", "--count-only"])), "125\n");
    let listed = stdout(&run(&["enumerate", "--nodes", "2"]));
    assert_eq!(listed.lines().count(), 22);
    for line in listed.lines() {
        serde_json::from_str::<Value>(line).unwrap();
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--nodes", "2", "--quasi", "--up-to-weyl"]).status.code(), Some(2));

    let f = Fixture::new();
    let bad = f.file("bad.json", NOT_CRYSTAL);
    assert_eq!(run(&["classify", p(&bad)]).status.code(), Some(1));
    assert_eq!(run(&["kernel", p(&bad)]).status.code(), Some(1));
    let garbage = f.file("g.json", "{\"palette\":\"bi\"");
    assert_eq!(run(&["check", p(&garbage)]).status.code(), Some(1));
    assert_eq!(run(&["check", "/nonexistent/graph.json"]).status.code(), Some(1));
    // not nested
    let (a, b) = (f.file("a.json", A1), f.file("d4.json", D4));
    assert_eq!(run(&["quotient", p(&a), p(&b)]).status.code(), Some(1));
    let o = run(&["enumerate", "--nodes", "9"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn check_predicates() {
    let f = Fixture::new();
    let v = json(&run(&["check", p(&f.file("n.json", NOT_CRYSTAL))]));
    assert_eq!(v["crystallograph"], false);
    assert_eq!(v["quasi_crystallograph"], false);
    let v = json(&run_stdin(&["check", "-"], D4));
    assert_eq!(v["crystallograph"], true);
}

#[test]
fn roots_round_trip() {
    let f = Fixture::new();
    let g = f.file("d4.json", D4);
    let text = run(&["to-roots", p(&g)]);
    assert!(text.status.success());
    let roots = f.file("d4.roots", &stdout(&text));
    let back = run(&["from-roots", "--roots", p(&roots)]);
    let canonical = run(&["projectify", p(&g)]);
    assert!(canonical.status.success());
    let original: Value = serde_json::from_str(D4).unwrap();
    let mut expected = original["edges"].as_array().unwrap().clone();
    let mut got = json(&back)["edges"].as_array().unwrap().clone();
    let key = |v: &Value| v.to_string();
    expected.sort_by_key(key);
    got.sort_by_key(key);
    assert_eq!(got, expected);
    let j = json(&run(&["to-roots", p(&g), "--format", "json"]));
    assert_eq!(j["roots"].as_array().unwrap().len(), 24);
    let empty = f.file("none.roots", "");
    let o = run(&["from-roots", "--roots", p(&empty), "--nodes", "2"]);
    assert_eq!(json(&o)["nodes"], 2);
}

#[test]
fn output_is_deterministic() {
    let f = Fixture::new();
    let (g, gp) = (f.file("d4.json", D4), f.file("a1.json", A1));
    for args in [
        vec!["quotient", p(&g), p(&gp)],
        vec!["kernel", p(&gp)],
        vec!["dot", p(&g)],
        vec!["classify", p(&g)],
        vec!["arrangement", p(&g)],
    ] {
        let a = run(&args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, run(&args).stdout, "{args:?}");
    }
    let first = stdout(&run(&["quotient", p(&g), p(&gp)]));
    let q = f.file("q.json", &first);
    let again = run(&["projectify", p(&q)]);
    let tri = f.file("qp.json", &stdout(&again));
    assert_eq!(json(&again)["palette"], "tri");
    // an exotic quotient: the blue loop does not propagate
    assert_eq!(json(&run(&["check", p(&tri)]))["projective_crystallograph"], false);
    let t = json(&run(&["classify", p(&tri)]));
    assert_eq!(t["components"][0]["type"], "ExoticBD");
}

#[test]
fn verify_small() {
    let o = run(&["verify", "--nodes", "3", "--samples", "200"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["failure_count"], 0);
    assert_eq!(v["summary"]["crystallographs"], 144);
    assert!(v["summary"].get("runtime_seconds").is_none());
    assert_eq!(o.stdout, run(&["verify", "--nodes", "3", "--samples", "200"]).stdout);
}

#[test]
fn normalize_reports_word() {
    let f = Fixture::new();
    let g = f.file("b.json", BIPARTITE);
    let empty = f.file("e.json", r#"{"palette":"bi","nodes":2,"edges":[]}"#);
    let o = run(&["quotient", p(&g), p(&empty), "--normalize"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("normalized by"));
    let q = json(&o);
    assert_eq!(q["edges"][0]["colour"], "R");
}

#[test]
fn dot_output() {
    let f = Fixture::new();
    let dot = stdout(&run(&["dot", p(&f.file("a.json", A1))]));
    assert!(dot.starts_with("graph G {"));
    assert!(dot.contains("1 -- 2 [color=red];"));
    let same = stdout(&run(&["classify", p(&f.file("a2.json", A1)), "--format", "dot"]));
    assert!(!same.is_empty());
}
