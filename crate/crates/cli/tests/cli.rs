use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_edgeshift"))
}

fn seeded() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    let out = bin().arg("--seed-fixtures").arg(dir.path()).output().unwrap();
    assert!(out.status.success());
    dir
}

fn fixture(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(format!("{name}.json"))
}

fn run(args: &[&str], file: &Path) -> Output {
    bin().args(args).arg(file).output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn no_arguments_is_a_usage_error() {
    let out = bin().output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seeding_writes_every_fixture() {
    let dir = seeded();
    let mut names: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 11);
    assert!(names.contains(&"golden-mean.json".to_string()));
    let out = run(&["validate"], &fixture(&dir, "golden-mean"));
    assert!(json(&out).is_object());
}

#[test]
fn analyze_reducible() {
    let dir = seeded();
    let v = json(&run(&["analyze"], &fixture(&dir, "reducible")));
    assert_eq!(v["verdict"]["simple"], false);
    assert_eq!(v["lattice"]["sets"].as_array().unwrap().len(), 3);
    assert_eq!(v["maximal_ideals"].as_array().unwrap().len(), 1);
    assert!(v.get("oracle").is_none());

    let v = json(&run(&["analyze", "--oracle-depth", "4"], &fixture(&dir, "reducible")));
    assert_eq!(v["oracle"]["agree"], true);
}

#[test]
fn text_and_dot_formats() {
    let dir = seeded();
    let f = fixture(&dir, "full-2-shift");
    let out = run(&["--format", "text", "analyze"], &f);
    assert!(out.status.success());
    assert!(serde_json::from_slice::<Value>(&out.stdout).is_err());
    assert!(!out.stdout.is_empty());

    let out = run(&["--format", "dot", "lattice"], &f);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph lattice {"));

    let out = run(&["--format", "dot", "afcore", "--levels", "3"], &f);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert_eq!(dot.matches("subgraph level_").count(), 4);

    let out = run(&["--format", "dot", "prim"], &f);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_subcommands() {
    let dir = seeded();
    let prim = json(&run(&["prim"], &fixture(&dir, "full-2-shift")));
    assert_eq!(prim.as_array().unwrap().len(), 1);
    let max = json(&run(&["maximal"], &fixture(&dir, "cycle-3")));
    assert_eq!(max.as_array().unwrap().len(), 1);
    let q = json(&run(&["quotients"], &fixture(&dir, "cycle-3")));
    assert_eq!(q.as_array().unwrap().len(), 1);
    let lat = json(&run(&["lattice"], &fixture(&dir, "full-2-shift")));
    assert_eq!(lat["sets"].as_array().unwrap().len(), 2);
}

#[test]
fn certify_exit_codes() {
    let dir = seeded();
    let out = run(&["certify"], &fixture(&dir, "golden-mean"));
    let v = json(&out);
    assert!(v.is_object());
    let out = run(&["certify"], &fixture(&dir, "cycle-3"));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn oracle_check() {
    let dir = seeded();
    let v = json(&run(&["oracle-check", "--depth", "4"], &fixture(&dir, "golden-mean")));
    assert_eq!(v["agree"], true);
    let out = run(&["oracle-check", "--depth", "1"], &fixture(&dir, "golden-mean"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let missing = write(&dir, "missing.json", "{\"vertices\": [\"v\"],\n \"edges\": [{\"id\": \"a\", \"src\": \"v\"}]}");
    let out = run(&["validate"], &missing);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2") && err.contains("dst"), "{err}");

    let sink = write(
        &dir,
        "sink.json",
        r#"{"vertices":["v","w"],"edges":[{"id":"a","src":"v","dst":"v"},{"id":"b","src":"v","dst":"w"}]}"#,
    );
    assert_eq!(run(&["analyze"], &sink).status.code(), Some(3));
    assert_eq!(run(&["analyze"], &dir.path().join("absent.json")).status.code(), Some(3));
}

#[test]
fn reads_stdin() {
    let mut child = bin()
        .args(["prim", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"vertices":["v"],"edges":[{"id":"a","src":"v","dst":"v"},{"id":"b","src":"v","dst":"v"}]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(json(&out).as_array().unwrap().len(), 1);
}

#[test]
fn output_is_deterministic() {
    let dir = seeded();
    for name in ["golden-mean", "bridged-cycles"] {
        let f = fixture(&dir, name);
        for format in ["json", "text", "dot"] {
            let a = run(&["--format", format, "analyze"], &f).stdout;
            let b = run(&["--format", format, "analyze"], &f).stdout;
            assert_eq!(a, b, "{name} {format}");
        }
    }
}
