mod common;

use std::process::{Command, Output};

use common::fixture_path;

fn wdmst(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wdmst")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn precompute(graph: &str, dir: &tempfile::TempDir) -> (String, Output) {
    let plan = dir.path().join("plan.json").to_string_lossy().into_owned();
    let out = wdmst(&["precompute", fixture_path(graph).to_str().unwrap(), "-o", &plan]);
    (plan, out)
}

#[test]
fn precompute_prints_summary() {
    let dir = tempfile::tempdir().unwrap();
    let (_, out) = precompute("triangle.wdg", &dir);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "edge 2: d_s=3 s_v=1 cv=2\n");

    let (_, out) = precompute("threshold8.wdg", &dir);
    assert_eq!(stdout(&out), "edge 10: d_s=40 s_v=32 cv=8\n");

    let (_, out) = precompute("bridge.wdg", &dir);
    assert_eq!(stdout(&out), "edge 3: d_s=inf s_v=7 cv=inf\n");
}

#[test]
fn precompute_missing_graph() {
    let out = wdmst(&["precompute", "/nonexistent.wdg", "-o", "/tmp/never.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot open"));
}

#[test]
fn query_threshold_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let (plan, _) = precompute("threshold8.wdg", &dir);
    let graph = fixture_path("threshold8.wdg");
    let graph = graph.to_str().unwrap();
    for (x, want) in [("7", "variable 39"), ("9", "stable 40"), ("8", "stable 40")] {
        let out = wdmst(&["query", &plan, graph, "--edge", "10", "--x", x]);
        assert!(out.status.success());
        assert_eq!(stdout(&out).lines().next(), Some(want));
    }
    let out = wdmst(&["query", &plan, graph, "--edge", "10", "--x", "-2"]);
    assert_eq!(stdout(&out).lines().next(), Some("variable 30"));
    let out = wdmst(&["query", &plan, graph, "--edge", "3", "--x", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn query_rejects_other_graph() {
    let dir = tempfile::tempdir().unwrap();
    let (plan, _) = precompute("triangle.wdg", &dir);
    let edited = dir.path().join("edited.wdg");
    let text = std::fs::read_to_string(fixture_path("triangle.wdg")).unwrap();
    std::fs::write(&edited, text.replace("e 1 2 2", "e 1 2 3")).unwrap();
    let out = wdmst(&["query", &plan, edited.to_str().unwrap(), "--edge", "2", "--x", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("different graph"));
}

#[test]
fn simulate_counts_switches() {
    let dir = tempfile::tempdir().unwrap();
    let (plan, _) = precompute("threshold8.wdg", &dir);
    let out = wdmst(&[
        "simulate",
        &plan,
        fixture_path("threshold8.wdg").to_str().unwrap(),
        fixture_path("threshold8.events").to_str().unwrap(),
        "--compare-naive",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("events: 2\n"), "{text}");
    assert!(text.contains("switches: 1\n"), "{text}");
    assert!(text.contains("naive_ns:"), "{text}");
    assert!(text.contains("speedup:"), "{text}");

    let empty = dir.path().join("empty.events");
    std::fs::write(&empty, "").unwrap();
    let out = wdmst(&["simulate", &plan, fixture_path("threshold8.wdg").to_str().unwrap(), empty.to_str().unwrap()]);
    assert!(stdout(&out).starts_with("events: 0\nswitches: 0\n"));

    let bad = dir.path().join("bad.events");
    std::fs::write(&bad, "1 10 3\n2 0 4\n").unwrap();
    let out = wdmst(&["simulate", &plan, fixture_path("threshold8.wdg").to_str().unwrap(), bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn generate_is_deterministic_and_parses() {
    let args = ["generate", "--n", "100", "--extra-edges", "200", "--unstable", "3", "--seed", "42"];
    let a = wdmst(&args);
    let b = wdmst(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().filter(|l| l.starts_with("u ")).count(), 3);
    let g = wdmst::io::parse_graph(&text).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (100, 299));
}

#[test]
fn verify_fixtures() {
    for (graph, line) in [
        ("triangle.wdg", "edge 2 cv: engine=2 oracle=2 OK"),
        ("threshold8.wdg", "edge 10 cv: engine=8 oracle=8 OK"),
        ("ties.wdg", "edge 6 cv: engine=2 oracle=2 OK"),
        ("bridge.wdg", "edge 3 cv: engine=inf oracle=inf OK"),
    ] {
        let out = wdmst(&["verify", fixture_path(graph).to_str().unwrap()]);
        let text = stdout(&out);
        assert_eq!(out.status.code(), Some(0), "{text}");
        assert!(text.contains(line), "{text}");
        assert!(!text.contains("FAIL"));
    }
    let out = wdmst(&["verify", fixture_path("three_unstable.wdg").to_str().unwrap(), "--halfwidth", "1", "--step", "0.25"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn verify_rejects_large_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.wdg");
    let gen = wdmst(&["generate", "--n", "30", "--extra-edges", "10", "--unstable", "1", "--seed", "1"]);
    std::fs::write(&path, gen.stdout).unwrap();
    let out = wdmst(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("at most 24 edges"));
}
