use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use segconn::cli::{SearchReport, Stats};
use segconn::construct::Certificate;
use segconn::geometry::{parse_text, PointSet};
use segconn::graph::GraphExport;

fn segconn(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_segconn")).args(args).current_dir(dir).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let o = segconn(dir, args);
    assert!(o.status.success(), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("good.txt"), "# a triangle\n0 0\n\n4 0\n1/2 3\n").unwrap();
    fs::write(d.join("line.txt"), "0 0\n5 1\n1 1\n2 2\n").unwrap();
    fs::write(d.join("broken.txt"), "0 0\n1 2 3\n").unwrap();
    fs::write(d.join("good.json"), r#"{"points": [[0, 0], [4, 0], ["1/2", 3]]}"#).unwrap();

    let o = segconn(d, &["validate", "good.txt"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ok"));
    assert_eq!(segconn(d, &["validate", "good.json"]).status.code(), Some(0));

    let o = segconn(d, &["validate", "line.txt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[0, 2, 3]"), "{}", stdout(&o));

    let o = segconn(d, &["validate", "broken.txt"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let o = segconn(d, &["validate", "line.txt", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["valid"], false);
    assert_eq!(v["indices"], serde_json::json!([0, 2, 3]));
}

#[test]
fn stats_examples() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["gen", "convex", "8", "42", "--out", "c8.txt"]);
    let st: Stats = serde_json::from_str(&ok(d, &["stats", "c8.txt", "--exact", "--json"])).unwrap();
    assert_eq!((st.n, st.vertices, st.min_degree, st.max_degree, st.kappa_n), (8, 28, 6, 15, 6));
    assert_eq!(st.exact_kappa, Some(6));
    // the JSON form round-trips
    assert_eq!(serde_json::from_str::<Stats>(&serde_json::to_string(&st).unwrap()).unwrap(), st);

    for seed in 0..5 {
        ok(d, &["gen", "random", "5", &seed.to_string(), "--out", "r5.txt"]);
        let st: Stats = serde_json::from_str(&ok(d, &["stats", "r5.txt", "--json"])).unwrap();
        assert_eq!(st.max_degree, 3);
        assert_eq!(st.exact_kappa, None);
    }

    ok(d, &["gen", "random", "3", "1", "--out", "r3.txt"]);
    let text = ok(d, &["stats", "r3.txt", "--exact"]);
    assert!(text.contains("kappa(D(P))  0"), "{text}");
    assert!(text.contains("disconnected"), "{text}");
}

#[test]
fn graph_export_shape() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["gen", "double-chain", "6", "1", "--out", "dc.txt"]);
    ok(d, &["graph", "dc.txt", "--out", "g.json"]);
    let g: GraphExport = serde_json::from_str(&fs::read_to_string(d.join("g.json")).unwrap()).unwrap();
    assert_eq!(g.n, 6);
    assert_eq!(g.vertices.len(), 15);
    let mut sorted = g.edges.clone();
    sorted.sort();
    assert_eq!(sorted, g.edges);
    assert!(g.edges.iter().all(|e| e[0] < e[1] && e[1] < 15));
    let raw: serde_json::Value = serde_json::from_str(&ok(d, &["graph", "dc.txt"])).unwrap();
    assert_eq!(raw["vertices"][0], serde_json::json!([0, 1]));
}

#[test]
fn witness_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["gen", "convex", "6", "0", "--out", "c6.txt"]);
    // the halving diagonals 0-3 and 1-4 of C_6 are at distance 3
    let o = segconn(d, &["witness", "c6.txt", "0,3", "1,4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("distance 3"), "{}", stderr(&o));
    let cert: Certificate = serde_json::from_str(&ok(d, &["witness", "c6.txt", "0,2", "1,3"])).unwrap();
    assert!(cert.paths.len() as u128 >= cert.kappa_n);
    assert_eq!(cert.kappa_n, 2);
    assert_eq!(cert.ordered_witness.len(), cert.paths.len());

    let o = segconn(d, &["witness", "c6.txt", "0,1", "2,3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("distance 1"), "{}", stderr(&o));

    let o = segconn(d, &["witness", "c6.txt", "0,1", "2,9"]);
    assert_eq!(o.status.code(), Some(2));

    // a Case 1 pair on C_8 gives exactly min(|A ∪ D|, |B ∪ D|) paths
    ok(d, &["gen", "convex", "8", "3", "--out", "c8.txt"]);
    ok(d, &["witness", "c8.txt", "0,3", "2,5", "--out", "cert.json", "--svg", "w.svg"]);
    let cert: Certificate = serde_json::from_str(&fs::read_to_string(d.join("cert.json")).unwrap()).unwrap();
    assert_eq!(cert.case.as_str(), "1");
    let g: GraphExport = serde_json::from_str(&ok(d, &["graph", "c8.txt"])).unwrap();
    let degree = |v: [usize; 2]| {
        let id = g.vertices.iter().position(|s| s.endpoints() == v).unwrap();
        g.edges.iter().filter(|e| e.contains(&id)).count()
    };
    assert_eq!(cert.paths.len(), degree([0, 3]).min(degree([2, 5])));
    let svg = fs::read_to_string(d.join("w.svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("stroke-dasharray"));
    assert_eq!(svg.matches("data-role").count(), 2);

    let rendered = ok(d, &["render", "c8.txt", "--certificate", "cert.json"]);
    assert_eq!(rendered, svg);
}

#[test]
fn gen_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let first = ok(d, &["gen", "convex", "8", "42", "--out", "a.txt"]);
    let second = ok(d, &["gen", "convex", "8", "42", "--out", "b.txt"]);
    let (a, b) = (fs::read(d.join("a.txt")).unwrap(), fs::read(d.join("b.txt")).unwrap());
    assert_eq!(a, b);
    assert_eq!(first.split_whitespace().last(), second.split_whitespace().last());
    let pts = parse_text(std::str::from_utf8(&a).unwrap()).unwrap();
    assert_eq!(PointSet::new(pts).unwrap().hull().len(), 8);

    let o = segconn(d, &["gen", "random", "6", "7"]);
    assert!(o.status.success());
    assert!(stderr(&o).starts_with("sha256 "));
    PointSet::new(parse_text(&stdout(&o)).unwrap()).unwrap();

    assert_eq!(segconn(d, &["gen", "random", "6", "7", "--bound", "5"]).status.code(), Some(2));
}

#[test]
fn search_reports() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = segconn(d, &["search", "--n", "6..7", "--trials", "6", "--family", "mixed", "--exact", "--json", "--out", "x.txt"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stderr(&o).contains("6/6 trials"));
    let r: SearchReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.violations.is_empty());
    assert_eq!(r.samples.len(), 6);
    for t in &r.samples {
        assert!(t.min_degree as u128 >= t.kappa_n);
        assert!(t.exact_kappa.unwrap() as u128 >= t.kappa_n);
        if t.family == "convex" {
            assert_eq!(t.gap(), 0);
        }
    }
    let specimen = PointSet::new(parse_text(&fs::read_to_string(d.join("x.txt")).unwrap()).unwrap()).unwrap();
    assert_eq!(specimen.len(), r.samples[r.extremal].n);

    let text = ok(d, &["search", "--n", "5", "--trials", "3", "--family", "convex"]);
    assert!(text.contains("extremal: trial 0"), "{text}");
    assert_eq!(segconn(d, &["search", "--n", "5", "--trials", "0"]).status.code(), Some(2));
}
