use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn latgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latgraph"))
        .args(args)
        .env_remove("LATGRAPH_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = latgraph(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn code(args: &[&str]) -> i32 {
    latgraph(args).status.code().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn graph_summaries() {
    assert_eq!(ok(&["graph", "--group", "Z(2)xZ(6)", "--kind", "epow"]), "vertices=12 edges=39\n");
    assert_eq!(ok(&["graph", "--group", "Z(6)", "--kind", "diff", "--format", "summary"]), "vertices=3 edges=2\n");
    assert_eq!(ok(&["graph", "--group", "Z(4)", "--kind", "dirpow"]), "vertices=4 arcs=7\n");
    assert_eq!(ok(&["graph", "--group", "Z(6)", "--kind", "pow"]), "vertices=6 edges=13\n");
}

#[test]
fn lattice_summaries() {
    assert_eq!(ok(&["lattice", "--group", "Z(2)xZ(6)"]), "nodes=8 covers=10\n");
    assert_eq!(ok(&["lattice", "--group", "Z(12)"]), "nodes=6 covers=7\n");
    assert_eq!(ok(&["lattice", "--group", "Z(1)"]), "nodes=1 covers=0\n");
}

#[test]
fn dot_output() {
    let dot = ok(&["graph", "--group", "S(3)", "--kind", "pow", "--format", "dot"]);
    assert!(dot.starts_with("graph pow {\n"));
    assert!(dot.trim_end().ends_with('}'));
    let lat = ok(&["lattice", "--group", "Z(6)", "--format", "dot"]);
    assert!(lat.contains("rankdir=BT;"));
    assert!(lat.contains("n3 [label=\"6\"];"));
    let di = ok(&["graph", "--group", "Z(4)", "--kind", "dirpow", "--format", "dot"]);
    assert_eq!(di.matches("->").count(), 7);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let o = latgraph(&["graph", "--group", "Z(0)", "--kind", "pow"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid parameter"));
    assert_eq!(code(&["graph", "--group", "Z(6", "--kind", "pow"]), 2);
    assert_eq!(code(&["graph", "--kind", "pow"]), 2);
    assert_eq!(code(&["census", "--catalog", "nope"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn size_cap_exits_3() {
    assert_eq!(code(&["graph", "--group", "S(6)", "--kind", "pow"]), 3);
    assert_eq!(code(&["lattice", "--group", "Z(100)", "--max-order", "50"]), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_latgraph"))
        .args(["lattice", "--group", "Z(12)"])
        .env("LATGRAPH_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(code(&["lattice", "--group", "S(6)", "--max-order", "720"]), 0);
}

#[test]
fn reconstruct_lattice_from_epow_file() {
    let dir = tempfile::tempdir().unwrap();
    let json = ok(&["graph", "--group", "Z(2)xZ(6)", "--kind", "epow", "--format", "json"]);
    let path = write(dir.path(), "epow.json", &json);
    let out = ok(&["reconstruct", "--kind", "lattice-from-epow", "--from", &path]);
    assert_eq!(out, "nodes=8 covers=10\n");
}

#[test]
fn reconstruct_graphs_from_lattice_file() {
    let dir = tempfile::tempdir().unwrap();
    let json = ok(&["lattice", "--group", "Z(6)", "--format", "json"]);
    let path = write(dir.path(), "z6.json", &json);
    let run = |kind: &str| ok(&["reconstruct", "--kind", kind, "--from", &path]);
    assert_eq!(run("pow-from-lattice"), "vertices=6 edges=13\n");
    assert_eq!(run("epow-from-lattice"), "vertices=6 edges=15\n");
    assert_eq!(run("dirpow-from-lattice"), "vertices=6 arcs=15\n");
    assert_eq!(run("diff-from-lattice"), "vertices=3 edges=2\n");
}

#[test]
fn non_epow_inputs_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    let graphs = [
        ("p3", r#"{"kind":"simple","vertices":3,"edges":[[0,1],[1,2]]}"#),
        ("c4", r#"{"kind":"simple","vertices":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}"#),
        ("k4e", r#"{"kind":"simple","vertices":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3]]}"#),
    ];
    for (name, text) in graphs {
        let path = write(dir.path(), &format!("{name}.json"), text);
        let o = latgraph(&["reconstruct", "--kind", "lattice-from-epow", "--from", &path]);
        assert_eq!(o.status.code(), Some(4), "{name}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("not an enhanced power graph"));
    }
}

#[test]
fn invalid_lattice_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let bad = r#"{"nodes":[{"id":0,"order":1},{"id":1,"order":4}],"covers":[[0,1]]}"#;
    let path = write(dir.path(), "bad.json", bad);
    assert_eq!(code(&["reconstruct", "--kind", "pow-from-lattice", "--from", &path]), 4);
    let junk = write(dir.path(), "junk.json", "not json");
    assert_eq!(code(&["reconstruct", "--kind", "pow-from-lattice", "--from", &junk]), 2);
    assert_eq!(code(&["reconstruct", "--kind", "pow-from-lattice", "--from", "/nonexistent/x.json"]), 2);
}

#[test]
fn roundtrip_passes() {
    for g in ["Z(2)xZ(6)", "S(4)", "Q(16)"] {
        let out = ok(&["roundtrip", "--group", g]);
        assert!(out.ends_with("5/5 PASS\n"), "{g}: {out}");
        assert_eq!(out.matches(": PASS").count(), 5);
    }
}

#[test]
fn roundtrip_over_catalog() {
    let out = ok(&["roundtrip", "--catalog", "order16"]);
    assert_eq!(out.matches("5/5 PASS").count(), 14);
}

#[test]
fn compare_reports() {
    let out = ok(&["compare", "--group-a", "Heis(3)", "--group-b", "Z(3)xZ(3)xZ(3)"]);
    for flag in ["lattice_iso", "dirpow_iso", "epow_iso", "pow_iso"] {
        assert!(out.contains(&format!("{flag}=true\n")), "{out}");
    }
    assert!(out.contains("groups differ: abelianness"));

    let out = ok(&["compare", "--group-a", "Z(4)", "--group-b", "Z(2)xZ(2)"]);
    assert_eq!(out.matches("=false\n").count(), 4);

    let out = ok(&["compare", "--group-a", "D(8)", "--group-b", "D(8)"]);
    assert_eq!(out.matches("=true\n").count(), 4);
}

fn class_count(out: &str) -> usize {
    let head = out.lines().next().unwrap();
    head.rsplit("classes=").next().unwrap().parse().unwrap()
}

#[test]
fn order16_census() {
    let pow = ok(&["census", "--catalog", "order16", "--kind", "pow"]);
    assert_eq!(class_count(&pow), 12);
    assert!(pow.starts_with("catalog=order16 kind=pow groups=14 classes=12\n"));
    assert_eq!(pow.lines().count(), 13);
    assert!(pow.contains("Z8xZ2 ~ M16\n"));
    assert!(pow.contains("Z4xZ2xZ2 ~ D8oZ4\n"));

    let epow = ok(&["census", "--catalog", "order16", "--kind", "epow"]);
    let lattice = ok(&["census", "--catalog", "order16", "--kind", "lattice"]);
    assert_eq!(class_count(&epow), 12);
    assert_eq!(class_count(&lattice), class_count(&epow));
}

#[test]
fn deterministic_output() {
    for args in [
        &["graph", "--group", "S(4)", "--kind", "pow", "--format", "dot"][..],
        &["lattice", "--group", "D(12)", "--format", "json"],
        &["census", "--catalog", "order16", "--kind", "epow"],
    ] {
        assert_eq!(stdout(&latgraph(args)), stdout(&latgraph(args)));
    }
    let seeded = ok(&["graph", "--group", "A(4)", "--kind", "epow", "--format", "json", "--seed", "7"]);
    assert_eq!(seeded, ok(&["graph", "--group", "A(4)", "--kind", "epow", "--format", "json"]));
}

#[test]
fn json_reingests() {
    let dir = tempfile::tempdir().unwrap();

    let lattice = ok(&["lattice", "--group", "Z(2)xZ(6)", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&lattice).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 8);
    let path = write(dir.path(), "l.json", &lattice);
    let again = ok(&["reconstruct", "--kind", "epow-from-lattice", "--from", &path, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&again).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 12);
    assert_eq!(v["vertices"][0], "n0:g1");

    // a labeled reconstruction feeds back into the inverse direction
    let epath = write(dir.path(), "e.json", &again);
    let back = ok(&["reconstruct", "--kind", "lattice-from-epow", "--from", &epath, "--format", "json"]);
    assert_eq!(back, lattice);

    let diff = ok(&["graph", "--group", "Z(6)", "--kind", "diff", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&diff).unwrap();
    assert_eq!(v["elements"], serde_json::json!([2, 3, 4]));
    let dpath = write(dir.path(), "d.json", &diff);
    let o = latgraph(&["reconstruct", "--kind", "lattice-from-epow", "--from", &dpath]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn cayley_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let z4 = "0,1,2,3\n1,2,3,0\n2,3,0,1\n3,0,1,2\n";
    let path = write(dir.path(), "z4.csv", z4);
    assert_eq!(ok(&["lattice", "--from", &path]), "nodes=3 covers=2\n");
    assert_eq!(ok(&["graph", "--from", &path, "--kind", "pow"]), "vertices=4 edges=6\n");
    let bad = write(dir.path(), "bad.csv", "0,1\n1\n");
    assert_eq!(code(&["lattice", "--from", &bad]), 2);
}
