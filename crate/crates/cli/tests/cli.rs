use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn conetutte(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conetutte"))
        .args(args)
        .env_remove("CONETUTTE_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_graph(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn polynomial_commands() {
    let dir = tempfile::tempdir().unwrap();
    let p2 = write_graph(dir.path(), "p2.txt", "# a single edge\n0 1\n");
    let out = conetutte(&["cone-f", &p2]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "[2,1]\ny+2\n");

    let tri = write_graph(dir.path(), "tri.txt", "0 1\n1 2\n2 0\n");
    assert_eq!(stdout(&conetutte(&["tutte", &tri])), "[2,1]\ny+2\n");
    let full = stdout(&conetutte(&["tutte", &tri, "--full"]));
    assert_eq!(full.lines().nth(1), Some("x^2+x+y"));

    let p3 = write_graph(dir.path(), "p3.txt", "0 1\n1 2\n");
    assert_eq!(stdout(&conetutte(&["gv", &p3, "--vertex", "1"])), "[3,1]\ny+3\n");
    assert_eq!(stdout(&conetutte(&["gv", &p3, "--vertex", "0"])), "[2,1]\ny+2\n");
}

#[test]
fn tree_commands() {
    assert_eq!(stdout(&conetutte(&["trees", "7", "--count"])), "11\n");
    let listing = stdout(&conetutte(&["trees", "4"]));
    assert_eq!(listing.matches("# tree").count(), 2);
    assert!(listing.contains("leaves=3"));

    let table = stdout(&conetutte(&["table", "7"]));
    let rows: Vec<&str> = table.lines().collect();
    assert_eq!(rows.len(), 11);
    assert!(rows[0].ends_with("y^6+7y^5+26y^4+63y^3+104y^2+112y+64"));
    assert!(rows[10].ends_with("y^6+7y^5+22y^4+42y^3+57y^2+63y+64"));

    let dir = tempfile::tempdir().unwrap();
    // spider(4,1,1): legs of length 4, 1 and 1 from vertex 0
    let t2 = write_graph(dir.path(), "t2.txt", "0 1\n1 2\n2 3\n3 4\n0 5\n0 6\n");
    let shifted = stdout(&conetutte(&["shift", &t2, "--v1", "2", "--vk", "0"]));
    let header = shifted.lines().next().unwrap();
    assert!(header.contains("leaves_before=3 leaves_after=4"), "{header}");
    assert!(shifted.contains("n 7"));
}

#[test]
fn poset_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("p.dot");
    let json = dir.path().join("p.json");
    let out = conetutte(&["poset", "7", "--dot", dot.to_str().unwrap(), "--json", json.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "nodes=11 covers=20 minimal=1 maximal=1\n");
    let dot = fs::read_to_string(dot).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 20);
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(json["n"], 7);
    assert_eq!(json["trees"].as_array().unwrap().len(), 11);
    assert_eq!(json["covers"].as_array().unwrap().len(), 20);
}

#[test]
fn verify_table_reports_the_annotated_row() {
    let out = conetutte(&["verify", "table7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("table7") && l.ends_with("PASS")));
    let notes: Vec<&str> = text.lines().filter(|l| l.starts_with("note [table7]")).collect();
    assert_eq!(notes.len(), 1);
    assert!(notes[0].contains("row=1") && notes[0].contains("122"), "{}", notes[0]);
}

#[test]
fn verify_report_stream_is_deterministic() {
    let args = ["verify", "oracles", "--trials", "20", "--seed", "7", "--report", "-"];
    let first = conetutte(&args);
    assert_eq!(first.status.code(), Some(0));
    let second = conetutte(&[&args[..], &["--jobs", "2"]].concat());
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    let line = text.lines().next().unwrap();
    let parsed: serde_json::Value = serde_json::from_str(line).unwrap();
    assert!(parsed["check"].is_string() && parsed["pass"].is_boolean());

    let other_seed = conetutte(&["verify", "oracles", "--trials", "20", "--seed", "8", "--report", "-"]);
    assert_ne!(first.stdout, other_seed.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(conetutte(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(conetutte(&["trees", "13"]).status.code(), Some(2));
    assert_eq!(conetutte(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(conetutte(&["cone-f", "/nonexistent/graph.txt"]).status.code(), Some(2));
    assert_eq!(conetutte(&["--help"]).status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let bad = write_graph(dir.path(), "bad.txt", "0 x\n");
    let out = conetutte(&["tutte", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    let cycle = write_graph(dir.path(), "c.txt", "0 1\n1 2\n2 0\n");
    assert_eq!(conetutte(&["shift", &cycle, "--v1", "0", "--vk", "1"]).status.code(), Some(2));
    assert_eq!(conetutte(&["gv", &cycle, "--vertex", "9"]).status.code(), Some(2));
}

#[test]
fn bound_can_be_raised_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_conetutte"))
        .args(["trees", "13", "--count"])
        .env("CONETUTTE_MAX_N", "13")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1301\n");
}
