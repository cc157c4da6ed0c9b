use std::io::Write;
use std::process::{Command, Output, Stdio};

use fallcolor::graph::{parse_graph6, to_graph6};
use fallcolor::Graph;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fallcolor")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fallcolor"))
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

fn json_line(o: &Output) -> Value {
    serde_json::from_str(stdout(o).lines().last().unwrap()).unwrap()
}

fn g6(g: &Graph) -> String {
    to_graph6(g)
}

fn temp_file(name: &str, contents: &str) -> String {
    let path = std::env::temp_dir().join(format!("fallcolor-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn build_families_and_operations() {
    let o = run(&["build", "cycle", "5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), g6(&Graph::cycle(5).unwrap()));

    let (c5, k2) = (g6(&Graph::cycle(5).unwrap()), g6(&Graph::complete(2).unwrap()));
    let lex = parse_graph6(stdout(&run(&["build", "lex", &c5, &k2])).trim()).unwrap();
    assert_eq!((lex.n(), lex.edge_count()), (10, 25));

    let m = parse_graph6(stdout(&run(&["build", "mycielski", &k2])).trim()).unwrap();
    assert_eq!((m.n(), m.regular_degree()), (5, Some(2)));
    assert!(fallcolor::enumerate::is_connected(&m));

    let dot = stdout(&run(&["build", "--dot", "cat", &k2, &k2]));
    assert!(dot.starts_with("graph G {") && dot.contains("label=\"(0,0)\""));

    let o = run(&["build", "cycle", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(run(&["build", "torus", "3"]).status.code(), Some(2));
}

#[test]
fn fall_reports() {
    let o = run(&["fall", &g6(&Graph::cycle(5).unwrap())]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"fall_set":[]}"#);

    let k3k4 = fallcolor::graph::cat_product(&Graph::complete(3).unwrap(), &Graph::complete(4).unwrap());
    let v = json_line(&run(&["fall", &g6(&k3k4)]));
    assert_eq!(v["fall_set"], serde_json::json!([3, 4]));
    assert_eq!(v["chi_f"], 3);

    let o = run(&["fall", &g6(&Graph::cycle(6).unwrap()), "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_line(&o)["witness"], serde_json::json!([0, 1, 2, 0, 1, 2]));
    assert_eq!(run(&["fall", &g6(&Graph::cycle(6).unwrap()), "--k", "4"]).status.code(), Some(1));

    let v = json_line(&run(&["--one-based", "fall", &g6(&Graph::complete(3).unwrap())]));
    assert_eq!(v["witnesses"]["3"], serde_json::json!([1, 2, 3]));
}

#[test]
fn fall_reads_stdin() {
    let o = run_stdin(&["fall", "-"], "Dhc\n");
    assert_eq!(stdout(&o).trim(), r#"{"fall_set":[]}"#);
}

#[test]
fn limits_exit_with_three() {
    let c5 = g6(&Graph::cycle(5).unwrap());
    assert_eq!(run(&["--capacity", "4", "fall", &c5]).status.code(), Some(3));
    assert_eq!(run(&["--capacity", "129", "fall", &c5]).status.code(), Some(2));
    assert_eq!(run(&["--timeout", "0", "fall", &c5]).status.code(), Some(2));
    assert_eq!(run(&["fall", "not-graph6"]).status.code(), Some(2));
}

#[test]
fn verify_colorings() {
    let c5 = g6(&Graph::cycle(5).unwrap());
    let o = run(&["verify", &c5, &temp_file("c5", "0 1 0 1 2\n")]);
    assert_eq!(o.status.code(), Some(1));
    let v = json_line(&o);
    assert_eq!((v["proper"].as_bool(), v["fall"].as_bool()), (Some(true), Some(false)));
    assert_eq!(v["offending_vertices"], serde_json::json!([1, 2]));

    let o = run(&["verify", &g6(&Graph::complete(2).unwrap()), &temp_file("k2", "0 0")]);
    assert_eq!(json_line(&o)["proper"], false);

    let fx = &fallcolor::constructions::known_fixtures()[0];
    let one_based = temp_file("c5k2", "1 2 3 4 1 5 2 4 5 3\n");
    let o = run(&["--one-based", "verify", &g6(&fx.graph), &one_based]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_line(&o)["k"], 5);

    assert_eq!(run(&["verify", &c5, &temp_file("short", "0 1")]).status.code(), Some(2));
    assert_eq!(run(&["verify", &c5, "/nonexistent/coloring"]).status.code(), Some(2));
}

#[test]
fn hom_verify() {
    let (c6, k3, k2) =
        (g6(&Graph::cycle(6).unwrap()), g6(&Graph::complete(3).unwrap()), g6(&Graph::complete(2).unwrap()));
    let o = run(&["hom", "verify", &c6, &k3, &temp_file("m3", "0 1 2 0 1 2")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_line(&o)["type2"], true);
    let c5 = g6(&Graph::cycle(5).unwrap());
    let o = run(&["hom", "verify", &c5, &k2, &temp_file("m2", "0 1 0 1 0")]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(run(&["hom", "verify", &c5, &k2, &temp_file("m9", "0 1 0 1 9")]).status.code(), Some(2));
}

#[test]
fn constructions() {
    let o = run(&["construct", "c5xc5"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(parse_graph6(&lines[0]).unwrap().n(), 25);
    assert_eq!(lines[1].split_whitespace().count(), 25);
    let v: Value = serde_json::from_str(&lines[2]).unwrap();
    assert_eq!((v["k"].as_u64(), v["fall"].as_bool()), (Some(5), Some(true)));

    let v = json_line(&run(&["construct", "case1", "--t", "3", "--rn", "4"]));
    assert_eq!((v["k"].as_u64(), v["fall"].as_bool()), (Some(5), Some(true)));
    assert_eq!(run(&["construct", "case1", "--t", "4", "--rn", "4"]).status.code(), Some(2));

    let out = stdout(&run(&["construct", "fixtures"]));
    let verdicts: Vec<Value> = out.lines().skip(2).step_by(3).map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(verdicts.len(), 3);
    assert!(verdicts.iter().all(|v| v["fall"] == true && v["k"] == 5));

    let v = json_line(&run(&["construct", "beyond-max", "--set", "2,3,4"]));
    assert_eq!((v["case"].as_str(), v["k"].as_u64()), (Some("I"), Some(5)));

    let cycles: Vec<String> = [6, 8, 9].iter().map(|&n| g6(&Graph::cycle(n).unwrap())).collect();
    let mut args = vec!["construct", "join-compose"];
    args.extend(cycles.iter().map(String::as_str));
    let v = json_line(&run(&args));
    assert_eq!(v["k"], 7);
    args.extend(["--ks", "3,2,3"]);
    assert_eq!(json_line(&run(&args))["k"], 8);

    let (c9, k2) = (g6(&Graph::cycle(9).unwrap()), g6(&Graph::complete(2).unwrap()));
    let v = json_line(&run(&["construct", "lex-compose", &c9, &k2]));
    assert_eq!((v["k"].as_u64(), v["n"].as_u64()), (Some(6), Some(18)));
    let v = json_line(&run(&["construct", "cat-project", &g6(&Graph::complete(3).unwrap()), &k2]));
    assert_eq!(v["k"], 3);
    let c5 = g6(&Graph::cycle(5).unwrap());
    assert_eq!(run(&["construct", "cat-project", &c5, &k2]).status.code(), Some(2));
}

#[test]
fn ghat_and_bipartite_complement() {
    let o = run(&["ghat", &g6(&Graph::cycle(6).unwrap()), "--t", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_line(&o)["member"], true);
    assert_eq!(run(&["ghat", &g6(&Graph::cycle(4).unwrap()), "--t", "3"]).status.code(), Some(1));
    assert_eq!(run(&["ghat", &g6(&Graph::cycle(4).unwrap()), "--t", "4"]).status.code(), Some(2));
    let dense = g6(&fallcolor::graph::complement(&Graph::cycle(7).unwrap()));
    let o = run(&["ghat", &dense, "--t", "4", "--budget", "0"]);
    assert_eq!(o.status.code(), Some(3));

    let v = json_line(&run(&["bipc", &g6(&Graph::path(4).unwrap())]));
    assert_eq!(v["fall_set"], serde_json::json!([2]));
    assert_eq!(v["matching"], serde_json::json!([[0, 1], [2, 3]]));
    let v = json_line(&run(&["bipc", &g6(&Graph::path(3).unwrap())]));
    assert_eq!(v["fall_set"], serde_json::json!([]));
    let o = run(&["bipc", &g6(&Graph::cycle(5).unwrap())]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("odd cycle"));
}

#[test]
fn hunt_small_corpus() {
    let o = run(&["hunt", "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_line(&o);
    assert_eq!(v["corpus_size"], 9);
    assert_eq!(v["pairs_verified"], 45);
    assert_eq!(v["counterexamples"], serde_json::json!([]));

    let a = stdout(&run(&["--seed", "5", "hunt", "--max-n", "3", "--random", "2"]));
    let b = stdout(&run(&["--seed", "5", "hunt", "--max-n", "3", "--random", "2"]));
    assert_eq!(a, b);
    assert_eq!(run(&["--capacity", "10", "hunt", "--max-n", "4"]).status.code(), Some(3));
}

#[test]
fn text_format() {
    let out = stdout(&run(&["--format", "text", "fall", &g6(&Graph::complete(3).unwrap())]));
    assert!(out.lines().any(|l| l == "fall_set: 3"));
}
