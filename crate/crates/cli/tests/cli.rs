use std::process::{Command, Output};

use serde_json::Value;
use spectral_chi::families::petal;
use spectral_chi::search::canonical_code;
use spectral_chi::Graph;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spectral-chi")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn gen_formats() {
    let el = stdout(&["gen", "petal(6)", "--format", "edgelist"]);
    assert_eq!(el.lines().next(), Some("13 18"));
    assert_eq!(el.lines().count(), 19);
    let dot = stdout(&["gen", "Gktd(4,3,2)", "--format", "dot"]);
    assert!(dot.starts_with("graph G {") && dot.ends_with("}\n"));
    let j = json(&["gen", "K_4", "--format", "json"]);
    assert_eq!(j["n"], 4);
    assert_eq!(j["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["gen", "petal("][..],
        &["report", "2xK_3"],
        &["compose", "edu", "K_3", "K_3"],
        &["search", "--max-n", "10"],
        &["verify", "nonsense"],
        &["report", "K_3", "--tol", "-1"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    let out = run(&["report", "2xK_3"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("connected graph required"));
}

#[test]
fn reports() {
    let r = json(&["report", "petal(3)", "--format", "json"]);
    assert_eq!(r["lower_bound"]["sharp"], true);
    let r = json(&["report", "Gktd(2,5,1)", "--format", "json"]);
    assert_eq!(r["lower_bound"]["sharp"], false);
    assert_eq!(r["chi"], 5);
    assert_eq!(r["equitable"]["dinva_all"], true);
    assert!((r["lambda_max"]["value"].as_f64().unwrap() - 1.5).abs() < 1e-9);
}

#[test]
fn report_reads_edge_list_files() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("c5.txt");
    std::fs::write(&path, "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let r = json(&["report", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!((r["n"].as_u64(), r["chi"].as_u64()), (Some(5), Some(3)));
}

#[test]
fn compositions() {
    let r = json(&["compose", "onesum", "K_3", "0", "K_3", "0", "--format", "json"]);
    assert_eq!(r["n"], 5);
    assert!((r["lambda_max"]["value"].as_f64().unwrap() - 1.5).abs() < 1e-9);
    assert_eq!(r["lambda_max"]["mult"], 3);

    let el = stdout(&["compose", "join", "K_1", "3xK_2", "--format", "edgelist"]);
    let g = Graph::parse_edge_list(&el).unwrap();
    assert_eq!(canonical_code(&g).unwrap(), canonical_code(&petal(3).unwrap()).unwrap());
}

#[test]
fn search_finds_the_bowtie() {
    let r = json(&["search", "sharp-mult=N-2", "--max-n", "5", "--format", "json"]);
    let hits: Vec<&Value> = r["hits"].as_array().unwrap().iter().filter(|h| h["n"] == 5).collect();
    assert_eq!(hits.len(), 1);
    assert_eq!(hits[0]["edges"].as_array().unwrap().len(), 6);
    assert_eq!(hits[0]["mult"], 3);
}

#[test]
fn verify_is_deterministic_and_reports_failures() {
    let args = ["verify", "onesum", "--seed", "7", "--format", "json"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    assert_eq!(serde_json::from_str::<Value>(&a).unwrap()["passed"], true);
    assert!(stdout(&["verify", "families"]).lines().all(|l| l.starts_with("PASS")));
    // a tolerance below rounding error splits every eigenvalue group
    assert_eq!(run(&["verify", "families", "--tol", "1e-300"]).status.code(), Some(1));
}

#[test]
fn out_flag_writes_file() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("k5.dot");
    let out = run(&["gen", "K_5", "--format", "dot", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().contains("3 -- 4;"));
}
