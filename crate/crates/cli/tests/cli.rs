//! End-to-end runs of the `pmtrop` binary.

use std::io::Write;
use std::path::Path;
use std::process::Command;

use serde_json::Value;
use tempfile::{NamedTempFile, TempDir};

use pmtrop::fixtures;
use pmtrop::{SeriesMatrix, SetFunction};

struct Run {
    code: i32,
    json: Value,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_pmtrop")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    Run {
        code: out.status.code().expect("exit code"),
        json: serde_json::from_str(&stdout).unwrap_or(Value::Null),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn file_with(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

fn function_file(f: &SetFunction) -> NamedTempFile {
    file_with(&f.to_json())
}

fn matrix_file(m: &SeriesMatrix) -> NamedTempFile {
    file_with(&m.to_string())
}

#[test]
fn check_member() {
    let f = function_file(&fixtures::cube3_minor_values());
    let r = run(&["check", path(&f)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let res = &r.json["result"];
    for key in ["submodular", "strictly_submodular", "m_natural_concave", "flag_dressian"] {
        assert_eq!(res[key], true, "{key}");
    }
    assert_eq!(res["characterizations"]["lift_dressian"], true);
    assert_eq!(res["witnesses"]["m_natural_concave"], Value::Null);
}

#[test]
fn check_strict_non_member() {
    let f = function_file(&fixtures::strict_non_mnatural());
    let r = run(&["check", path(&f)]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json["result"]["strictly_submodular"], true);
    assert_eq!(r.json["result"]["m_natural_concave"], false);
    assert!(r.json["result"]["witnesses"]["m_natural_concave"].is_object());
}

#[test]
fn check_rejects_malformed_values() {
    let f = file_with(r#"{"n": 1, "values": {"": "0", "1": "1/0"}}"#);
    let r = run(&["check", path(&f)]);
    assert_eq!(r.code, 2);
    assert_eq!(r.json["error"]["kind"], "input");
    let missing = run(&["check", "/nonexistent/file.json"]);
    assert_eq!(missing.code, 2);
}

#[test]
fn minors_of_gram_matrix() {
    let b = matrix_file(&fixtures::cube3_flag_matrix());
    let r = run(&["minors", "--gram", path(&b)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.json["result"]["positive_definite"], true);
    let text = serde_json::to_string(&r.json["result"]["minors"]).unwrap();
    assert_eq!(SetFunction::from_json(&text).unwrap(), fixtures::cube3_minor_values());
}

#[test]
fn minors_of_simple_matrices() {
    let id = matrix_file(&SeriesMatrix::identity(3));
    let r = run(&["minors", path(&id)]);
    assert_eq!(r.code, 0);
    let text = serde_json::to_string(&r.json["result"]["minors"]).unwrap();
    assert_eq!(SetFunction::from_json(&text).unwrap(), SetFunction::zero(3));

    let d = file_with("2 2 real\nt; 0\n0; t\n");
    let r = run(&["minors", path(&d)]);
    let v = &r.json["result"]["minors"]["values"];
    assert_eq!((v["1"].as_str(), v["2"].as_str(), v["12"].as_str()), (Some("-1"), Some("-1"), Some("-2")));

    let singular = file_with("2 2 real\n1; 1\n1; 1\n");
    let r = run(&["minors", "--gram", path(&singular)]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json["error"]["kind"], "hypothesis");
}

#[test]
fn subdivide_examples() {
    let f = function_file(&fixtures::cube3_minor_values());
    let r = run(&["subdivide", path(&f), "--perturb", "auto"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.json["result"]["edges"]["admissible"], true);
    assert_eq!(r.json["result"]["layered"], true);
    assert!(r.json["eps"].is_string());
    let reports = r.json["result"]["matroid_cells"]["reports"].as_array().unwrap();
    assert!(reports.iter().all(|c| c["is_matroid"] == true));

    let z = function_file(&SetFunction::zero(3));
    let r = run(&["subdivide", path(&z)]);
    assert_eq!(r.json["result"]["subdivision"]["cells"].as_array().unwrap().len(), 1);
    assert_eq!(r.json["eps"], Value::Null);

    let bad = function_file(&fixtures::strict_non_mnatural());
    let r = run(&["subdivide", path(&bad)]);
    let edges = r.json["result"]["edges"]["edges"].as_array().unwrap();
    assert!(edges.iter().any(|e| e["u"] == 1 && e["v"] == 14));
    assert_eq!(r.json["result"]["edges"]["admissible"], false);
    let r = run(&["subdivide", path(&bad), "--perturb", "1/10"]);
    assert_eq!(r.code, 1);
}

#[test]
fn realize_examples() {
    let b = matrix_file(&fixtures::cube3_flag_matrix());
    let r = run(&["realize", path(&b), "--seed", "5"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.json["seed"], 5);
    let achieved = serde_json::to_string(&r.json["result"]["achieved_minors"]).unwrap();
    let w = pmtrop::minors::flag_valuation(&fixtures::cube3_flag_matrix()).unwrap();
    assert_eq!(SetFunction::from_json(&achieved).unwrap(), w.scaled(&pmtrop::series::int(2)));

    let r = run(&["realize", path(&b), "--halve"]);
    let achieved = serde_json::to_string(&r.json["result"]["achieved_minors"]).unwrap();
    assert_eq!(SetFunction::from_json(&achieved).unwrap(), w);

    let light = file_with("2 2 real\n1; 1\n0; t^-1\n");
    let r = run(&["realize", path(&light)]);
    assert_eq!(r.code, 1);
    assert!(r.json["error"]["message"].as_str().unwrap().contains("hypothesis"));

    let r = run(&["realize", path(&b), "--lambdas", "0,1"]);
    assert_eq!(r.code, 2);
}

#[test]
fn realize_identity_is_rejected() {
    let id = matrix_file(&SeriesMatrix::identity(3));
    let r = run(&["realize", path(&id)]);
    assert_eq!(r.code, 1);
    assert!(r.json["error"]["message"].as_str().unwrap().contains("Plücker"));
}

#[test]
fn membership_examples() {
    let f = function_file(&fixtures::cube3_minor_values());
    let r = run(&["membership", path(&f)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["result"]["verdict"], "inside");
    let g = function_file(&fixtures::flag_incidence_counterexample());
    let r = run(&["membership", path(&g)]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json["result"]["verdict"], "outside");
}

#[test]
fn ineq_commands() {
    let r = run(&["ineq", "triple", "1", "1", "1", "--samples", "-2,-1,0,1/2,1,3"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["result"]["sampled"], true);
    let r = run(&["ineq", "triple", "0", "0", "1"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json["result"]["cone_condition"], false);

    let r = run(&["ineq", "quad", "1,1,1,1,1,1"]);
    assert_eq!(r.json["result"]["hessian_det"], "-3");
    assert_eq!(r.json["result"]["lorentzian"], true);

    let r = run(&["ineq", "rank-two", "--r", "-5/3"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["result"]["identity_value"], "0");

    let r = run(&["ineq", "limit", "--r", "1", "--lam", "1/8", "--eps", "1"]);
    assert_eq!(r.json["result"]["gap"], "18");
    let r = run(&["ineq", "limit", "--r", "1", "--lam", "1/2", "--eps", "1"]);
    assert_eq!(r.code, 2);

    let id = file_with("4 4 real\n1; 0; 0; 0\n0; 1; 0; 0\n0; 0; 1; 0\n0; 0; 0; 1\n");
    let r = run(&["ineq", "matrix", path(&id), "--indices", "1,2,3,4"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.json["result"]["permutations"].as_array().unwrap().len(), 24);
    let r = run(&["ineq", "matrix", path(&id), "--indices", "1,2,3", "--base", "4"]);
    assert_eq!(r.json["result"]["permutations"].as_array().unwrap().len(), 6);
    let bad = file_with("2 2 real\n1; 2\n2; 1\n");
    assert_eq!(run(&["ineq", "matrix", path(&bad), "--indices", "1,2,3"]).code, 2);
}

#[test]
fn verify_paper_runs_all_anchors() {
    let r = run(&["verify-paper"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let results = r.json["result"].as_array().unwrap();
    assert!(results.iter().all(|a| a["passed"] == true));
    let f = run(&["verify-paper", "--filter", "5.4"]);
    let ids: Vec<&str> = f.json["result"].as_array().unwrap().iter().map(|a| a["id"].as_str().unwrap()).collect();
    assert!(!ids.is_empty() && ids.iter().all(|i| i.starts_with("5.4")));
}

#[test]
fn outputs_are_deterministic_and_written_to_files() {
    let b = matrix_file(&fixtures::cube3_flag_matrix());
    let dir = TempDir::new().unwrap();
    let out = |name: &str| dir.path().join(name);
    let p1 = out("a.json");
    let p2 = out("b.json");
    for p in [&p1, &p2] {
        let r = run(&["realize", path(&b), "--seed", "9", "--output", p.to_str().unwrap()]);
        assert_eq!(r.code, 0);
    }
    let read = |p: &Path| std::fs::read_to_string(p).unwrap();
    assert_eq!(read(&p1), read(&p2));
    let doc: Value = serde_json::from_str(&read(&p1)).unwrap();
    let a = SeriesMatrix::parse(doc["result"]["gram_a"].as_str().unwrap()).unwrap();
    assert_eq!(a.to_string(), doc["result"]["gram_a"].as_str().unwrap());
}
