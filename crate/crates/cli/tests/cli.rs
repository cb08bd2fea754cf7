//! The binary's reports and exit codes.

use std::path::Path;
use std::process::{Command, Output};

use injcolor::factory::subdivide;
use injcolor::families::{cycle, petersen};
use injcolor_cli::strip_timings;
use serde_json::Value;

fn injcolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_injcolor")).args(args).env_remove("INJCOLOR_BUDGET").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn analyze_reports_exact_values() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write(dir.path(), "c6.edges", &cycle(6).to_edge_list());
    let out = injcolor(&["analyze", &c6]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!((r["mad"].as_str(), r["girth"].as_u64(), r["delta"].as_u64()), (Some("2/1"), Some(6), Some(2)));

    let p3 = write(dir.path(), "p3.edges", &subdivide(&petersen(), 3).to_edge_list());
    let r = json(&injcolor(&["analyze", &p3]));
    assert_eq!((r["mad"].as_str(), r["girth"].as_u64(), r["delta"].as_u64()), (Some("24/11"), Some(20), Some(3)));
    assert_eq!(r["threads"]["length_histogram"], serde_json::json!([0, 0, 0, 15]));
    assert!(r["classes"].as_array().unwrap().contains(&Value::from("MAD4219_D3")));
    assert_eq!(r["auxiliary"]["n_h"].as_u64(), Some(10));
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.edges", "3 2\n0 1\n1 banana\n");
    let out = injcolor(&["analyze", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(injcolor(&["analyze", "/nonexistent/graph.edges"]).status.code(), Some(2));
    assert_eq!(injcolor(&["verify", "--class", "nope"]).status.code(), Some(2));
}

#[test]
fn color_examples() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write(dir.path(), "p3.edges", &subdivide(&petersen(), 3).to_edge_list());
    let out = injcolor(&["color", &p3, "--class", "mad4219_d3", "--exact"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["constructive"]["palette"].as_u64(), Some(3));
    assert_eq!(r["constructive"]["valid"].as_bool(), Some(true));
    assert_eq!(r["exact"]["chi_i"].as_u64(), Some(3));
    assert_eq!(r["agreement"].as_bool(), Some(true));

    let pet = write(dir.path(), "petersen.edges", &petersen().to_edge_list());
    let out = injcolor(&["color", &pet, "--class", "mad52_d4"]);
    assert_eq!(out.status.code(), Some(4));
    // the square of the Petersen graph is its complement, the line graph of K5
    let out = injcolor(&["color", &pet, "--exact"]);
    assert_eq!(json(&out)["exact"]["chi_i"].as_u64(), Some(5));
}

#[test]
fn budget_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let pet = write(dir.path(), "petersen.edges", &petersen().to_edge_list());
    let out = Command::new(env!("CARGO_BIN_EXE_injcolor"))
        .args(["color", &pet, "--exact"])
        .env("INJCOLOR_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(json(&out)["exact"]["status"].as_str(), Some("ABORTED"));
    let out = Command::new(env!("CARGO_BIN_EXE_injcolor"))
        .args(["color", &pet, "--exact"])
        .env("INJCOLOR_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn audit_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write(dir.path(), "p3.edges", &subdivide(&petersen(), 3).to_edge_list());
    let out = injcolor(&["audit", &p3, "--class", "mad4219_d3", "--strict"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["audit"].as_str(), Some("lemma8"));
    assert!(r["assertions"].as_array().unwrap().iter().all(|a| a["status"] == "PASS"));

    // the octahedron's triangles stay negative: audit failure
    let oct = write(dir.path(), "oct.edges", &injcolor::families::octahedron().to_edge_list());
    let coords = [(0.0, 3.0), (-3.0, -2.0), (3.0, -2.0), (0.6, 0.3), (-0.6, 0.3), (0.0, -0.6)];
    let emb = injcolor::PlaneEmbedding::from_coordinates(injcolor::families::octahedron(), &coords, None).unwrap();
    let rot = write(dir.path(), "oct.rot", &emb.format_rotation());
    let out = injcolor(&["audit", &oct, "--embedding", &rot, "--class", "planar_g9"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("faces_nonnegative"));
    let out = injcolor(&["audit", &oct, "--embedding", &rot, "--class", "planar_g9", "--strict"]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(injcolor(&["audit", &p3, "--class", "mad52_d3"]).status.code(), Some(2));
}

#[test]
fn verify_examples() {
    let out = injcolor(&["verify", "--class", "planar_g13", "--count", "50", "--seed", "1", "--size", "40"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&out);
    assert_eq!(r["schema_version"].as_u64(), Some(1));
    assert_eq!(r["summary"]["instances"].as_u64(), Some(50));
    assert_eq!(r["summary"]["falsifications"].as_u64(), Some(0));
    let results = r["results"].as_array().unwrap();
    assert!(results.iter().enumerate().all(|(i, x)| x["index"].as_u64() == Some(i as u64)));
    let audits_passed = results.iter().filter(|x| x["audit"]["passed"] == true).count() as u64;
    assert_eq!(r["summary"]["audits_passed"].as_u64(), Some(audits_passed));

    let out = injcolor(&["verify", "--class", "mad52_d4", "--count", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert!(r["results"].as_array().unwrap().is_empty());
    assert_eq!(r["summary"]["instances"].as_u64(), Some(0));

    let out = injcolor(&["verify", "--class", "mad52_d4", "--count", "3", "--seed", "4", "--corrupt-instance", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let r = json(&out);
    let cands = r["falsification_candidates"].as_array().unwrap();
    assert_eq!(cands.len(), 1);
    assert_eq!(cands[0]["index"].as_u64(), Some(1));
}

#[test]
fn verify_is_deterministic_across_jobs() {
    let run = |jobs: &str| {
        let out = injcolor(&["verify", "--class", "mad4219_d3", "--count", "12", "--seed", "9", "--jobs", jobs]);
        let mut v = json(&out);
        strip_timings(&mut v);
        v.as_object_mut().unwrap().remove("command");
        v
    };
    assert_eq!(run("1"), run("3"));
}

#[test]
fn mad_below_must_tighten_the_class() {
    let out = injcolor(&["verify", "--class", "mad94_d4", "--count", "2", "--mad-below", "5/2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = injcolor(&["verify", "--class", "mad94_d4", "--count", "4", "--mad-below", "42/19"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["mad_below"].as_str(), Some("42/19"));
}

#[test]
fn generate_writes_loadable_files() {
    let dir = tempfile::tempdir().unwrap();
    let pet = write(dir.path(), "petersen.edges", &petersen().to_edge_list());
    let out_path = dir.path().join("p1.edges").display().to_string();
    let out = injcolor(&["generate", "class2", &pet, "--out", &out_path]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&injcolor(&["analyze", &out_path]));
    assert_eq!((r["n"].as_u64(), r["girth"].as_u64()), (Some(25), Some(10)));

    let c6 = write(dir.path(), "c6.edges", &cycle(6).to_edge_list());
    assert_eq!(injcolor(&["generate", "class2", &c6, "--out", &out_path]).status.code(), Some(2));

    let planar = dir.path().join("g13.edges").display().to_string();
    let out = injcolor(&["generate", "random-planar", "--girth", "13", "--seed", "3", "--size", "50", "--out", &planar]);
    assert_eq!(out.status.code(), Some(0));
    let rot = dir.path().join("g13.rot").display().to_string();
    let out = injcolor(&["audit", &planar, "--embedding", &rot, "--class", "planar_g13"]);
    assert_eq!(out.status.code(), Some(0));

    let g = injcolor::parse_graph(&std::fs::read_to_string(&planar).unwrap()).unwrap();
    let (u, v) = g.edges().next().unwrap();
    let sub = dir.path().join("g13x.edges").display().to_string();
    let (u, v) = (u.to_string(), v.to_string());
    let out = injcolor(&["generate", "insert-vertex", &planar, "--embedding", &rot, "--u", &u, "--v", &v, "--out", &sub]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&injcolor(&["analyze", &sub, "--embedding", &dir.path().join("g13x.rot").display().to_string()]));
    assert_eq!(r["n"].as_u64(), Some(g.n() as u64 + 1));
    assert!(r["classes"].as_array().unwrap().contains(&Value::from("PLANAR_G13")));

    let corpus = dir.path().join("corpus");
    let out = injcolor(&["generate", "corpus", "--class", "planar_g9", "--count", "3", "--out", corpus.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let back = injcolor::factory::Corpus::read_manifest(&corpus.join("manifest.tsv")).unwrap();
    assert_eq!(back.len(), 3);
    let generated = injcolor::factory::Corpus::generate(injcolor::reduction::TheoremClass::PlanarG9, 0, 3, 30).unwrap();
    assert_eq!(back[0].0, generated.instances[0]);
}
