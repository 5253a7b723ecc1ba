use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use signed_corona::io::{parse_graph, SpectrumDocument};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_signed-corona")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn balance_of_balanced_factors_with_unbalanced_corona() {
    let v = json(&run(&["balance", &data("balanced_path.sg"), &data("negative_edge.sg")]));
    assert_eq!(v["corona"], "unbalanced");
    assert_eq!(v["first_balanced"], true);
    assert_eq!(v["second_balanced"], true);
    assert_eq!(v["criterion"], v["oracle"]);
}

#[test]
fn spectrum_document_round_trips() {
    for method in ["numeric", "theorem", "proposition"] {
        let out = run(&["spectrum", "--matrix", "a", "--method", method, &data("triangle.sg"), &data("edge.sg")]);
        assert_eq!(out.status.code(), Some(0));
        let doc = SpectrumDocument::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
        assert_eq!(doc.order, 9);
        assert_eq!(doc.inputs.len(), 2);
        assert!(doc.discrepancies.is_empty());
        let total: usize = doc.eigenvalues.iter().map(|e| e.multiplicity).sum();
        assert_eq!(total, 9);
    }
}

#[test]
fn corona_output_parses_as_graph_file() {
    let dir = std::env::temp_dir().join(format!("signed-corona-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.sg");
    let out = run(&["corona", &data("triangle.sg"), &data("edge.sg"), "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let g = parse_graph(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!((g.order(), g.edge_count()), (9, 18));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn stats_formula_matches_direct() {
    let v = json(&run(&["stats", "--triads", &data("square.sg"), &data("star.sg")]));
    assert_eq!(v["edges"]["formula"], v["edges"]["direct"]);
    assert_eq!(v["triads"]["formula"], v["triads"]["direct"]);
}

#[test]
fn coronal_and_cospectral() {
    let v = json(&run(&["coronal", "--matrix", "l", &data("star.sg")]));
    assert_eq!(v["coronal"], "(4x - 4) / (x^2 - 4x)");
    assert_eq!(v["closed_form_agrees"], true);
    let v = json(&run(&["cospectral", "--matrix", "a", &data("triangle.sg"), &data("triangle.sg")]));
    assert_eq!(v["cospectral"], true);
}

#[test]
fn verify_passes_and_is_seeded() {
    let a = json(&run(&["verify", "--trials", "4", "--seed", "3", "--max-n", "4"]));
    let b = json(&run(&["verify", "--trials", "4", "--seed", "3", "--max-n", "4"]));
    assert_eq!(a, b);
    assert_eq!(a["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let dir = std::env::temp_dir().join(format!("signed-corona-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.sg");
    std::fs::write(&bad, "3\n0 5 +\n").unwrap();
    let out = run(&["balance", bad.to_str().unwrap(), &data("edge.sg")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("index out of range, line 2"));
    assert_eq!(run(&["spectrum", "--matrix", "d", &data("edge.sg"), &data("edge.sg")]).status.code(), Some(2));
    assert_eq!(run(&["balance", &data("edge.sg"), "/nonexistent/x.sg"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--max-n", "0"]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).ok();
}
