use std::path::Path;
use std::process::{Command, Output};

use jordanlab::catalog;
use jordanlab::io;
use jordanlab::linalg::Field;
use jordanlab::maps::LinearMap;
use serde_json::Value;

fn jordanlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jordanlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn spaces_json_lists_all_dimensions() {
    let o = jordanlab(&["spaces", "--algebra", "catalog:T2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let dims: Vec<(String, u64)> = v["spaces"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| (s["kind"].as_str().unwrap().to_string(), s["dim"].as_u64().unwrap()))
        .collect();
    let expected = [("Cent", 1), ("JCent", 1), ("QJCent", 2), ("Der", 2), ("JDer", 2), ("QJDer", 3), ("GJDer", 4), ("FGDer", 3)];
    assert_eq!(dims, expected.map(|(k, d)| (k.to_string(), d)));
}

#[test]
fn spaces_with_bases_prints_maps() {
    let o = jordanlab(&["spaces", "--algebra", "catalog:T2", "--bases"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("e12 ↦"));
}

#[test]
fn centers_of_primer_algebra() {
    let o = jordanlab(&["centers", "--algebra", "catalog:primer", "--json", "--bases"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let dims: Vec<u64> = v["centers"].as_array().unwrap().iter().map(|c| c["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [3, 4, 5]);
    assert_eq!(v["centers"][0]["basis"], serde_json::json!(["1", "e13 + e24", "e14"]));
    assert_eq!(v["semiprime"], Value::Bool(false));
}

#[test]
fn prime_fields_leave_semiprimeness_undecided() {
    let o = jordanlab(&["centers", "--algebra", "catalog:M2", "--field", "prime:7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("undecided"));
}

#[test]
fn exported_algebra_loads_back() {
    let dir = tempfile::tempdir().unwrap();
    let o = jordanlab(&["export", "--algebra", "catalog:block-2-1", "--field", "prime:7"]);
    assert_eq!(o.status.code(), Some(0));
    let file = write(dir.path(), "block.json", &stdout(&o));
    let from_file = jordanlab(&["spaces", "--algebra", &file]);
    let from_catalog = jordanlab(&["spaces", "--algebra", "catalog:block-2-1", "--field", "prime:7"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(stdout(&from_file), stdout(&from_catalog));
    let mismatch = jordanlab(&["spaces", "--algebra", &file, "--field", "rational"]);
    assert_eq!(mismatch.status.code(), Some(2));
}

#[test]
fn invalid_documents_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = catalog::upper_triangular(2, Field::Rational).unwrap().algebra;
    let mut doc = io::AlgebraDocument::from_algebra(&t2);
    doc.table[0].k = 5;
    let file = write(dir.path(), "bad.json", &serde_json::to_string(&doc).unwrap());
    let o = jordanlab(&["spaces", "--algebra", &file]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("table[0].k"), "{}", stderr(&o));

    let file = write(dir.path(), "broken.json", "{\n  \"name\": \"x\",\n  \"dim\": \"three\"\n}\n");
    let o = jordanlab(&["spaces", "--algebra", &file]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let mut doc = io::AlgebraDocument::from_algebra(&t2);
    doc.unit = vec!["1".into(), "0".into(), "0".into()];
    let file = write(dir.path(), "nonunital.json", &serde_json::to_string(&doc).unwrap());
    let o = jordanlab(&["spaces", "--algebra", &file]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("fails validation"), "{}", stderr(&o));

    assert_eq!(jordanlab(&["spaces", "--algebra", "catalog:Q7"]).status.code(), Some(2));
    assert_eq!(jordanlab(&["spaces", "--algebra", "catalog:M2", "--field", "prime:2"]).status.code(), Some(2));
    assert_eq!(jordanlab(&["spaces", "--algebra", &dir.path().join("missing.json").to_string_lossy()]).status.code(), Some(2));
}

#[test]
fn dimension_limit_comes_from_the_environment() {
    let run = |limit: &str| {
        Command::new(env!("CARGO_BIN_EXE_jordanlab"))
            .args(["centers", "--algebra", "catalog:M3"])
            .env("JORDANLAB_MAX_DIM", limit)
            .output()
            .unwrap()
    };
    let o = run("4");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("JORDANLAB_MAX_DIM"));
    assert_eq!(run("9").status.code(), Some(0));
    assert_eq!(run("lots").status.code(), Some(2));
}

#[test]
fn classify_primer_example_is_obstructed() {
    let dir = tempfile::tempdir().unwrap();
    let p = catalog::primer_algebra(Field::Rational).unwrap().algebra;
    let (f, _) = catalog::primer_example_maps(&p);
    let file = write(dir.path(), "f.json", &io::map_to_json(&p, &f));
    let o = jordanlab(&["classify", "--algebra", "catalog:primer", "--map", &file, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "obstructed");
    assert_eq!(v["alpha"], "e23");
}

#[test]
fn classify_rejects_maps_outside_qjder() {
    let dir = tempfile::tempdir().unwrap();
    let m2 = catalog::matrix_algebra(2, Field::Rational).unwrap().algebra;
    let mut images = vec![m2.zero(); 4];
    images[0] = m2.element("e12");
    let f = LinearMap::from_images(Field::Rational, &images).unwrap();
    let file = write(dir.path(), "f.json", &io::map_to_json(&m2, &f));
    let o = jordanlab(&["classify", "--algebra", "catalog:M2", "--map", &file]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("not in QJDer") && out.contains("left =") && out.contains("right ="), "{out}");
    let o = jordanlab(&["decompose", "--algebra", "catalog:M2", "--map", &file]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not in GJDer"));
}

#[test]
fn decompose_quasi_centralizer() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = catalog::upper_triangular(2, Field::Rational).unwrap().algebra;
    let f = LinearMap::jordan_multiplication(&t2, &t2.element("e12"));
    let file = write(dir.path(), "f.json", &io::map_to_json(&t2, &f));
    let o = jordanlab(&["decompose", "--algebra", "catalog:T2", "--map", &file, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let read = |key: &str| {
        let doc = io::MapDocument { algebra: "T2".into(), matrix: serde_json::from_value(v[key].clone()).unwrap() };
        doc.to_map(&t2).unwrap()
    };
    assert_eq!(read("f1").add(&read("f2")), f);
    assert!(!read("f2").is_zero());
}

#[test]
fn map_for_another_algebra_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = catalog::upper_triangular(2, Field::Rational).unwrap().algebra;
    let file = write(dir.path(), "f.json", &io::map_to_json(&t2, &LinearMap::identity(Field::Rational, 3)));
    let o = jordanlab(&["classify", "--algebra", "catalog:T3", "--map", &file]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let first = jordanlab(&["verify", "--json"]);
    assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
    let second = jordanlab(&["verify", "--json"]);
    assert_eq!(first.stdout, second.stdout);
    let v: Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(v["passed"], Value::Bool(true));
    assert_eq!(v["checks"].as_array().unwrap().len(), jordanlab::verify::CHECKS.len());
}

#[test]
fn verify_single_checks_and_table_agree_with_json() {
    let table = stdout(&jordanlab(&["verify", "--check", "S3.4"]));
    assert!(table.contains("S3.4") && table.contains("pass") && table.contains("(3, 4, 5)"));
    let json: Value = serde_json::from_str(&stdout(&jordanlab(&["verify", "--check", "S3.4", "--json"]))).unwrap();
    for detail in json["checks"][0]["details"].as_array().unwrap() {
        assert!(table.contains(detail.as_str().unwrap()));
    }
    let o = jordanlab(&["verify", "--check", "Ex4", "--field", "prime:7"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_input_errors() {
    assert_eq!(jordanlab(&["verify", "--check", "T0.0"]).status.code(), Some(2));
    assert_eq!(jordanlab(&["verify", "--field", "prime:9"]).status.code(), Some(2));
    assert_eq!(jordanlab(&["verify", "--field", "reals"]).status.code(), Some(2));
    assert_eq!(jordanlab(&["bogus"]).status.code(), Some(2));
}

#[test]
fn catalog_and_check_listing() {
    let names = stdout(&jordanlab(&["catalog"]));
    assert!(names.lines().any(|l| l == "primer"));
    let checks = stdout(&jordanlab(&["verify", "--list"]));
    assert_eq!(checks.lines().count(), jordanlab::verify::CHECKS.len());
}
