use std::path::Path;
use std::process::Command;

use serde_json::{json, Value};

fn hopfgal(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfgal")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn report(args: &[&str]) -> (i32, Value) {
    let (code, stdout, stderr) = hopfgal(args);
    let v = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{stderr}"));
    (code, v)
}

fn schema() -> Value {
    let (code, stdout, _) = hopfgal(&["report-schema"]);
    assert_eq!(code, 0);
    serde_json::from_str(&stdout).unwrap()
}

fn assert_valid(r: &Value) {
    let validator = jsonschema::validator_for(&schema()).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(r).map(|e| format!("{e} at {}", e.instance_path())).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

fn write_json(dir: &Path, name: &str, v: &Value) -> String {
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn verify_circle_hopf() {
    let (code, r) = report(&["verify", "--builder", "circle_hopf"]);
    assert_eq!(code, 0);
    assert_eq!(r["ok"], json!(true));
    assert_valid(&r);
}

#[test]
fn example_circle_reduced_path() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("figure.dot");
    let (code, r) = report(&["example-circle", "--dot", dot.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["data"]["b_dim"], json!(16));
    let reduced = &r["data"]["reduced"];
    assert_eq!(reduced["bijective"], json!(true));
    assert_ne!(reduced["det_plus"], json!("0"));
    assert_ne!(reduced["det_minus"], json!("0"));
    assert_eq!(r["data"]["lattice"]["covers"].as_array().unwrap().len(), 11);
    assert!(std::fs::read_to_string(dot).unwrap().starts_with("digraph"));
    assert_valid(&r);
}

#[test]
fn takeuchi_s3_round_trips() {
    let (code, r) = report(&["takeuchi", "--builder", "group_algebra", "--group", "S3"]);
    assert_eq!(code, 0);
    assert_eq!(r["data"]["round_trips"], json!(6));
    assert!(r["data"]["quot_round_trips"].as_array().unwrap().iter().all(|x| *x == json!(true)));
    assert_valid(&r);
}

#[test]
fn builder_reference_as_json() {
    let (code, r) = report(&["takeuchi", "--builder", r#"{"builder":"group_algebra","group":"S3"}"#]);
    assert_eq!(code, 0);
    assert_eq!(r["data"]["round_trips"], json!(6));
}

#[test]
fn schema_is_versioned_and_describes_verdicts() {
    let s = schema();
    assert_eq!(s["properties"]["version"]["const"], json!(hopf_galois::VERSION));
    let text = s.to_string();
    for key in ["\"rank\"", "\"bijective\"", "\"closed\""] {
        assert!(text.contains(key), "{key}");
    }
    let validator = jsonschema::validator_for(&s).expect("schema compiles");
    let round_trip: Value = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
    assert_eq!(round_trip, s);
    assert!(!validator.is_valid(&json!({"schema": "other"})));
}

#[test]
fn reports_validate_against_the_schema() {
    let gf4 = r#"{"builder":"finite_field_ext","p":2,"poly":[1,1,1]}"#;
    let runs: Vec<Vec<&str>> = vec![
        vec!["group-likes", "--builder", "circle_hopf", "--field", "Qi"],
        vec!["connection", "--builder", "circle_hopf"],
        vec!["can", "--target", "full", "--builder", "z2_quadratic"],
        vec!["can", "--target", "Q", "--builder", "circle_hopf"],
        vec!["can", "--target", "S", "--builder", "group_algebra", "--group", "Z2"],
        vec!["can", "--target", "coring", "--builder", gf4],
        vec!["can", "--target", "coext", "--builder", "group_algebra", "--group", "S3"],
        vec!["lattice", "--builder", "group_algebra", "--group", "D8"],
        vec!["closed", "--builder", "circle_hopf"],
        vec!["bridge", "--builder", gf4],
        vec!["can", "--target", "coring", "--builder", "paper_example"],
    ];
    for args in runs {
        let (code, r) = report(&args);
        assert_eq!(code, 0, "{args:?}");
        assert_valid(&r);
    }
}

#[test]
fn group_like_counts() {
    let (_, q) = report(&["group-likes", "--builder", "circle_hopf"]);
    let (_, qi) = report(&["group-likes", "--builder", "circle_hopf", "--field", "Qi"]);
    assert_eq!((q["data"]["count"].clone(), qi["data"]["count"].clone()), (json!(4), json!(8)));
}

#[test]
fn identical_inputs_give_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let (code, _, _) = hopfgal(&["closed", "--builder", "circle_hopf", "--out", p.to_str().unwrap()]);
        assert_eq!(code, 0);
    }
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn negative_certificate_exits_one_with_witness() {
    let (code, r) = report(&["can", "--target", "full", "--builder", r#"{"builder":"z2_quadratic","lambda":0}"#]);
    assert_eq!(code, 1);
    assert_eq!(r["ok"], json!(false));
    let cert = &r["certificates"][0];
    assert_eq!(cert["ok"], json!(false));
    assert_eq!(cert["witness"]["rank"], json!(3));
    assert_valid(&r);
}

#[test]
fn perturbed_structure_constant_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let mut z2 = json!({
        "kind": "hopf", "dim": 2, "field": "Q",
        "unit": [1, 0],
        "mult": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
        "comult": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]],
        "counit": [1, 1],
        "antipode": [[1, 0], [0, 1]]
    });
    let good = write_json(dir.path(), "z2.json", &z2);
    assert_eq!(hopfgal(&["verify", "--input", &good]).0, 0);
    z2["mult"][1][1] = json!([2, 0]);
    let bad = write_json(dir.path(), "bad.json", &z2);
    let (code, r) = report(&["verify", "--input", &bad]);
    assert_eq!(code, 1);
    let witness = r["certificates"][0]["witness"].as_array().unwrap();
    assert!(!witness.is_empty());
    assert!(witness[0]["witness"].is_array());
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(hopfgal(&["verify", "--builder", "nope"]).0, 2);
    assert_eq!(hopfgal(&["verify"]).0, 2);
    assert_eq!(hopfgal(&["verify", "--input", "/nonexistent/x.json"]).0, 2);
    assert_eq!(hopfgal(&["verify", "--builder", "circle_hopf", "--field", "Fp:4"]).0, 2);
    assert_eq!(hopfgal(&["example-circle", "--field", "Q"]).0, 2);
    assert_eq!(hopfgal(&["can", "--target", "coring", "--builder", "circle_hopf"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("broken.json");
    std::fs::write(&p, "{not json").unwrap();
    assert_eq!(hopfgal(&["verify", "--input", p.to_str().unwrap()]).0, 2);
}

#[test]
fn d8_lattice_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("d8.dot");
    let (code, r) = report(&["lattice", "--builder", "group_algebra", "--group", "D8", "--dot", dot.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["data"]["lattice"]["elements"].as_array().unwrap().len(), 10);
    let text = std::fs::read_to_string(dot).unwrap();
    assert_eq!(text.matches("digraph").count(), 2);
}

#[test]
fn cap_flag_limits_work() {
    let (code, _, stderr) = hopfgal(&["can", "--target", "full", "--builder", "group_algebra", "--group", "D8", "--cap", "8"]);
    assert_eq!(code, 2, "{stderr}");
    assert!(stderr.contains("cap"));
}
