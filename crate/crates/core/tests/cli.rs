use std::path::PathBuf;
use std::process::Command;

fn doc(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/docs").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_equivar")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut v = args.to_vec();
    v.push("--json");
    let (code, out) = run(&v);
    (code, serde_json::from_str(&out).unwrap())
}

fn statuses(v: &serde_json::Value) -> Vec<String> {
    v["checks"].as_array().unwrap().iter().map(|c| c["status"].as_str().unwrap().to_string()).collect()
}

#[test]
fn cohomology_of_cyclic_four() {
    let (code, v) = json(&["cohomology", "--group", "cyclic:4", "--coeff", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["tables"]["invariant_factors"], serde_json::json!([2]));
    assert_eq!(v["command"], "cohomology");
}

#[test]
fn cohomology_class_of_a_cocycle() {
    let (code, v) = json(&["cohomology", "--group", "cyclic:2", "--units", "5", "--cocycle", "0,0,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["tables"]["class"], serde_json::json!([1]));
    // r² = −1 is a square in F_5
    let (_, v) = json(&["cohomology", "--group", "cyclic:2", "--units", "5", "--cocycle", "0,0,0,2"]);
    assert_eq!(v["tables"]["class"], serde_json::json!([0]));
    let (code, _) = run(&["cohomology", "--group", "cyclic:2", "--units", "5", "--cocycle", "0,0,1,0"]);
    assert_eq!(code, 1);
}

#[test]
fn check_action_exit_codes() {
    assert_eq!(run(&["check-action", &doc("trivial_z2.toml")]).0, 0);
    let (code, out) = run(&["check-action", &doc("non_cocycle_grid.toml")]);
    assert_eq!(code, 1);
    assert!(out.contains("associativity square fails"), "{out}");
    assert_eq!(run(&["check-action", "/nonexistent.toml"]).0, 2);
    assert_eq!(run(&["check-action", &doc("trivial_z2.toml"), "--action", "missing"]).0, 2);
}

#[test]
fn descend_sod_bundled() {
    let (code, v) = json(&["descend-sod", "a2", "5"]);
    assert_eq!(code, 0);
    assert!(statuses(&v).iter().all(|s| s == "ok"));
    assert_eq!(v["tables"]["indecomposable_classes"], 6);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    for want in ["orthogonality", "triangle identities", "B^G = left perpendicular of A^G", "A^G = right perpendicular of B^G"] {
        assert!(names.contains(&want), "{names:?}");
    }
    assert_eq!(run(&["descend-sod", &doc("a2_sign_sod.toml")]).0, 0);
}

#[test]
fn mate_strictify_equivariantize() {
    let (code, v) = json(&["mate", &doc("mate_conjugation.toml")]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["tables"]["mate_side"], "left");
    let (code, v) = json(&["strictify", &doc("klein_twisted_f5.toml")]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["tables"]["cprime_objects"], 12);
    let (code, v) = json(&["equivariantize", &doc("trivial_z2.toml")]);
    assert_eq!(code, 0);
    assert_eq!(v["tables"]["classes"], 6);
}

#[test]
fn classify_twisted_inline() {
    let (code, v) = json(&["classify-twisted", "--group", "cyclic:3", "--p", "7", "--cocycle", "0,0,0,0,0,0,0,0,0", "--dim", "1"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["tables"]["classes_per_dim"], serde_json::json!([1, 3]));
}

#[test]
fn lax_document_reports_non_weak() {
    let (code, out) = run(&["validate", &doc("doubling_lax.toml")]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn validate_all_documents() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/docs");
    let mut paths: Vec<String> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path().display().to_string()).collect();
    paths.sort();
    paths.retain(|p| !p.ends_with("non_cocycle_grid.toml"));
    let args: Vec<&str> = std::iter::once("validate").chain(paths.iter().map(String::as_str)).collect();
    let (code, out) = run(&args);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["cohomology"]).0, 2);
    assert_eq!(run(&["descend-sod", "a2", "4"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}
