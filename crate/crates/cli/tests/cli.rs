use std::process::{Command, Output};

use entsplit::{parse_report, Analogue};

fn entsplit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_entsplit"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn states_catalogue() {
    let out = entsplit(&["states"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("star = 1/2(|000>+|100>+|101>+|111>)"));
    assert!(text.lines().any(|l| l.starts_with("ghz = ")));
    assert!(text.lines().any(|l| l.starts_with("w = ")));
    assert!(text.lines().count() >= 7);
}

#[test]
fn analyze_wwbar_table() {
    let out = entsplit(&["analyze", "wwbar", "--format", "table"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| l.contains("| |")).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.split(" | ").nth(2).unwrap().trim() == "0.5000"));
    assert!(rows.iter().all(|r| r.split(" | ").nth(4).unwrap().trim() == "2"));
    assert!(text.contains("analogue: HOPF3"));
}

#[test]
fn analyze_defaults_to_table() {
    let out = entsplit(&["analyze", "ghz"]);
    assert!(stdout(&out).contains("analogue: BORROMEAN"));
    assert!(stdout(&out).contains("consistency (possibilistic):"));
}

#[test]
fn analyze_star_json() {
    let out = entsplit(&["analyze", "star", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["classification"]["primary_analogue"], "CHAIN3");
    assert_eq!(value["classification"]["center"], "C");
    assert_eq!(
        value["classification"]["borromean_outcomes"],
        serde_json::json!([["A", 0], ["B", 1]])
    );
    let doc = parse_report(&text).unwrap();
    assert_eq!(doc.classification.unwrap().primary_analogue, Analogue::Chain3);
}

#[test]
fn json_output_is_deterministic() {
    let a = entsplit(&["analyze", "star", "--format", "json"]);
    let b = entsplit(&["analyze", "star", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn analyze_star_csv() {
    let text = stdout(&entsplit(&["analyze", "star", "--format", "csv"]));
    assert!(text.lines().any(|l| l == "A,1,0.75,2"));
    assert_eq!(text.lines().next(), Some("qubit,outcome,probability,rank"));
}

#[test]
fn necessitarian_semantics_breaks_chain_consistency() {
    let text = stdout(&entsplit(&["analyze", "star", "--semantics", "necessitarian"]));
    assert!(text.contains("consistency (necessitarian):"));
    assert!(text.contains("CHAIN3(center=C): mismatch at cut A, B"));
    // The label itself does not depend on the semantics.
    assert!(text.contains("analogue: CHAIN3"));
}

#[test]
fn analyze_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("star.json");
    std::fs::write(
        &path,
        r#"{"num_qubits": 3, "amplitudes": [[1,0],[0,0],[0,0],[0,0],[1,0],[1,0],[0,0],[1,0]]}"#,
    )
    .unwrap();
    let out = entsplit(&["analyze", "--file", path.to_str().unwrap(), "--format", "csv"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().any(|l| l == "B,0,0.75,2"));
}

#[test]
fn missing_file_exits_1_and_names_path() {
    let out = entsplit(&["analyze", "--file", "missing.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.json"));
}

#[test]
fn schema_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("short.json");
    std::fs::write(&path, r#"{"num_qubits": 2, "amplitudes": [[1,0],[0,0],[0,0]]}"#).unwrap();
    let out = entsplit(&["analyze", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("schema"));
}

#[test]
fn measure_examples() {
    let text = stdout(&entsplit(&["measure", "star", "--qubit", "2", "--outcome", "0"]));
    assert!(text.contains("probability: 0.5\n"));
    assert!(text.contains("post_state: 0.707107|00> + 0.707107|10> (AB)"));
    let text = stdout(&entsplit(&["measure", "ghz", "--qubit", "0", "--outcome", "1"]));
    assert!(text.contains("probability: 0.5\n"));
    assert!(text.contains("post_state: 1.000000|11> (BC)"));
}

#[test]
fn measure_json() {
    let out = entsplit(&["measure", "star", "--qubit", "0", "--outcome", "1", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["probability"], 0.75);
    assert_eq!(value["post_state"]["num_qubits"], 2);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["measure", "wwbar", "--qubit", "5", "--outcome", "0"][..],
        &["measure", "wwbar", "--qubit", "0", "--outcome", "2"][..],
        &["schmidt", "ghz", "--left", "0", "--right", "1"][..],
        &["schmidt", "ghz", "--left", "0", "--right", "x"][..],
        &["analyze", "nosuchstate"][..],
        &["analyze"][..],
        &["analyze", "star", "--format", "xml"][..],
        &["frobnicate"][..],
    ] {
        let out = entsplit(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn schmidt_examples() {
    let text = stdout(&entsplit(&["schmidt", "ghz", "--left", "0", "--right", "1,2"]));
    assert!(text.contains("rank: 2\n"));
    assert!(text.contains("gram_eigenvalues: 0.5, 0.5\n"));

    // Star, A|BC: eigenvalues (2 +- sqrt 2) / 4 from the hand-built 2x4 matrix.
    let out = entsplit(&["schmidt", "star", "--left", "0", "--right", "1,2", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["rank"], 2);
    let s2 = 2f64.sqrt();
    let gram: Vec<f64> = serde_json::from_value(value["gram_eigenvalues"].clone()).unwrap();
    assert!((gram[0] - (2.0 + s2) / 4.0).abs() < 1e-12);
    assert!((gram[1] - (2.0 - s2) / 4.0).abs() < 1e-12);

    let text = stdout(&entsplit(&["schmidt", "bell", "--left", "0", "--right", "1"]));
    assert!(text.contains("maximally_entangled: true"));

    // Letter labels work too.
    let text = stdout(&entsplit(&["schmidt", "star", "--left", "C", "--right", "A,B"]));
    assert!(text.contains("partition: C | AB"));
}
