use std::process::{Command, Output};

use serde_json::Value;

fn chebknot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chebknot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = chebknot(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn trefoil_diagram() {
    let text = stdout(&["diagram", "3", "4", "5"]);
    assert!(text.contains("C(1, 1, 1)"), "{text}");
    assert!(text.contains("knot       m3_1"), "{text}");
    assert!(text.contains("alternating yes"));
}

#[test]
fn phased_six_one() {
    let text = stdout(&["diagram", "3", "8", "10", "--phi", "0.01"]);
    assert!(text.contains("C(-1, -1, -1, -1, 1, 1, 1)  fraction 9/-5"), "{text}");
    assert!(text.contains("knot       6_1"), "{text}");
    assert!(text.contains("certified"));
}

#[test]
fn trivial_harmonic_knot() {
    let text = stdout(&["diagram", "3", "8", "11"]);
    assert!(text.contains("0_1 (unknot)"), "{text}");
    assert!(text.contains("undefined"), "{text}");
}

#[test]
fn diagram_json_is_consistent() {
    let v = json(&["diagram", "5", "6", "13", "--format", "json"]);
    assert_eq!(v["crossings"], 10);
    assert_eq!(v["pd"].as_array().unwrap().len(), 10);
    assert_eq!(v["gauss"].as_array().unwrap().len(), 20);
    assert_eq!(v["identification"]["label"], "10_159");
    assert_eq!(v["exact"], true);
    assert!(v.get("conway").is_none());

    let phased = json(&["diagram", "5", "6", "33", "--phi", "-0.0148", "--format", "json"]);
    assert_eq!(phased["spec"]["phi"], "-0.0148");
    assert_eq!(phased["identification"]["determinant"], 37);
    assert!(phased["min_margin"].as_f64().unwrap() > 1e-3);
}

#[test]
fn codes_round_trip_through_identify() {
    let v = json(&["diagram", "4", "7", "9", "--format", "json"]);
    let code = v["pd"].to_string();
    let id = json(&["identify", "--pd", &code, "--format", "json"]);
    assert_eq!(id["identification"]["label"], "7_5");
    let pd = stdout(&["diagram", "4", "7", "9", "--format", "pd"]);
    assert_eq!(pd.matches("X[").count(), 9);
    let gauss = stdout(&["diagram", "4", "7", "9", "--format", "gauss"]);
    assert_eq!(gauss.split_whitespace().count(), 18);
}

#[test]
fn classes_of_five_six() {
    let v = json(&["classes", "5", "6", "--format", "json"]);
    assert_eq!(v["heights"].as_array().unwrap().len(), 8);
    let reps: Vec<u64> = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["representative"].as_u64().unwrap())
        .collect();
    assert_eq!(reps, [1, 7, 13, 19]);
    let knots: Vec<&str> = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["knot"].as_str().unwrap())
        .collect();
    assert_eq!(knots, ["0_1", "m5_2", "10_159", "10_116"]);
}

#[test]
fn table_diff() {
    let rows = json(&["table", "--format", "json"]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 22);
    assert!(rows.iter().all(|r| r["matches_up_to_mirror"] == true));
    let off: Vec<String> = rows
        .iter()
        .filter(|r| r["matches"] == false)
        .map(|r| format!("H({},{},{})", r["a"], r["b"], r["c"]))
        .collect();
    assert_eq!(off, ["H(5,6,7)", "H(5,6,19)"]);
    let text = stdout(&["table"]);
    assert!(
        text.contains("20/22 rows match exactly, 22/22 up to mirror image"),
        "{text}"
    );
}

#[test]
fn search_realizes_conway_signs() {
    let v = json(&["search", "3", "8", "--signs", "----+++", "--format", "json"]);
    assert_eq!(v["knot"], "6_1");
    let (c, phi) = (v["c"].to_string(), v["phi"].as_str().unwrap().to_string());
    let again = stdout(&["diagram", "3", "8", &c, "--phi", &phi]);
    assert!(again.contains("knot       6_1"), "{again}");
    assert!(again.contains(&format!("z diff     {}", v["zdiff_signs"].as_str().unwrap())));
}

#[test]
fn search_reports_budget_exhaustion() {
    let out = chebknot(&[
        "--error-json",
        "search",
        "3",
        "4",
        "--signs",
        "+++",
        "--kind",
        "zdiff",
        "--c-max",
        "1",
        "--phi-max",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "not_found");
}

#[test]
fn errors_are_machine_readable() {
    let out = chebknot(&["diagram", "3", "6", "5", "--error-json"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "not_pairwise_coprime");

    let out = chebknot(&["classes", "5", "6", "--format", "pd", "--error-json"]);
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "invalid_input");

    let out = chebknot(&["search", "3", "8", "--signs", "++", "--error-json"]);
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "length_mismatch");

    let out = chebknot(&["diagram", "3", "4", "5", "--phi", "0.1x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn svg_file_and_stdout_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h345.svg");
    let text = stdout(&["diagram", "3", "4", "5", "--svg", path.to_str().unwrap()]);
    assert!(text.contains("m3_1"));
    let file = std::fs::read_to_string(&path).unwrap();
    assert_eq!(file, stdout(&["diagram", "3", "4", "5", "--format", "svg"]));
    assert_eq!(file.matches("<path").count(), 4);
}

#[test]
fn braid_and_billiard() {
    let text = stdout(&["braid", "3", "8"]);
    assert!(text.contains("(s_even s_odd)^3 s_even"), "{text}");
    let v = json(&["billiard", "3", "5", "--samples", "8", "--format", "json"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 9);
    for r in rows {
        let (x, y) = (r["X"].as_f64().unwrap(), r["Y"].as_f64().unwrap());
        assert!((0.0..=5.0).contains(&x) && (0.0..=3.0).contains(&y));
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["diagram", "5", "6", "33", "--phi", "0.0148", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}
