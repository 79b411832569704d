use std::process::{Command, Output};

use pretzel_core::json;

fn pretzel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pretzel")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_p2_json_has_twelve_terms() {
    let o = pretzel(&["compute", "--form", "P", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let p = json::poly_from_str(stdout(&o).trim()).unwrap();
    assert_eq!(p.len(), 12);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v[0], serde_json::json!({"l": 0, "m": 0, "num": "-1", "den": "1"}));
}

#[test]
fn compute_text_uses_caret_exponents() {
    let o = pretzel(&["compute", "--form", "P", "--n", "2"]);
    assert!(stdout(&o).starts_with("-1 + L*M^8 - 2*L*M^10 + L*M^12 + 2*L^2*M^20"));
}

#[test]
fn compute_torus_member_is_an_error() {
    let o = pretzel(&["compute", "--form", "A", "--n", "-1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("torus knot (5_1): A-form not defined by the family tables"), "{err}");
}

#[test]
fn compute_r0_is_a_rational_function() {
    let o = pretzel(&["compute", "--form", "R", "--n", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let f = json::ratfn_from_str(stdout(&o).trim()).unwrap();
    assert!(!f.has_unit_den());
    let text = stdout(&pretzel(&["compute", "--form", "R", "--n", "0"]));
    assert!(text.contains(") / ("), "{text}");
}

#[test]
fn compute_json_round_trips_for_members() {
    for (form, n) in [("A", "5"), ("A", "-4"), ("Q", "-3"), ("P", "6")] {
        let o = pretzel(&["compute", "--form", form, "--n", n, "--format", "json"]);
        let s = stdout(&o);
        let p = json::poly_from_str(s.trim()).unwrap();
        assert_eq!(json::poly_to_string(&p), s.trim());
    }
}

#[test]
fn polygon_p4_matches() {
    let o = pretzel(&["polygon", "--form", "P", "--n", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["equal"], true);
    assert_eq!(v["computed"]["coords"], "(L,M)");
    assert_eq!(v["computed"]["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(v["computed"], v["predicted"]);
}

#[test]
fn polygon_a_minus_2() {
    let o = pretzel(&["polygon", "--form", "A", "--n", "-2", "--generic-n2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["equal"], true);
    let o = pretzel(&["polygon", "--form", "A", "--n", "-2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["equal"], false);
    assert_eq!(v["translation"], serde_json::json!([0, -40]));
}

#[test]
fn polygon_p1_is_an_error() {
    let o = pretzel(&["polygon", "--form", "P", "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_all_small_range_passes() {
    let o = pretzel(&["verify", "--suite", "all", "--range", "2..10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(" 0 failed"));
}

#[test]
fn verify_duality_four_passes() {
    let o = pretzel(&["verify", "--suite", "duality", "--range", "2..5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("[PASS]").count(), 4);
}

#[test]
fn verify_nongeom_skips_non_multiples() {
    let o = pretzel(&["verify", "--suite", "nongeom", "--range", "3..9", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let checks = v["reports"][0]["checks"].as_array().unwrap();
    let passed: Vec<i64> = checks
        .iter()
        .filter(|c| c["status"] == "pass")
        .map(|c| c["n"].as_i64().unwrap())
        .collect();
    assert_eq!(passed, vec![3, 6, 9]);
    assert_eq!(v["skipped"], 4);
}

#[test]
fn verify_backward_range() {
    let o = pretzel(&["verify", "--suite", "backward,recursion", "--range", "-4..0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--suite", "bogus", "--range", "2..3"][..],
        &["verify", "--range", "5..2"],
        &["compute", "--form", "P", "--n", "-3"],
        &["compute", "--form", "X", "--n", "2"],
        &["tables", "--name", "c9"],
        &["frobnicate"],
    ] {
        assert_eq!(pretzel(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn exit_codes_are_stable() {
    let a = pretzel(&["verify", "--suite", "substcoeff", "--range", "0..0"]);
    let b = pretzel(&["verify", "--suite", "substcoeff", "--range", "0..0"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn tables_dump() {
    let o = pretzel(&["tables", "--name", "c4"]);
    assert_eq!(stdout(&o).trim(), "c4 = M^4");
    let o = pretzel(&["tables", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert_eq!(names.len(), 20);
    assert!(names.contains(&"gamma2") && names.contains(&"Q-3") && names.contains(&"b"));
}
