//! The binary end to end: output shape and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-partial")).args(args).env_remove("HOPF_PARTIAL_DATA").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn sweedler_has_two_families() {
    let o = run(&["partial-actions", "Sweedler"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("2 families"), "{text}");
    assert!(text.contains("{1}    | 1 | 0 | alpha | alpha"), "{text}");
}

#[test]
fn h6_has_nothing_at_trivial_subgroup() {
    let o = run(&["partial-actions", "H6", "--subgroup", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "no partial action with initial condition {1}");
}

#[test]
fn a22_json_lists_five_families() {
    let o = run(&["partial-actions", "A22", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["families"].as_array().unwrap().len(), 5);
    // the embedded family round-trips through its schema
    let fam: hopf_partial::polysolve::SolutionFamily = serde_json::from_value(v["families"][0]["family"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&fam).unwrap(), v["families"][0]["family"]);
}

#[test]
fn columns_follow_table_order() {
    let o = run(&["partial-actions", "H13", "--subgroup", "g,h"]);
    let header = stdout(&o).lines().next().unwrap().to_string();
    assert!(header.ends_with("x | gx | hx | ghx | y | gy | hy | ghy | xy | gxy | hxy | ghxy"), "{header}");
}

#[test]
fn verify_tables_on_dim8() {
    for name in ["A2", "A4''", "A22"] {
        let o = run(&["verify-tables", name]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
    }
}

#[test]
fn corrupted_table_is_a_mismatch() {
    let o = Command::new(env!("CARGO_BIN_EXE_hopf-partial"))
        .args(["verify-tables", "A2"])
        .env("HOPF_PARTIAL_DATA", fixture("corrupt"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("MISMATCH"));
}

#[test]
fn smash_sweedler_alpha_one() {
    let o = run(&["smash", "Sweedler", "--row", "N=1", "--set", "alpha=1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("dim H_λ: 2"), "{text}");
    assert!(text.contains("carac: false"), "{text}");
}

#[test]
fn smash_taft_reaches_sweedler() {
    let o = run(&["smash", "Taft", "--n", "2", "--k", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 4);
    assert_eq!(v["target"]["algebra"], "Sweedler");
    assert_eq!(v["target"]["onto_h_lambda"], true);
}

#[test]
fn smash_h13_reaches_a2() {
    let o = run(&["smash", "H13", "--row", "N=1,g", "--set", "alpha=1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("target: A2 (g↦g, x↦x, y↦y) verified"));
}

#[test]
fn axioms_for_catalog_and_presentations() {
    assert_eq!(run(&["check-axioms", "H6"]).status.code(), Some(0));
    let good = fixture("sweedler.json");
    assert_eq!(run(&["check-axioms", "--presentation", good.to_str().unwrap()]).status.code(), Some(0));
    let bad = fixture("broken_sweedler.json");
    let o = run(&["check-axioms", "--presentation", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn lambda_hopf_report_passes() {
    let o = run(&["lambda-hopf-report"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["partial-actions", "H99"]).status.code(), Some(2));
    assert_eq!(run(&["partial-actions", "A2", "--subgroup", "g,,"]).status.code(), Some(2));
    assert_eq!(run(&["partial-actions", "A2", "--subgroup", "q"]).status.code(), Some(2));
    assert_eq!(run(&["smash", "Taft", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn list_algebras_covers_catalog() {
    let o = run(&["list-algebras", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 66);
}
