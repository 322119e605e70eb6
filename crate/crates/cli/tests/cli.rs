use std::process::{Command, Output};

use octad_core::assets::{Assets, THOMAE_TABLE};
use serde_json::Value;

fn octad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octad"))
        .args(args)
        .env_remove("OCTAD_SEED")
        .env_remove("OCTAD_FORMAT")
        .env_remove("OCTAD_DEEP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_all_is_reproducible() {
    let a = octad(&["verify", "all", "--seed", "1", "--format", "json"]);
    let b = octad(&["verify", "all", "--seed", "1", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());

    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["config"]["seed"], 1);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["provenance"] == "paper" || c["provenance"] == "derived"));
    assert!(checks.iter().all(|c| c.get("runtime_ms").is_none()));
    let failing = checks.iter().filter(|c| c["status"] == "fail").count();
    assert_eq!(v["summary"]["fail"], failing);
    assert_eq!(a.status.code(), Some(if failing == 0 { 0 } else { 1 }));
}

#[test]
fn mutated_table_fails_with_row_diff() {
    let dir = tempfile::tempdir().unwrap();
    let text = Assets::embedded_text(THOMAE_TABLE).unwrap();
    let row = "-& W_{13}W_{16}W_{17}W_{24}W_{25}W_{28}W_{36}W_{37}W_{45}W_{48}W_{58}W_{67}";
    assert!(text.contains(row));
    std::fs::write(dir.path().join(THOMAE_TABLE), text.replacen(row, &row[1..], 1)).unwrap();

    let o = octad(&["verify", "thomae", "--assets", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let line = out.lines().find(|l| l.contains("generated images equal the printed table")).unwrap();
    assert!(line.starts_with("[FAIL]"), "{line}");
    assert!(line.contains("row (0,0,0,0,0,1): printed +W13W16"), "{line}");
    assert!(line.contains("computed -W13W16"), "{line}");
}

#[test]
fn unmutated_table_passes() {
    let o = octad(&["verify", "thomae"]);
    let out = stdout(&o);
    let line = out.lines().find(|l| l.contains("generated images equal the printed table")).unwrap();
    assert!(line.starts_with("[PASS]"), "{line}");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(octad(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(octad(&["verify"]).status.code(), Some(2));
    assert_eq!(octad(&["table", "nonsense"]).status.code(), Some(2));
    assert_eq!(octad(&["--prime", "12", "verify", "exactalg"]).status.code(), Some(2));
    assert_eq!(octad(&["--prime", "47", "verify", "exactalg"]).status.code(), Some(2));
    assert_eq!(octad(&["hilbert", "B", "--max", "5000"]).status.code(), Some(2));
    assert_eq!(octad(&["verify", "exactalg", "--assets", "/nonexistent/dir"]).status.code(), Some(2));
    assert_eq!(octad(&["--frobnicate"]).status.code(), Some(2));
}

#[test]
fn environment_overrides_flags_defaults() {
    let o = Command::new(env!("CARGO_BIN_EXE_octad"))
        .args(["verify", "exactalg"])
        .env("OCTAD_SEED", "7")
        .env("OCTAD_FORMAT", "json")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["seed"], 7);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["seed"] == 7));
}

#[test]
fn charspace_reports_the_counts() {
    let o = octad(&["verify", "charspace", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let actual = |name: &str| {
        v["checks"].as_array().unwrap().iter().find(|c| c["name"] == name).unwrap()["actual"].as_str().unwrap().to_string()
    };
    assert_eq!(actual("even and odd characteristics"), "36/28");
    assert_eq!(actual("maximal totally singular subspaces"), "30");
    assert_eq!(actual("stars"), "105");
    assert_eq!(actual("sextuplets"), "56");
    assert_eq!(actual("odd pairs with even sum"), "210");
    assert_eq!(actual("remaining evens of a star form an even coset"), "105");
    // The partition count disagrees with the printed 5, so the module fails.
    assert_eq!(actual("three-star partitions of those twelve odds"), "6");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn tables_render() {
    let thomae = stdout(&octad(&["table", "thomae"]));
    assert_eq!(thomae.lines().count(), 2 + 35);
    assert!(thomae.lines().nth(2).unwrap().contains("| - |"));

    let subspaces = stdout(&octad(&["table", "subspaces", "--format", "csv"]));
    assert_eq!(subspaces.lines().count(), 1 + 15);
    assert!(subspaces.lines().skip(1).all(|l| l.split(',').next().unwrap().split(' ').count() == 7));

    let sext: Value = serde_json::from_str(&stdout(&octad(&["table", "sextuplets", "--format", "json"]))).unwrap();
    assert_eq!(sext["rows"].as_array().unwrap().len(), 56);
}

#[test]
fn hilbert_and_dims() {
    let o = octad(&["hilbert", "config", "--max", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let series: Vec<&str> = v["rows"].as_array().unwrap().iter().map(|r| r["series"].as_str().unwrap()).collect();
    assert_eq!(series, ["1", "14", "91", "364", "1085"]);
    assert_eq!(v["all_agree"], true);

    let o = octad(&["hilbert", "A", "--max", "9", "--format", "csv"]);
    assert!(stdout(&o).lines().last().unwrap().starts_with("9,7534,"));

    let o = octad(&["dims", "--ring", "B", "--weights", "2,4,6,8"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("| 6 | 546 | 546 | 546 | 546 546 546 | true |"), "{out}");
    assert!(out.contains("only with --deep"));
}

#[test]
fn schottky_fit() {
    let o = octad(&["fit", "schottky", "--points", "5", "--radius", "12", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["points"], 5);
    assert!(v["relative_spread"].as_f64().unwrap() < 1e-6);
    assert!((v["mean"][0].as_f64().unwrap() - 8.0).abs() < 1e-6);
}
