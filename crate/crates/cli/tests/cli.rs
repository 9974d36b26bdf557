use std::path::PathBuf;
use std::process::Command;

use lwc_cli::{parse_grid, run, write_atomic, Outcome, EXIT_CHECK_FAILED, EXIT_IO, EXIT_PARSE, EXIT_USAGE};

fn lwc(args: &[&str]) -> Outcome {
    run(std::iter::once("lwc").chain(args.iter().copied()))
}

fn ascon_kat() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../ciphers/kat/ascon-128/LWC_AEAD_KAT_128_128.txt")
}

#[test]
fn expr_prints_the_row() {
    let out = lwc(&["expr", "gift-cofb"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "ℓ_A + ℓ_M\n");
    assert_eq!(lwc(&["expr", "ascon"]).stdout, "l_A·b + l_P·b\n");
}

#[test]
fn expr_all_is_a_ten_row_registry() {
    let out = lwc(&["expr", "--all", "--format", "json"]);
    assert_eq!(out.code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let rows = doc.as_array().unwrap();
    assert_eq!(rows.len(), 10);
    for r in rows {
        for key in ["algorithm", "variant", "expression_text", "parameters"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn plan_for_empty_ad() {
    let out = lwc(&["plan", "ascon", "--ad", "0", "--msg", "8"]);
    assert_eq!(out.code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["phases"]["ad"], 0);
    assert_eq!(doc["phases"]["msg"], 1);
    assert_eq!(doc["len_A"], 0);
    assert_eq!(doc["len_M"], 8);
}

#[test]
fn kat_file_passes() {
    let out = lwc(&["kat", "ascon", "--file", ascon_kat().to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout.lines().next(), Some("1089/1089 passed"));
}

#[test]
fn tampered_kat_fails_the_check() {
    let text = std::fs::read_to_string(ascon_kat()).unwrap();
    let tampered = text.replacen("CT = E355159F292911F794CB1432A0103A8A", "CT = E355159F292911F794CB1432A0103A8B", 1);
    assert_ne!(text, tampered);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("kat.txt");
    std::fs::write(&path, tampered).unwrap();
    let out = lwc(&["kat", "ascon", "--file", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_CHECK_FAILED);
    assert!(out.stdout.starts_with("1088/1089 passed"), "{}", out.stdout);
}

#[test]
fn kat_error_codes() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("absent.txt");
    assert_eq!(lwc(&["kat", "ascon", "--file", missing.to_str().unwrap()]).code, EXIT_IO);

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "Count = 1\nKey = zz\n").unwrap();
    let out = lwc(&["kat", "ascon", "--file", bad.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_PARSE, "{}", out.stderr);
}

#[test]
fn unknown_algorithm_lists_valid_names() {
    let out = lwc(&["expr", "aes-gcm"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("ascon"), "{}", out.stderr);
    assert!(out.stdout.is_empty());
    assert_eq!(lwc(&["plan", "nope", "--ad", "0", "--msg", "0"]).code, EXIT_USAGE);
    assert_eq!(lwc(&["frobnicate"]).code, EXIT_USAGE);
}

#[test]
fn bad_grids_are_usage_errors() {
    assert!(parse_grid("1,x", 16).is_err());
    assert!(parse_grid("-1", 16).is_err());
    assert!(parse_grid(&format!("{}", lwc_cli::MAX_GRID_LEN + 1), 16).is_err());
    assert_eq!(parse_grid("0, 8,16", 8).unwrap(), vec![0, 8, 16]);
    assert_eq!(parse_grid("aligned", 8).unwrap(), vec![8, 16, 32, 64, 512]);
    assert_eq!(lwc(&["bench", "ascon", "--grid", "0,abc"]).code, EXIT_USAGE);
    // One value per dimension runs but cannot be fitted.
    let single = lwc(&["bench", "ascon", "--grid", "8"]);
    let doc: serde_json::Value = serde_json::from_str(&single.stdout).unwrap();
    assert!(doc["fit_error"].as_str().unwrap().contains("widen the grid"));
}

#[test]
fn bench_counts_are_exact_and_deterministic() {
    let a = lwc(&["bench", "photon-beetle", "--grid", "0,1,32,33"]);
    let b = lwc(&["bench", "photon-beetle", "--grid", "0,1,32,33"]);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a, b);
    let doc: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(doc["samples"].as_array().unwrap().len(), 16);
}

#[test]
fn validate_one_is_deterministic() {
    let a = lwc(&["validate", "ascon"]);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a, lwc(&["validate", "ascon"]));
    let doc: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(doc[0]["validated"], true);
    assert_eq!(lwc(&["validate"]).code, EXIT_USAGE);
    assert_eq!(lwc(&["validate", "ascon", "--all"]).code, EXIT_USAGE);
}

#[test]
fn report_is_written_whole() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    std::fs::write(&path, "stale").unwrap();
    let out = lwc(&["report", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.code == 0 || out.code == EXIT_CHECK_FAILED, "{}", out.stderr);
    let text = std::fs::read_to_string(&path).unwrap();
    let mut r = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(r.records().count(), 10);
    // No temporary files left beside the report.
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);

    let unwritable = dir.path().join("no-such-dir").join("r.md");
    assert_eq!(lwc(&["report", "--format", "md", "--out", unwritable.to_str().unwrap()]).code, EXIT_IO);
}

#[test]
fn atomic_write_replaces() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f");
    write_atomic(&path, "one").unwrap();
    write_atomic(&path, "two").unwrap();
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "two");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_lwc");
    let ok = Command::new(bin).args(["expr", "romulus"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(!ok.stdout.is_empty());
    let bad = Command::new(bin).args(["expr", "rc4"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    assert!(!bad.stderr.is_empty());
}
