use std::path::PathBuf;

use lwc_ciphers::{kat, Variant};

fn kat_path(v: Variant) -> Option<PathBuf> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("kat").join(v.slug());
    std::fs::read_dir(&dir)
        .ok()?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .find(|p| p.file_name().is_some_and(|n| n.to_string_lossy().starts_with("LWC_AEAD_KAT_")))
}

fn run(v: Variant) {
    let path = kat_path(v).unwrap_or_else(|| panic!("no KAT fixture for {v}"));
    let text = std::fs::read_to_string(&path).unwrap();
    let records = kat::parse(&text).unwrap();
    assert_eq!(records.len(), 1089, "{}", path.display());
    let summary = kat::run(v, &records);
    assert!(
        summary.all_passed(),
        "{v}: {}/{} passed; first failure: {:?}",
        summary.passed,
        summary.total,
        summary.failures.first()
    );
    // the writer reproduces the fixture byte for byte
    assert_eq!(kat::write(&records), text);
}

#[test]
fn ascon_128() {
    run(Variant::Ascon128);
}

#[test]
fn ascon_128a() {
    run(Variant::Ascon128a);
}

#[test]
fn isap_a_128a() {
    run(Variant::IsapA128a);
}

#[test]
fn isap_a_128() {
    run(Variant::IsapA128);
}

#[test]
fn xoodyak() {
    run(Variant::Xoodyak);
}

#[test]
fn grain_128aeadv2() {
    run(Variant::Grain128AeadV2);
}
