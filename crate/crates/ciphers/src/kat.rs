//! NIST LWC AEAD known-answer files.
//!
//! ```text
//! Count = 1
//! Key = 000102030405060708090A0B0C0D0E0F
//! Nonce = 000102030405060708090A0B0C0D0E0F
//! PT =
//! AD =
//! CT = E355159F292911F794CB1432A0103A8A
//! ```
//!
//! Records are separated by one blank line; `CT` is ciphertext ‖ tag; hex is
//! uppercase with no separators. The parser is strict: field order, key names,
//! case and `Count` sequencing (1, 2, 3, ..) are all checked.

use std::fmt::Write as _;

use serde::Serialize;

use crate::{open, params, seal, Variant};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KatRecord {
    pub count: u64,
    pub key: Vec<u8>,
    pub nonce: Vec<u8>,
    pub pt: Vec<u8>,
    pub ad: Vec<u8>,
    pub ct: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct KatParseError {
    pub line: usize,
    pub msg: String,
}

const FIELDS: [&str; 6] = ["Count", "Key", "Nonce", "PT", "AD", "CT"];

fn decode_hex(s: &str, line: usize) -> Result<Vec<u8>, KatParseError> {
    let err = |msg: String| KatParseError { line, msg };
    if let Some(c) = s.chars().find(|c| !matches!(c, '0'..='9' | 'A'..='F')) {
        return Err(err(format!("invalid hex character {c:?} (uppercase hex only)")));
    }
    hex::decode(s).map_err(|e| err(format!("invalid hex: {e}")))
}

pub fn parse(text: &str) -> Result<Vec<KatRecord>, KatParseError> {
    let mut out = Vec::new();
    let mut fields: Vec<&str> = Vec::with_capacity(6);
    let mut start_line = 0;
    let lines: Vec<&str> = text.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l)).collect();

    let flush = |fields: &mut Vec<&str>, start: usize, out: &mut Vec<KatRecord>| -> Result<(), KatParseError> {
        if fields.is_empty() {
            return Ok(());
        }
        if fields.len() != 6 {
            return Err(KatParseError {
                line: start + fields.len(),
                msg: format!("record truncated: expected `{} = `", FIELDS[fields.len()]),
            });
        }
        let count: u64 = fields[0].parse().map_err(|_| KatParseError {
            line: start,
            msg: format!("Count must be a decimal integer, got {:?}", fields[0]),
        })?;
        let expected = out.len() as u64 + 1;
        if count != expected {
            return Err(KatParseError {
                line: start,
                msg: format!("Count = {count} out of sequence (expected {expected})"),
            });
        }
        let h = |i: usize| decode_hex(fields[i], start + i);
        out.push(KatRecord {
            count,
            key: h(1)?,
            nonce: h(2)?,
            pt: h(3)?,
            ad: h(4)?,
            ct: h(5)?,
        });
        fields.clear();
        Ok(())
    };

    for (i, raw) in lines.iter().enumerate() {
        let lineno = i + 1;
        if raw.trim().is_empty() {
            flush(&mut fields, start_line, &mut out)?;
            continue;
        }
        if fields.len() == 6 {
            return Err(KatParseError {
                line: lineno,
                msg: "missing blank line between records".into(),
            });
        }
        if fields.is_empty() {
            start_line = lineno;
        }
        let name = FIELDS[fields.len()];
        let value = raw
            .strip_prefix(name)
            .and_then(|r| r.strip_prefix(" ="))
            .ok_or_else(|| KatParseError {
                line: lineno,
                msg: format!("expected `{name} = ...`, got {raw:?}"),
            })?;
        let value = match value.strip_prefix(' ') {
            Some(v) => v.trim_end_matches(' '),
            None if value.is_empty() => value,
            None => {
                return Err(KatParseError {
                    line: lineno,
                    msg: format!("expected `{name} = ...`, got {raw:?}"),
                })
            }
        };
        fields.push(value);
    }
    flush(&mut fields, start_line, &mut out)?;
    Ok(out)
}

/// Renders records in the reference layout (trailing space after empty `=`).
pub fn write(records: &[KatRecord]) -> String {
    let mut s = String::new();
    for r in records {
        let _ = writeln!(s, "Count = {}", r.count);
        for (name, v) in [("Key", &r.key), ("Nonce", &r.nonce), ("PT", &r.pt), ("AD", &r.ad), ("CT", &r.ct)] {
            let _ = writeln!(s, "{name} = {}", hex::encode_upper(v));
        }
        s.push('\n');
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KatFailure {
    pub count: u64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KatSummary {
    pub variant: Variant,
    pub total: usize,
    pub passed: usize,
    pub failures: Vec<KatFailure>,
}

impl KatSummary {
    pub fn all_passed(&self) -> bool {
        self.total > 0 && self.passed == self.total
    }
}

/// Checks each record both ways: seal must reproduce `CT`, open must accept it
/// and return `PT`.
pub fn run(variant: Variant, records: &[KatRecord]) -> KatSummary {
    let tag_len = params(variant).tag_len;
    let mut failures = Vec::new();
    for r in records {
        if let Err(reason) = check(variant, tag_len, r) {
            failures.push(KatFailure { count: r.count, reason });
        }
    }
    KatSummary {
        variant,
        total: records.len(),
        passed: records.len() - failures.len(),
        failures,
    }
}

fn check(v: Variant, tag_len: usize, r: &KatRecord) -> Result<(), String> {
    if r.ct.len() != r.pt.len() + tag_len {
        return Err(format!(
            "CT is {} bytes, expected |PT| + {tag_len} = {}",
            r.ct.len(),
            r.pt.len() + tag_len
        ));
    }
    let sealed = seal(v, &r.key, &r.nonce, &r.ad, &r.pt).map_err(|e| e.to_string())?;
    let got = [sealed.ciphertext, sealed.tag].concat();
    if got != r.ct {
        return Err(format!(
            "seal mismatch: got {}, expected {}",
            hex::encode_upper(&got),
            hex::encode_upper(&r.ct)
        ));
    }
    let (ct, tag) = r.ct.split_at(r.pt.len());
    let opened = open(v, &r.key, &r.nonce, &r.ad, ct, tag).map_err(|e| format!("open: {e}"))?;
    if opened.plaintext != r.pt {
        return Err("open returned a different plaintext".into());
    }
    Ok(())
}

/// Where a bundled fixture comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KatSource {
    /// Output of the submission's reference implementation.
    Official,
    /// Generated by an independent third-party implementation.
    CrossImplementation,
}

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub file_name: &'static str,
    pub text: &'static str,
    pub source: KatSource,
}

macro_rules! fixture {
    ($dir:literal, $file:literal, $source:ident) => {
        Some(Fixture {
            file_name: $file,
            text: include_str!(concat!("../kat/", $dir, "/", $file)),
            source: KatSource::$source,
        })
    };
}

/// The known-answer file shipped for `v`, if any (see `kat/PROVENANCE.md`).
pub fn fixture(v: Variant) -> Option<Fixture> {
    match v {
        Variant::Ascon128 => fixture!("ascon-128", "LWC_AEAD_KAT_128_128.txt", Official),
        Variant::Ascon128a => fixture!("ascon-128a", "LWC_AEAD_KAT_128_128.txt", Official),
        Variant::IsapA128a => fixture!("isap-a-128a", "LWC_AEAD_KAT_128_128.txt", Official),
        Variant::IsapA128 => fixture!("isap-a-128", "LWC_AEAD_KAT_128_128.txt", Official),
        Variant::Xoodyak => fixture!("xoodyak", "LWC_AEAD_KAT_128_128.txt", CrossImplementation),
        Variant::Grain128AeadV2 => fixture!("grain-128aeadv2", "LWC_AEAD_KAT_128_96.txt", CrossImplementation),
        _ => None,
    }
}
