//! Closed-form plans against the instrumented ciphers, field for field.

use lwc_ciphers::{params, seal, Variant};
use lwc_model::schedule::{plan, schedule_params};

fn grid(r: u64) -> Vec<u64> {
    let mut g = vec![0, 1, r - 1, r, r + 1, 2 * r, 2 * r + 1, 8 * r, 64 * r, 64, 255];
    g.sort();
    g.dedup();
    g
}

#[test]
fn plans_match_measured_counts() {
    let mut bad = Vec::new();
    for v in Variant::ALL {
        let sp = schedule_params(v);
        let ap = params(v);
        let (key, nonce) = (vec![7u8; ap.key_len], vec![9u8; ap.nonce_len]);
        for &a in &grid(sp.rate_ad) {
            for &m in &grid(sp.rate_msg) {
                let ad = vec![0xa5u8; a as usize];
                let pt = vec![0x3cu8; m as usize];
                let measured = seal(v, &key, &nonce, &ad, &pt).unwrap().counters.calls;
                let predicted = plan(v, a, m).counts;
                if measured != predicted {
                    bad.push(format!("{v} ({a}, {m}): {:?}", predicted.diff(&measured)));
                }
            }
        }
    }
    assert!(bad.is_empty(), "{} mismatches:\n{}", bad.len(), bad[..bad.len().min(30)].join("\n"));
}
