//! ISAP-A: Ascon-p based encrypt-then-MAC with re-keyed session keys.
//!
//! Session-key derivations (IsapRk) are booked under the init phase wherever they run.

use super::ascon::p;
use crate::counters::{Meter, Phase, Primitive};
use crate::primitives::ascon::{self, State};

pub(crate) struct IsapParams {
    iv_a: [u8; 8],
    iv_ka: [u8; 8],
    iv_ke: [u8; 8],
    s_h: Primitive,
    s_b: Primitive,
    s_e: Primitive,
    s_k: Primitive,
}

const fn ivs(sh: u8, sb: u8, se: u8, sk: u8) -> [[u8; 8]; 3] {
    [
        [0x01, 128, 64, 1, sh, sb, se, sk],
        [0x02, 128, 64, 1, sh, sb, se, sk],
        [0x03, 128, 64, 1, sh, sb, se, sk],
    ]
}

const IV_128A: [[u8; 8]; 3] = ivs(12, 1, 6, 12);
const IV_128: [[u8; 8]; 3] = ivs(12, 12, 12, 12);

pub(crate) const ISAP_A_128A: IsapParams = IsapParams {
    iv_a: IV_128A[0],
    iv_ka: IV_128A[1],
    iv_ke: IV_128A[2],
    s_h: Primitive::AsconP12,
    s_b: Primitive::AsconP1,
    s_e: Primitive::AsconP6,
    s_k: Primitive::AsconP12,
};

pub(crate) const ISAP_A_128: IsapParams = IsapParams {
    iv_a: IV_128[0],
    iv_ka: IV_128[1],
    iv_ke: IV_128[2],
    s_h: Primitive::AsconP12,
    s_b: Primitive::AsconP12,
    s_e: Primitive::AsconP12,
    s_k: Primitive::AsconP12,
};

fn state_from(parts: &[&[u8]]) -> State {
    let mut bytes = [0u8; 40];
    let mut off = 0;
    for part in parts {
        bytes[off..off + part.len()].copy_from_slice(part);
        off += part.len();
    }
    ascon::load(&bytes)
}

/// Absorbs y one bit per s_B call, then squeezes the session key from the state prefix.
fn rekey(cfg: &IsapParams, key: &[u8], iv: &[u8; 8], y: &[u8], m: &mut Meter) -> [u8; 40] {
    let prev = m.phase();
    m.enter(Phase::Init);
    let mut s = state_from(&[key, iv]);
    p(&mut s, cfg.s_k, m);
    let nbits = 8 * y.len();
    for i in 0..nbits {
        let bit = (y[i / 8] >> (7 - i % 8)) & 1;
        s[0] ^= (bit as u64) << 63;
        if i + 1 < nbits {
            p(&mut s, cfg.s_b, m);
        } else {
            p(&mut s, cfg.s_k, m);
        }
    }
    m.enter(prev);
    ascon::store(&s)
}

fn keystream_xor(cfg: &IsapParams, key: &[u8], nonce: &[u8], data: &[u8], m: &mut Meter) -> Vec<u8> {
    if data.is_empty() {
        return Vec::new();
    }
    let ke = rekey(cfg, key, &cfg.iv_ke, nonce, m);
    let mut s = state_from(&[&ke[..24], nonce]);
    m.enter(Phase::Msg);
    let mut out = Vec::with_capacity(data.len());
    for block in data.chunks(8) {
        p(&mut s, cfg.s_e, m);
        out.extend(block.iter().enumerate().map(|(i, &b)| b ^ ascon::byte_at(&s, i)));
    }
    out
}

fn absorb(cfg: &IsapParams, s: &mut State, data: &[u8], m: &mut Meter) {
    let mut blocks = data.chunks_exact(8);
    for block in &mut blocks {
        ascon::xor_bytes(s, 0, block);
        p(s, cfg.s_h, m);
    }
    let rest = blocks.remainder();
    ascon::xor_bytes(s, 0, rest);
    ascon::xor_bytes(s, rest.len(), &[0x80]);
    p(s, cfg.s_h, m);
}

fn mac(cfg: &IsapParams, key: &[u8], nonce: &[u8], ad: &[u8], ct: &[u8], m: &mut Meter) -> Vec<u8> {
    let mut s = state_from(&[nonce, &cfg.iv_a]);
    m.enter(Phase::Init);
    p(&mut s, cfg.s_h, m);

    m.enter(Phase::Ad);
    absorb(cfg, &mut s, ad, m);
    s[4] ^= 1;

    m.enter(Phase::Msg);
    absorb(cfg, &mut s, ct, m);

    let y = ascon::store(&s);
    let ka = rekey(cfg, key, &cfg.iv_ka, &y[..16], m);
    let mut bytes = ascon::store(&s);
    bytes[..16].copy_from_slice(&ka[..16]);
    let mut s = ascon::load(&bytes);

    m.enter(Phase::Finalize);
    p(&mut s, cfg.s_h, m);
    ascon::store(&s)[..16].to_vec()
}

pub(crate) fn seal(
    cfg: &IsapParams,
    key: &[u8],
    nonce: &[u8],
    ad: &[u8],
    pt: &[u8],
    m: &mut Meter,
) -> (Vec<u8>, Vec<u8>) {
    let ct = keystream_xor(cfg, key, nonce, pt, m);
    let tag = mac(cfg, key, nonce, ad, &ct, m);
    (ct, tag)
}

/// MAC-then-decrypt: the keystream is only generated once the tag verifies.
pub(crate) fn open(
    cfg: &IsapParams,
    key: &[u8],
    nonce: &[u8],
    ad: &[u8],
    ct: &[u8],
    tag: &[u8],
    m: &mut Meter,
) -> Option<Vec<u8>> {
    let expected = mac(cfg, key, nonce, ad, ct, m);
    if !super::tags_equal(&expected, tag) {
        return None;
    }
    Some(keystream_xor(cfg, key, nonce, ct, m))
}
