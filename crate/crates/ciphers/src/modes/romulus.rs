//! Romulus-N: nonce-based AEAD over SKINNY-128-384+.
//!
//! Tweakey = CNT(56-bit LFSR) ‖ D ‖ 0^64 ‖ tweak(16) ‖ K(16).

use crate::counters::{Meter, Phase, Primitive};
use crate::primitives::skinny;

type Block = [u8; 16];

struct Counter([u8; 7]);

impl Counter {
    fn reset() -> Counter {
        Counter([1, 0, 0, 0, 0, 0, 0])
    }

    /// Multiply by x in GF(2^56) (little-endian byte order, feedback 0x95).
    fn step(&mut self) {
        let c = &mut self.0;
        let fb = c[6] >> 7;
        for i in (1..7).rev() {
            c[i] = (c[i] << 1) | (c[i - 1] >> 7);
        }
        c[0] = (c[0] << 1) ^ (fb * 0x95);
    }
}

fn tbc(s: &mut Block, cnt: &Counter, d: u8, tweak: &Block, key: &[u8], m: &mut Meter) {
    let mut tk = [0u8; 48];
    tk[..7].copy_from_slice(&cnt.0);
    tk[7] = d;
    tk[16..32].copy_from_slice(tweak);
    tk[32..].copy_from_slice(key);
    m.tick(Primitive::Skinny128_384Plus);
    *s = skinny::encrypt(s, &tk, skinny::ROUNDS_PLUS);
}

/// Zero padding with the byte length in the last byte (identity on full blocks).
fn pad(data: &[u8]) -> Block {
    let mut out = [0u8; 16];
    out[..data.len()].copy_from_slice(data);
    if data.len() < 16 {
        out[15] = data.len() as u8;
    }
    out
}

fn g(s: &Block) -> Block {
    s.map(|x| (x >> 1) ^ (x & 0x80) ^ ((x & 0x01) << 7))
}

fn xor_into(s: &mut Block, data: &Block) {
    for (a, b) in s.iter_mut().zip(data) {
        *a ^= b;
    }
}

fn blocks(data: &[u8]) -> Vec<&[u8]> {
    if data.is_empty() {
        vec![&[]]
    } else {
        data.chunks(16).collect()
    }
}

fn absorb_ad(s: &mut Block, key: &[u8], nonce: &Block, ad: &[u8], m: &mut Meter) {
    m.enter(Phase::Ad);
    let a = blocks(ad);
    let wa = if a.last().unwrap().len() == 16 { 24 } else { 26 };
    let mut cnt = Counter::reset();
    for pair in a.chunks_exact(2) {
        xor_into(s, &pad(pair[0]));
        cnt.step();
        tbc(s, &cnt, 8, &pad(pair[1]), key, m);
        cnt.step();
    }
    if a.len() % 2 == 1 {
        xor_into(s, &pad(a[a.len() - 1]));
        cnt.step();
    }
    tbc(s, &cnt, wa, nonce, key, m);
}

fn run(key: &[u8], nonce: &[u8], ad: &[u8], input: &[u8], decrypt: bool, m: &mut Meter) -> (Vec<u8>, Vec<u8>) {
    let nonce: &Block = nonce.try_into().unwrap();
    let mut s: Block = [0; 16];
    absorb_ad(&mut s, key, nonce, ad, m);

    m.enter(Phase::Msg);
    let mb = blocks(input);
    let last = mb.len() - 1;
    let mut cnt = Counter::reset();
    let mut out = Vec::with_capacity(input.len());
    for (i, block) in mb.iter().enumerate() {
        let gs = g(&s);
        let o: Vec<u8> = block.iter().zip(gs).map(|(a, b)| a ^ b).collect();
        let plain = if decrypt { &o[..] } else { block };
        xor_into(&mut s, &pad(plain));
        out.extend(o);

        cnt.step();
        let d = match (i == last, block.len() == 16) {
            (false, _) => 4,
            (true, true) => 20,
            (true, false) => 21,
        };
        tbc(&mut s, &cnt, d, nonce, key, m);
    }

    m.enter(Phase::Finalize);
    (out, g(&s).to_vec())
}

pub(crate) fn seal(
    key: &[u8],
    nonce: &[u8],
    ad: &[u8],
    pt: &[u8],
    m: &mut Meter,
) -> (Vec<u8>, Vec<u8>) {
    run(key, nonce, ad, pt, false, m)
}

pub(crate) fn open(
    key: &[u8],
    nonce: &[u8],
    ad: &[u8],
    ct: &[u8],
    tag: &[u8],
    m: &mut Meter,
) -> Option<Vec<u8>> {
    let (pt, expected) = run(key, nonce, ad, ct, true, m);
    super::release(pt, &expected, tag)
}
