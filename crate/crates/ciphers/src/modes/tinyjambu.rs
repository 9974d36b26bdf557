//! TinyJAMBU-128: keyed-permutation duplex over 32-bit blocks.

use crate::counters::{Meter, Phase, Primitive};
use crate::primitives::tinyjambu::{self, State};

const FRAME_NONCE: u32 = 0x10;
const FRAME_AD: u32 = 0x30;
const FRAME_MSG: u32 = 0x50;
const FRAME_FINAL: u32 = 0x70;

struct Duplex {
    s: State,
    k: [u32; 4],
}

impl Duplex {
    fn p640(&mut self, m: &mut Meter) {
        m.tick(Primitive::TinyJambuP640);
        tinyjambu::permute(&mut self.s, &self.k, 640);
    }

    fn p1024(&mut self, m: &mut Meter) {
        m.tick(Primitive::TinyJambuP1024);
        tinyjambu::permute(&mut self.s, &self.k, 1024);
    }
}

fn word(chunk: &[u8]) -> u32 {
    let mut w = [0u8; 4];
    w[..chunk.len()].copy_from_slice(chunk);
    u32::from_le_bytes(w)
}

fn begin(key: &[u8], nonce: &[u8], ad: &[u8], m: &mut Meter) -> Duplex {
    let mut d = Duplex {
        s: [0; 4],
        k: std::array::from_fn(|i| word(&key[4 * i..4 * i + 4])),
    };
    m.enter(Phase::Init);
    d.p1024(m);
    for chunk in nonce.chunks(4) {
        d.s[1] ^= FRAME_NONCE;
        d.p640(m);
        d.s[3] ^= word(chunk);
    }

    m.enter(Phase::Ad);
    for chunk in ad.chunks(4) {
        d.s[1] ^= FRAME_AD;
        d.p640(m);
        d.s[3] ^= word(chunk);
        if chunk.len() < 4 {
            d.s[1] ^= chunk.len() as u32;
        }
    }
    d
}

fn crypt(d: &mut Duplex, input: &[u8], decrypt: bool, m: &mut Meter) -> Vec<u8> {
    m.enter(Phase::Msg);
    let mut out = Vec::with_capacity(input.len());
    for chunk in input.chunks(4) {
        d.s[1] ^= FRAME_MSG;
        d.p1024(m);
        let ks = d.s[2].to_le_bytes();
        let o: Vec<u8> = chunk.iter().zip(ks).map(|(a, b)| a ^ b).collect();
        d.s[3] ^= word(if decrypt { &o } else { chunk });
        if chunk.len() < 4 {
            d.s[1] ^= chunk.len() as u32;
        }
        out.extend(o);
    }
    out
}

fn finish(d: &mut Duplex, m: &mut Meter) -> Vec<u8> {
    m.enter(Phase::Finalize);
    d.s[1] ^= FRAME_FINAL;
    d.p1024(m);
    let t0 = d.s[2];
    d.s[1] ^= FRAME_FINAL;
    d.p640(m);
    [t0.to_le_bytes(), d.s[2].to_le_bytes()].concat()
}

pub(crate) fn seal(
    key: &[u8],
    nonce: &[u8],
    ad: &[u8],
    pt: &[u8],
    m: &mut Meter,
) -> (Vec<u8>, Vec<u8>) {
    let mut d = begin(key, nonce, ad, m);
    let ct = crypt(&mut d, pt, false, m);
    let tag = finish(&mut d, m);
    (ct, tag)
}

pub(crate) fn open(
    key: &[u8],
    nonce: &[u8],
    ad: &[u8],
    ct: &[u8],
    tag: &[u8],
    m: &mut Meter,
) -> Option<Vec<u8>> {
    let mut d = begin(key, nonce, ad, m);
    let pt = crypt(&mut d, ct, true, m);
    let expected = finish(&mut d, m);
    super::release(pt, &expected, tag)
}
