//! Schwaemm256-128 over SPARKLE384: 256-bit rate (words 0..8), 128-bit capacity (words 8..12).

use crate::counters::{Meter, Phase, Primitive};
use crate::primitives::sparkle::{self, STEPS_BIG, STEPS_SLIM};

const RATE: usize = 32;
const RATE_WORDS: usize = 8;
const CAP_WORDS: usize = 4;
const BRANCHES: usize = 6;

const CONST_A0: u32 = 0x0400_0000;
const CONST_A1: u32 = 0x0500_0000;
const CONST_M2: u32 = 0x0600_0000;
const CONST_M3: u32 = 0x0700_0000;

type State = [u32; 12];

fn slim(s: &mut State, m: &mut Meter) {
    m.tick(Primitive::Sparkle384Slim);
    sparkle::permute(s, BRANCHES, STEPS_SLIM);
}

fn big(s: &mut State, m: &mut Meter) {
    m.tick(Primitive::Sparkle384Big);
    sparkle::permute(s, BRANCHES, STEPS_BIG);
}

fn words<const N: usize>(bytes: &[u8]) -> [u32; N] {
    std::array::from_fn(|i| u32::from_le_bytes(bytes[4 * i..4 * i + 4].try_into().unwrap()))
}

fn padded(block: &[u8]) -> [u32; RATE_WORDS] {
    let mut buf = [0u8; RATE];
    buf[..block.len()].copy_from_slice(block);
    if block.len() < RATE {
        buf[block.len()] = 0x80;
    }
    words(&buf)
}

/// Feistel-swap ρ combined with rate whitening from the capacity.
fn rho_whiten(s: &mut State, d: &[u32; RATE_WORDS]) {
    for i in 0..RATE_WORDS / 2 {
        let j = i + RATE_WORDS / 2;
        let tmp = s[i];
        s[i] = s[j] ^ d[i] ^ s[RATE_WORDS + (i & (CAP_WORDS - 1))];
        s[j] ^= tmp ^ d[j] ^ s[RATE_WORDS + (j & (CAP_WORDS - 1))];
    }
}

fn rate_bytes(s: &State) -> [u8; RATE] {
    let mut out = [0u8; RATE];
    for (chunk, w) in out.chunks_exact_mut(4).zip(&s[..RATE_WORDS]) {
        chunk.copy_from_slice(&w.to_le_bytes());
    }
    out
}

fn begin(key: &[u8], nonce: &[u8], ad: &[u8], m: &mut Meter) -> State {
    let mut s: State = [0; 12];
    s[..RATE_WORDS].copy_from_slice(&words::<RATE_WORDS>(nonce));
    s[RATE_WORDS..].copy_from_slice(&words::<CAP_WORDS>(key));
    m.enter(Phase::Init);
    big(&mut s, m);

    m.enter(Phase::Ad);
    if !ad.is_empty() {
        let blocks: Vec<&[u8]> = ad.chunks(RATE).collect();
        let (last, rest) = blocks.split_last().unwrap();
        for block in rest {
            rho_whiten(&mut s, &padded(block));
            slim(&mut s, m);
        }
        s[11] ^= if last.len() < RATE { CONST_A0 } else { CONST_A1 };
        rho_whiten(&mut s, &padded(last));
        big(&mut s, m);
    }
    s
}

fn crypt(s: &mut State, input: &[u8], decrypt: bool, m: &mut Meter) -> Vec<u8> {
    m.enter(Phase::Msg);
    let mut out = Vec::with_capacity(input.len());
    if input.is_empty() {
        return out;
    }
    let blocks: Vec<&[u8]> = input.chunks(RATE).collect();
    let last = blocks.len() - 1;
    for (i, block) in blocks.iter().enumerate() {
        let ks = rate_bytes(s);
        let o: Vec<u8> = block.iter().zip(ks).map(|(a, b)| a ^ b).collect();
        let plain = if decrypt { &o[..] } else { block };
        if i == last {
            s[11] ^= if block.len() < RATE { CONST_M2 } else { CONST_M3 };
        }
        rho_whiten(s, &padded(plain));
        if i == last {
            big(s, m);
        } else {
            slim(s, m);
        }
        out.extend(o);
    }
    out
}

fn finish(s: &mut State, key: &[u8], m: &mut Meter) -> Vec<u8> {
    m.enter(Phase::Finalize);
    let k = words::<CAP_WORDS>(key);
    for (w, kw) in s[RATE_WORDS..].iter_mut().zip(k) {
        *w ^= kw;
    }
    s[RATE_WORDS..].iter().flat_map(|w| w.to_le_bytes()).collect()
}

pub(crate) fn seal(
    key: &[u8],
    nonce: &[u8],
    ad: &[u8],
    pt: &[u8],
    m: &mut Meter,
) -> (Vec<u8>, Vec<u8>) {
    let mut s = begin(key, nonce, ad, m);
    let ct = crypt(&mut s, pt, false, m);
    let tag = finish(&mut s, key, m);
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
    let mut s = begin(key, nonce, ad, m);
    let pt = crypt(&mut s, ct, true, m);
    let expected = finish(&mut s, key, m);
    super::release(pt, &expected, tag)
}
