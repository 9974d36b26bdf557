//! PHOTON-Beetle-AEAD[128]: rate 16 bytes over PHOTON_256, state N ‖ K.

use crate::counters::{Meter, Phase, Primitive};
use crate::primitives::photon;

const RATE: usize = 16;
type State = [u8; 32];

fn p(s: &mut State, m: &mut Meter) {
    m.tick(Primitive::Photon256);
    photon::permute(s);
}

fn xor_const(s: &mut State, c: u8) {
    s[31] ^= c << 5;
}

fn hash(s: &mut State, data: &[u8], c: u8, m: &mut Meter) {
    for block in data.chunks(RATE) {
        p(s, m);
        for (a, b) in s.iter_mut().zip(block) {
            *a ^= b;
        }
        if block.len() < RATE {
            s[block.len()] ^= 0x01;
        }
    }
    xor_const(s, c);
}

/// Shuffle(S) = S_2 ‖ (S_1 >>> 1), halves read as little-endian 64-bit words.
fn shuffle(s: &State) -> [u8; RATE] {
    let s1 = u64::from_le_bytes(s[..8].try_into().unwrap());
    let mut out = [0u8; RATE];
    out[..8].copy_from_slice(&s[8..16]);
    out[8..].copy_from_slice(&s1.rotate_right(1).to_le_bytes());
    out
}

fn crypt(s: &mut State, input: &[u8], c: u8, decrypt: bool, m: &mut Meter) -> Vec<u8> {
    let mut out = Vec::with_capacity(input.len());
    for block in input.chunks(RATE) {
        p(s, m);
        let ks = shuffle(s);
        let o: Vec<u8> = block.iter().zip(ks).map(|(a, b)| a ^ b).collect();
        let plain = if decrypt { &o[..] } else { block };
        for (a, b) in s.iter_mut().zip(plain) {
            *a ^= b;
        }
        if block.len() < RATE {
            s[block.len()] ^= 0x01;
        }
        out.extend(o);
    }
    xor_const(s, c);
    out
}

fn run(key: &[u8], nonce: &[u8], ad: &[u8], input: &[u8], decrypt: bool, m: &mut Meter) -> (Vec<u8>, Vec<u8>) {
    let mut s: State = [0; 32];
    s[..16].copy_from_slice(nonce);
    s[16..].copy_from_slice(key);

    let mut out = Vec::new();
    m.enter(Phase::Ad);
    if ad.is_empty() && input.is_empty() {
        xor_const(&mut s, 1);
    } else {
        let (a_full, m_full) = (ad.len() % RATE == 0, input.len() % RATE == 0);
        let c0 = match (!input.is_empty(), a_full) {
            (true, true) => 1,
            (true, false) => 2,
            (false, true) => 3,
            (false, false) => 4,
        };
        let c1 = match (!ad.is_empty(), m_full) {
            (true, true) => 1,
            (true, false) => 2,
            (false, true) => 5,
            (false, false) => 6,
        };
        if !ad.is_empty() {
            hash(&mut s, ad, c0, m);
        }
        m.enter(Phase::Msg);
        if !input.is_empty() {
            out = crypt(&mut s, input, c1, decrypt, m);
        }
    }

    m.enter(Phase::Finalize);
    p(&mut s, m);
    (out, s[..16].to_vec())
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shuffle_rotates_the_first_half_right_by_one_bit() {
        let mut s = [0u8; 32];
        s[0] = 0x01; // bit 0 of S_1 wraps to bit 63
        s[8] = 0xaa;
        let out = shuffle(&s);
        assert_eq!(out[0], 0xaa);
        assert_eq!(out[15], 0x80);
    }
}
