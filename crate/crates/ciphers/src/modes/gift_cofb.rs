//! GIFT-COFB: combined feedback over GIFT-128 with a 64-bit masking offset.

use crate::counters::{Meter, Phase, Primitive};
use crate::primitives::gift;

type Block = [u8; 16];

fn e(input: &Block, key: &[u8; 16], m: &mut Meter) -> Block {
    m.tick(Primitive::Gift128);
    gift::encrypt(input, key)
}

fn double(l: &mut [u8; 8]) {
    let msb = l[0] >> 7;
    for i in 0..7 {
        l[i] = (l[i] << 1) | (l[i + 1] >> 7);
    }
    l[7] = (l[7] << 1) ^ (msb * 0x1b);
}

fn triple(l: &mut [u8; 8]) {
    let mut t = *l;
    double(&mut t);
    for (a, b) in l.iter_mut().zip(t) {
        *a ^= b;
    }
}

/// G(Y) = (Y_2, Y_1 <<< 1) on the two 64-bit halves.
fn g(y: &Block) -> Block {
    let mut out = [0u8; 16];
    out[..8].copy_from_slice(&y[8..]);
    for i in 0..7 {
        out[8 + i] = (y[i] << 1) | (y[i + 1] >> 7);
    }
    out[15] = (y[7] << 1) | (y[0] >> 7);
    out
}

fn pad(data: &[u8]) -> Block {
    let mut out = [0u8; 16];
    out[..data.len()].copy_from_slice(data);
    if data.len() < 16 {
        out[data.len()] = 0x80;
    }
    out
}

/// X = pad(D) ⊕ G(Y) ⊕ (L ‖ 0^64)
fn feedback(y: &Block, data: &[u8], l: &[u8; 8]) -> Block {
    let mut x = g(y);
    for (a, b) in x.iter_mut().zip(pad(data)) {
        *a ^= b;
    }
    for (a, b) in x.iter_mut().zip(l) {
        *a ^= b;
    }
    x
}

fn run(key: &[u8], nonce: &[u8], ad: &[u8], input: &[u8], decrypt: bool, m: &mut Meter) -> (Vec<u8>, Block) {
    let key: &[u8; 16] = key.try_into().unwrap();
    let nonce: &Block = nonce.try_into().unwrap();

    m.enter(Phase::Init);
    let mut y = e(nonce, key, m);
    let mut l: [u8; 8] = y[..8].try_into().unwrap();

    m.enter(Phase::Ad);
    let a_blocks: Vec<&[u8]> = if ad.is_empty() { vec![&[]] } else { ad.chunks(16).collect() };
    let (last_a, full_a) = a_blocks.split_last().unwrap();
    for block in full_a {
        double(&mut l);
        let x = feedback(&y, block, &l);
        y = e(&x, key, m);
    }
    triple(&mut l);
    if ad.is_empty() || last_a.len() < 16 {
        triple(&mut l);
    }
    if input.is_empty() {
        triple(&mut l);
        triple(&mut l);
    }
    let x = feedback(&y, last_a, &l);
    y = e(&x, key, m);

    m.enter(Phase::Msg);
    let mut out = Vec::with_capacity(input.len());
    if !input.is_empty() {
        let blocks: Vec<&[u8]> = input.chunks(16).collect();
        let (last, full) = blocks.split_last().unwrap();
        for block in full {
            double(&mut l);
            let plain = xor_out(&y, block, &mut out, decrypt);
            let x = feedback(&y, &plain, &l);
            y = e(&x, key, m);
        }
        triple(&mut l);
        if last.len() < 16 {
            triple(&mut l);
        }
        let plain = xor_out(&y, last, &mut out, decrypt);
        let x = feedback(&y, &plain, &l);
        y = e(&x, key, m);
    }
    m.enter(Phase::Finalize);
    (out, y)
}

/// Emits Y ⊕ block and returns the plaintext side of the block.
fn xor_out(y: &Block, block: &[u8], out: &mut Vec<u8>, decrypt: bool) -> Vec<u8> {
    let o: Vec<u8> = block.iter().zip(y).map(|(a, b)| a ^ b).collect();
    out.extend_from_slice(&o);
    if decrypt {
        o
    } else {
        block.to_vec()
    }
}

pub(crate) fn seal(
    key: &[u8],
    nonce: &[u8],
    ad: &[u8],
    pt: &[u8],
    m: &mut Meter,
) -> (Vec<u8>, Vec<u8>) {
    let (ct, tag) = run(key, nonce, ad, pt, false, m);
    (ct, tag.to_vec())
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
    fn doubling_reduces_by_the_pentanomial() {
        let mut l = [0x80, 0, 0, 0, 0, 0, 0, 0x01];
        double(&mut l);
        assert_eq!(l, [0, 0, 0, 0, 0, 0, 0, 0x02 ^ 0x1b]);
        let mut t = [0, 0, 0, 0, 0, 0, 0, 0x01];
        triple(&mut t);
        assert_eq!(t[7], 0x03);
    }

    #[test]
    fn g_swaps_halves_and_rotates() {
        let mut y = [0u8; 16];
        y[0] = 0x80;
        y[8] = 0xaa;
        let out = g(&y);
        assert_eq!(out[0], 0xaa);
        assert_eq!(out[15], 0x01);
    }
}
