//! Elephant v2: nonce-based encrypt-then-MAC with LFSR-derived masks.
//!
//! mask_{a,0} = φ^a(P(K ‖ 0)); encryption uses mask_{i,0} ⊕ mask_{i+1,0},
//! ciphertext authentication mask_{i,0} ⊕ mask_{i+2,0}, AD authentication mask_{i,0}.

use crate::counters::{Meter, Phase, Primitive};
use crate::primitives::{keccak, spongent};

const NONCE_LEN: usize = 12;

#[derive(Clone, Copy)]
pub(crate) enum Instance {
    Dumbo,
    Jumbo,
    Delirium,
}

impl Instance {
    fn block(self) -> usize {
        match self {
            Instance::Dumbo => 20,
            Instance::Jumbo => 22,
            Instance::Delirium => 25,
        }
    }

    fn tag_len(self) -> usize {
        match self {
            Instance::Delirium => 16,
            _ => 8,
        }
    }

    fn primitive(self) -> Primitive {
        match self {
            Instance::Dumbo => Primitive::Spongent160,
            Instance::Jumbo => Primitive::Spongent176,
            Instance::Delirium => Primitive::KeccakF200,
        }
    }

    fn permute(self, state: &mut [u8], m: &mut Meter) {
        m.tick(self.primitive());
        match self {
            Instance::Dumbo => spongent::permute(state, spongent::Width::W160),
            Instance::Jumbo => spongent::permute(state, spongent::Width::W176),
            Instance::Delirium => keccak::permute(state.try_into().unwrap()),
        }
    }

    /// φ: shift the block one byte left and append the feedback byte.
    fn lfsr_step(self, mask: &[u8]) -> Vec<u8> {
        let x = mask;
        let fb = match self {
            Instance::Dumbo => x[0].rotate_left(3) ^ (x[3] << 7) ^ (x[13] >> 7),
            Instance::Jumbo => x[0].rotate_left(1) ^ (x[3] << 7) ^ (x[19] >> 7),
            Instance::Delirium => x[0].rotate_left(1) ^ x[2].rotate_left(1) ^ (x[13] << 1),
        };
        let mut out = x[1..].to_vec();
        out.push(fb);
        out
    }
}

fn xor(a: &mut [u8], b: &[u8]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x ^= y;
    }
}

/// Block `i` of `data ‖ 0x01 ‖ 0*`.
fn padded_block(data: &[u8], i: usize, n: usize) -> Vec<u8> {
    let mut out = vec![0u8; n];
    let start = i * n;
    if start < data.len() {
        let end = data.len().min(start + n);
        out[..end - start].copy_from_slice(&data[start..end]);
    }
    if (start..start + n).contains(&data.len()) {
        out[data.len() - start] = 0x01;
    }
    out
}

fn run(
    inst: Instance,
    key: &[u8],
    nonce: &[u8],
    ad: &[u8],
    input: &[u8],
    decrypt: bool,
    m: &mut Meter,
) -> (Vec<u8>, Vec<u8>) {
    let n = inst.block();
    let mlen = input.len();
    let nblocks_c = 1 + mlen / n;
    let nblocks_m = mlen.div_ceil(n);
    let nonce_ad = [nonce, ad].concat();
    let nblocks_ad = 1 + (NONCE_LEN + ad.len()) / n;
    let nb_it = (nblocks_c + 1).max(nblocks_ad - 1);

    m.enter(Phase::Init);
    let mut expanded = vec![0u8; n];
    expanded[..key.len()].copy_from_slice(key);
    inst.permute(&mut expanded, m);

    let mut out = vec![0u8; mlen];
    let mut tag = padded_block(&nonce_ad, 0, n);
    let mut prev = vec![0u8; n];
    let mut cur = expanded.clone();

    for i in 0..nb_it {
        let next = inst.lfsr_step(&cur);

        if i < nblocks_m {
            m.enter(Phase::Msg);
            let mut buf = vec![0u8; n];
            buf[..NONCE_LEN].copy_from_slice(nonce);
            xor(&mut buf, &cur);
            xor(&mut buf, &next);
            inst.permute(&mut buf, m);
            xor(&mut buf, &cur);
            xor(&mut buf, &next);
            let lo = i * n;
            let hi = mlen.min(lo + n);
            for k in lo..hi {
                out[k] = input[k] ^ buf[k - lo];
            }
        }

        if i > 0 && i <= nblocks_c {
            m.enter(Phase::Msg);
            let ct = if decrypt { input } else { &out[..] };
            let mut buf = padded_block(ct, i - 1, n);
            xor(&mut buf, &prev);
            xor(&mut buf, &next);
            inst.permute(&mut buf, m);
            xor(&mut buf, &prev);
            xor(&mut buf, &next);
            xor(&mut tag, &buf);
        }

        if i + 1 < nblocks_ad {
            m.enter(Phase::Ad);
            let mut buf = padded_block(&nonce_ad, i + 1, n);
            xor(&mut buf, &next);
            inst.permute(&mut buf, m);
            xor(&mut buf, &next);
            xor(&mut tag, &buf);
        }

        prev = cur;
        cur = next;
    }

    m.enter(Phase::Finalize);
    xor(&mut tag, &expanded);
    inst.permute(&mut tag, m);
    xor(&mut tag, &expanded);
    tag.truncate(inst.tag_len());
    (out, tag)
}

pub(crate) fn seal(
    inst: Instance,
    key: &[u8],
    nonce: &[u8],
    ad: &[u8],
    pt: &[u8],
    m: &mut Meter,
) -> (Vec<u8>, Vec<u8>) {
    run(inst, key, nonce, ad, pt, false, m)
}

pub(crate) fn open(
    inst: Instance,
    key: &[u8],
    nonce: &[u8],
    ad: &[u8],
    ct: &[u8],
    tag: &[u8],
    m: &mut Meter,
) -> Option<Vec<u8>> {
    let (pt, expected) = run(inst, key, nonce, ad, ct, true, m);
    super::release(pt, &expected, tag)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn padding_always_adds_a_marker_block() {
        assert_eq!(padded_block(&[], 0, 4), vec![1, 0, 0, 0]);
        assert_eq!(padded_block(&[9, 9, 9, 9], 0, 4), vec![9, 9, 9, 9]);
        assert_eq!(padded_block(&[9, 9, 9, 9], 1, 4), vec![1, 0, 0, 0]);
        assert_eq!(padded_block(&[9, 9, 9, 9, 9], 1, 4), vec![9, 1, 0, 0]);
    }

    #[test]
    fn lfsr_is_invertible_on_samples() {
        // distinct masks stay distinct over a run of steps
        for inst in [Instance::Dumbo, Instance::Jumbo, Instance::Delirium] {
            let mut a = vec![0u8; inst.block()];
            a[0] = 1;
            let mut seen = std::collections::HashSet::new();
            for _ in 0..500 {
                assert!(seen.insert(a.clone()));
                a = inst.lfsr_step(&a);
            }
        }
    }
}
