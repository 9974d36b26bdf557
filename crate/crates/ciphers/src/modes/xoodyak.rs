//! Xoodyak AEAD: Cyclist in keyed mode over Xoodoo[12].
//!
//! Cyclist(K, ε, ε) → Absorb(N) → Absorb(A) → Encrypt(P) → Squeeze(16).

use crate::counters::{Meter, Phase, Primitive};
use crate::primitives::xoodoo::{self, State};

const R_KIN: usize = 44;
const R_KOUT: usize = 24;
const TAG_LEN: usize = 16;

struct Cyclist {
    a: State,
    /// true while the last call was Up (the state has just been permuted or is fresh)
    up: bool,
}

impl Cyclist {
    fn up(&mut self, cu: u8, m: &mut Meter) {
        xoodoo::xor_byte(&mut self.a, 47, cu);
        m.tick(Primitive::Xoodoo12);
        xoodoo::permute(&mut self.a, 12);
        self.up = true;
    }

    fn down(&mut self, block: &[u8], cd: u8) {
        for (i, &b) in block.iter().enumerate() {
            xoodoo::xor_byte(&mut self.a, i, b);
        }
        xoodoo::xor_byte(&mut self.a, block.len(), 0x01);
        xoodoo::xor_byte(&mut self.a, 47, cd);
        self.up = false;
    }

    fn absorb_any(&mut self, data: &[u8], rate: usize, cd: u8, m: &mut Meter) {
        let mut first = true;
        let mut chunks = data.chunks(rate);
        loop {
            let block = chunks.next().unwrap_or(&[]);
            if !self.up {
                self.up(0x00, m);
            }
            self.down(block, if first { cd } else { 0x00 });
            first = false;
            if chunks.len() == 0 {
                break;
            }
        }
    }

    fn keyed(key: &[u8]) -> Cyclist {
        let mut c = Cyclist {
            a: [0; 12],
            up: true,
        };
        let mut kb = key.to_vec();
        kb.push(0x00); // empty key id, followed by its length
        // AbsorbKey: the first Down needs no preceding Up
        c.down(&kb, 0x02);
        c
    }

    /// Crypt with cU = 0x80 on the first block. `decrypt` selects which side feeds Down.
    fn crypt(&mut self, input: &[u8], decrypt: bool, m: &mut Meter) -> Vec<u8> {
        let mut out = Vec::with_capacity(input.len());
        let mut cu = 0x80;
        let mut chunks = input.chunks(R_KOUT);
        loop {
            let block = chunks.next().unwrap_or(&[]);
            self.up(cu, m);
            cu = 0x00;
            let o: Vec<u8> = block
                .iter()
                .enumerate()
                .map(|(i, &b)| b ^ xoodoo::byte_at(&self.a, i))
                .collect();
            let plain = if decrypt { o.clone() } else { block.to_vec() };
            self.down(&plain, 0x00);
            out.extend(o);
            if chunks.len() == 0 {
                break;
            }
        }
        out
    }

    fn squeeze(&mut self, len: usize, m: &mut Meter) -> Vec<u8> {
        self.up(0x40, m);
        (0..len).map(|i| xoodoo::byte_at(&self.a, i)).collect()
    }
}

fn begin(key: &[u8], nonce: &[u8], ad: &[u8], m: &mut Meter) -> Cyclist {
    let mut c = Cyclist::keyed(key);
    m.enter(Phase::Init);
    c.absorb_any(nonce, R_KIN, 0x03, m);
    m.enter(Phase::Ad);
    c.absorb_any(ad, R_KIN, 0x03, m);
    c
}

pub(crate) fn seal(
    key: &[u8],
    nonce: &[u8],
    ad: &[u8],
    pt: &[u8],
    m: &mut Meter,
) -> (Vec<u8>, Vec<u8>) {
    let mut c = begin(key, nonce, ad, m);
    m.enter(Phase::Msg);
    let ct = c.crypt(pt, false, m);
    m.enter(Phase::Finalize);
    let tag = c.squeeze(TAG_LEN, m);
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
    let mut c = begin(key, nonce, ad, m);
    m.enter(Phase::Msg);
    let pt = c.crypt(ct, true, m);
    m.enter(Phase::Finalize);
    let expected = c.squeeze(TAG_LEN, m);
    super::release(pt, &expected, tag)
}
