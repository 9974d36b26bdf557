//! Grain-128AEADv2. Input bits are consumed LSB-first; each input byte costs one
//! 16-clock step (8 keystream + 8 authentication bits).

use crate::counters::{Meter, Phase, Primitive};
use crate::primitives::grain::State;

struct Auth {
    acc: u64,
    reg: u64,
}

impl Auth {
    #[inline]
    fn absorb(&mut self, byte: u8, auth_bits: u8) {
        for j in 0..8 {
            if (byte >> j) & 1 == 1 {
                self.acc ^= self.reg;
            }
            self.reg = (self.reg >> 1) | (((auth_bits >> j) & 1) as u64) << 63;
        }
    }
}

/// DER length encoding of the associated-data length in bytes.
pub(crate) fn der_length(len: usize) -> Vec<u8> {
    if len < 128 {
        return vec![len as u8];
    }
    let be = (len as u64).to_be_bytes();
    let skip = be.iter().take_while(|&&b| b == 0).count();
    let mut out = vec![0x80 | (8 - skip) as u8];
    out.extend_from_slice(&be[skip..]);
    out
}

fn init(key: &[u8], nonce: &[u8], m: &mut Meter) -> (State, Auth) {
    let key: [u8; 16] = key.try_into().unwrap();
    let mut st = State::load(&key, nonce.try_into().unwrap());
    let k = u128::from_le_bytes(key);
    let (mut acc, mut reg) = (0u64, 0u64);

    m.enter(Phase::Init);
    for step in 0..32 {
        m.tick(Primitive::GrainStep);
        for j in 0..16 {
            let t = 16 * step + j;
            match t {
                0..=319 => {
                    let y = st.output();
                    st.clock_with(y, y);
                }
                320..=383 => {
                    let i = (t - 320) as u32;
                    let y = st.output();
                    st.clock_with(y ^ ((k >> (64 + i)) & 1), y ^ ((k >> i) & 1));
                }
                384..=447 => acc |= (st.clock() as u64) << (t - 384),
                _ => reg |= (st.clock() as u64) << (t - 448),
            }
        }
    }
    (st, Auth { acc, reg })
}

fn run(key: &[u8], nonce: &[u8], ad: &[u8], input: &[u8], decrypt: bool, m: &mut Meter) -> (Vec<u8>, Vec<u8>) {
    let (mut st, mut auth) = init(key, nonce, m);

    m.enter(Phase::Ad);
    for &b in der_length(ad.len()).iter().chain(ad) {
        m.tick(Primitive::GrainStep);
        let (_, a) = st.step16();
        auth.absorb(b, a);
    }

    m.enter(Phase::Msg);
    let mut out = Vec::with_capacity(input.len());
    for &b in input {
        m.tick(Primitive::GrainStep);
        let (z, a) = st.step16();
        let o = b ^ z;
        auth.absorb(if decrypt { o } else { b }, a);
        out.push(o);
    }

    m.enter(Phase::Finalize);
    m.tick(Primitive::GrainStep);
    let (_, a) = st.step16();
    auth.absorb(0x01, a);

    (out, auth.acc.to_le_bytes().to_vec())
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
