use crate::counters::{Meter, Phase, Primitive};
use crate::primitives::ascon::{self, State};

pub(crate) struct AsconParams {
    iv: u64,
    rate: usize,
    pb: Primitive,
}

pub(crate) const ASCON_128: AsconParams = AsconParams {
    iv: 0x80400c0600000000,
    rate: 8,
    pb: Primitive::AsconP6,
};

pub(crate) const ASCON_128A: AsconParams = AsconParams {
    iv: 0x80800c0800000000,
    rate: 16,
    pb: Primitive::AsconP8,
};

fn rounds(p: Primitive) -> usize {
    match p {
        Primitive::AsconP12 => 12,
        Primitive::AsconP8 => 8,
        Primitive::AsconP6 => 6,
        Primitive::AsconP1 => 1,
        _ => unreachable!("not an ascon primitive"),
    }
}

pub(crate) fn p(s: &mut State, prim: Primitive, m: &mut Meter) {
    m.tick(prim);
    ascon::permute(s, rounds(prim));
}

fn key_words(key: &[u8]) -> (u64, u64) {
    (
        u64::from_be_bytes(key[..8].try_into().unwrap()),
        u64::from_be_bytes(key[8..16].try_into().unwrap()),
    )
}

fn begin(cfg: &AsconParams, key: &[u8], nonce: &[u8], ad: &[u8], m: &mut Meter) -> State {
    let (k0, k1) = key_words(key);
    let mut s: State = [
        cfg.iv,
        k0,
        k1,
        u64::from_be_bytes(nonce[..8].try_into().unwrap()),
        u64::from_be_bytes(nonce[8..16].try_into().unwrap()),
    ];
    m.enter(Phase::Init);
    p(&mut s, Primitive::AsconP12, m);
    s[3] ^= k0;
    s[4] ^= k1;

    m.enter(Phase::Ad);
    if !ad.is_empty() {
        let mut blocks = ad.chunks_exact(cfg.rate);
        for block in &mut blocks {
            ascon::xor_bytes(&mut s, 0, block);
            p(&mut s, cfg.pb, m);
        }
        let rest = blocks.remainder();
        ascon::xor_bytes(&mut s, 0, rest);
        ascon::xor_bytes(&mut s, rest.len(), &[0x80]);
        p(&mut s, cfg.pb, m);
    }
    s[4] ^= 1;
    s
}

fn finish(cfg: &AsconParams, s: &mut State, key: &[u8], m: &mut Meter) -> Vec<u8> {
    let (k0, k1) = key_words(key);
    let w = cfg.rate / 8;
    s[w] ^= k0;
    s[w + 1] ^= k1;
    m.enter(Phase::Finalize);
    p(s, Primitive::AsconP12, m);
    s[3] ^= k0;
    s[4] ^= k1;
    [s[3].to_be_bytes(), s[4].to_be_bytes()].concat()
}

pub(crate) fn seal(
    cfg: &AsconParams,
    key: &[u8],
    nonce: &[u8],
    ad: &[u8],
    pt: &[u8],
    m: &mut Meter,
) -> (Vec<u8>, Vec<u8>) {
    let mut s = begin(cfg, key, nonce, ad, m);
    m.enter(Phase::Msg);
    let mut ct = Vec::with_capacity(pt.len());
    let mut blocks = pt.chunks_exact(cfg.rate);
    for block in &mut blocks {
        ascon::xor_bytes(&mut s, 0, block);
        ct.extend((0..cfg.rate).map(|i| ascon::byte_at(&s, i)));
        p(&mut s, cfg.pb, m);
    }
    let rest = blocks.remainder();
    ascon::xor_bytes(&mut s, 0, rest);
    ct.extend((0..rest.len()).map(|i| ascon::byte_at(&s, i)));
    ascon::xor_bytes(&mut s, rest.len(), &[0x80]);

    let tag = finish(cfg, &mut s, key, m);
    (ct, tag)
}

pub(crate) fn open(
    cfg: &AsconParams,
    key: &[u8],
    nonce: &[u8],
    ad: &[u8],
    ct: &[u8],
    tag: &[u8],
    m: &mut Meter,
) -> Option<Vec<u8>> {
    let mut s = begin(cfg, key, nonce, ad, m);
    m.enter(Phase::Msg);
    let mut pt = Vec::with_capacity(ct.len());
    let mut blocks = ct.chunks_exact(cfg.rate);
    for block in &mut blocks {
        for (i, &c) in block.iter().enumerate() {
            let b = ascon::byte_at(&s, i) ^ c;
            pt.push(b);
            ascon::xor_bytes(&mut s, i, &[b]);
        }
        p(&mut s, cfg.pb, m);
    }
    let rest = blocks.remainder();
    for (i, &c) in rest.iter().enumerate() {
        let b = ascon::byte_at(&s, i) ^ c;
        pt.push(b);
        ascon::xor_bytes(&mut s, i, &[b]);
    }
    ascon::xor_bytes(&mut s, rest.len(), &[0x80]);

    let expected = finish(cfg, &mut s, key, m);
    super::release(pt, &expected, tag)
}
