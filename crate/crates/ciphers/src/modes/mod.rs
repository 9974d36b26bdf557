//! AEAD modes. Each exposes one-shot `seal`/`open` over a `Meter`.

use subtle::ConstantTimeEq;

use crate::counters::Meter;
use crate::id::Variant;

mod ascon;
mod elephant;
mod gift_cofb;
pub(crate) mod grain;
mod isap;
mod photon_beetle;
mod romulus;
mod schwaemm;
mod tinyjambu;
mod xoodyak;

/// Full-length constant-time tag comparison.
pub(crate) fn tags_equal(expected: &[u8], given: &[u8]) -> bool {
    expected.len() == given.len() && bool::from(expected.ct_eq(given))
}

/// Releases the plaintext only if the tag verifies.
pub(crate) fn release(pt: Vec<u8>, expected: &[u8], given: &[u8]) -> Option<Vec<u8>> {
    if tags_equal(expected, given) {
        Some(pt)
    } else {
        None
    }
}

pub(crate) fn seal(
    v: Variant,
    key: &[u8],
    nonce: &[u8],
    ad: &[u8],
    pt: &[u8],
    m: &mut Meter,
) -> (Vec<u8>, Vec<u8>) {
    use elephant::Instance::*;
    match v {
        Variant::Ascon128 => ascon::seal(&ascon::ASCON_128, key, nonce, ad, pt, m),
        Variant::Ascon128a => ascon::seal(&ascon::ASCON_128A, key, nonce, ad, pt, m),
        Variant::ElephantDumbo => elephant::seal(Dumbo, key, nonce, ad, pt, m),
        Variant::ElephantJumbo => elephant::seal(Jumbo, key, nonce, ad, pt, m),
        Variant::ElephantDelirium => elephant::seal(Delirium, key, nonce, ad, pt, m),
        Variant::GiftCofb => gift_cofb::seal(key, nonce, ad, pt, m),
        Variant::Grain128AeadV2 => grain::seal(key, nonce, ad, pt, m),
        Variant::IsapA128a => isap::seal(&isap::ISAP_A_128A, key, nonce, ad, pt, m),
        Variant::IsapA128 => isap::seal(&isap::ISAP_A_128, key, nonce, ad, pt, m),
        Variant::PhotonBeetleAead128 => photon_beetle::seal(key, nonce, ad, pt, m),
        Variant::RomulusN => romulus::seal(key, nonce, ad, pt, m),
        Variant::Schwaemm256_128 => schwaemm::seal(key, nonce, ad, pt, m),
        Variant::TinyJambu128 => tinyjambu::seal(key, nonce, ad, pt, m),
        Variant::Xoodyak => xoodyak::seal(key, nonce, ad, pt, m),
    }
}

pub(crate) fn open(
    v: Variant,
    key: &[u8],
    nonce: &[u8],
    ad: &[u8],
    ct: &[u8],
    tag: &[u8],
    m: &mut Meter,
) -> Option<Vec<u8>> {
    use elephant::Instance::*;
    match v {
        Variant::Ascon128 => ascon::open(&ascon::ASCON_128, key, nonce, ad, ct, tag, m),
        Variant::Ascon128a => ascon::open(&ascon::ASCON_128A, key, nonce, ad, ct, tag, m),
        Variant::ElephantDumbo => elephant::open(Dumbo, key, nonce, ad, ct, tag, m),
        Variant::ElephantJumbo => elephant::open(Jumbo, key, nonce, ad, ct, tag, m),
        Variant::ElephantDelirium => elephant::open(Delirium, key, nonce, ad, ct, tag, m),
        Variant::GiftCofb => gift_cofb::open(key, nonce, ad, ct, tag, m),
        Variant::Grain128AeadV2 => grain::open(key, nonce, ad, ct, tag, m),
        Variant::IsapA128a => isap::open(&isap::ISAP_A_128A, key, nonce, ad, ct, tag, m),
        Variant::IsapA128 => isap::open(&isap::ISAP_A_128, key, nonce, ad, ct, tag, m),
        Variant::PhotonBeetleAead128 => photon_beetle::open(key, nonce, ad, ct, tag, m),
        Variant::RomulusN => romulus::open(key, nonce, ad, ct, tag, m),
        Variant::Schwaemm256_128 => schwaemm::open(key, nonce, ad, ct, tag, m),
        Variant::TinyJambu128 => tinyjambu::open(key, nonce, ad, ct, tag, m),
        Variant::Xoodyak => xoodyak::open(key, nonce, ad, ct, tag, m),
    }
}
