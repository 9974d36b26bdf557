//! Instrumented NIST LWC finalist AEAD schemes.
//!
//! Every primitive call made by a mode is booked against the phase it runs in
//! (init / ad / msg / finalize), so measured counts can be compared with a
//! closed-form schedule.

mod counters;
mod id;
pub mod kat;
mod modes;
pub mod primitives;
mod suite;

pub use counters::{OpCounters, Phase, PhaseCounts, Primitive};
pub use id::{valid_names, Family, UnknownAlgorithm, Variant};
pub use suite::{invoke, state_width, WidthError};

use counters::Meter;

/// Key, nonce and tag sizes in bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct AeadParams {
    pub variant: Variant,
    pub key_len: usize,
    pub nonce_len: usize,
    pub tag_len: usize,
}

pub fn params(v: Variant) -> AeadParams {
    let (key_len, nonce_len, tag_len) = match v {
        Variant::Ascon128 | Variant::Ascon128a => (16, 16, 16),
        Variant::ElephantDumbo | Variant::ElephantJumbo => (16, 12, 8),
        Variant::ElephantDelirium => (16, 12, 16),
        Variant::GiftCofb => (16, 16, 16),
        Variant::Grain128AeadV2 => (16, 12, 8),
        Variant::IsapA128a | Variant::IsapA128 => (16, 16, 16),
        Variant::PhotonBeetleAead128 => (16, 16, 16),
        Variant::RomulusN => (16, 16, 16),
        Variant::Schwaemm256_128 => (16, 32, 16),
        Variant::TinyJambu128 => (16, 12, 8),
        Variant::Xoodyak => (16, 16, 16),
    };
    AeadParams {
        variant: v,
        key_len,
        nonce_len,
        tag_len,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SealResult {
    pub ciphertext: Vec<u8>,
    pub tag: Vec<u8>,
    pub counters: OpCounters,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Opened {
    pub plaintext: Vec<u8>,
    pub counters: OpCounters,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AeadError {
    #[error("{variant}: {field} must be {expected} bytes, got {got}")]
    Parameter {
        variant: Variant,
        field: &'static str,
        expected: usize,
        got: usize,
    },
    /// Tag mismatch. Counters of the rejected operation are still reported.
    #[error("authentication failed")]
    Authentication { counters: Box<OpCounters> },
}

fn check(v: Variant, field: &'static str, expected: usize, got: usize) -> Result<(), AeadError> {
    if expected == got {
        Ok(())
    } else {
        Err(AeadError::Parameter {
            variant: v,
            field,
            expected,
            got,
        })
    }
}

pub fn seal(v: Variant, key: &[u8], nonce: &[u8], ad: &[u8], pt: &[u8]) -> Result<SealResult, AeadError> {
    let p = params(v);
    check(v, "key", p.key_len, key.len())?;
    check(v, "nonce", p.nonce_len, nonce.len())?;
    let mut m = Meter::new();
    let (ciphertext, tag) = modes::seal(v, key, nonce, ad, pt, &mut m);
    debug_assert_eq!(ciphertext.len(), pt.len());
    debug_assert_eq!(tag.len(), p.tag_len);
    Ok(SealResult {
        ciphertext,
        tag,
        counters: m.finish(ad.len(), pt.len()),
    })
}

pub fn open(
    v: Variant,
    key: &[u8],
    nonce: &[u8],
    ad: &[u8],
    ct: &[u8],
    tag: &[u8],
) -> Result<Opened, AeadError> {
    let p = params(v);
    check(v, "key", p.key_len, key.len())?;
    check(v, "nonce", p.nonce_len, nonce.len())?;
    check(v, "tag", p.tag_len, tag.len())?;
    let mut m = Meter::new();
    let pt = modes::open(v, key, nonce, ad, ct, tag, &mut m);
    let counters = m.finish(ad.len(), ct.len());
    match pt {
        Some(plaintext) => Ok(Opened { plaintext, counters }),
        None => Err(AeadError::Authentication {
            counters: Box::new(counters),
        }),
    }
}

/// A cipher instance accumulating counters across operations until reset.
///
/// Not shared during an operation (`&mut self`), but `Send`.
#[derive(Debug, Clone)]
pub struct Cipher {
    variant: Variant,
    counters: OpCounters,
}

impl Cipher {
    pub fn new(variant: Variant) -> Self {
        Cipher {
            variant,
            counters: OpCounters::default(),
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn params(&self) -> AeadParams {
        params(self.variant)
    }

    pub fn seal(&mut self, key: &[u8], nonce: &[u8], ad: &[u8], pt: &[u8]) -> Result<SealResult, AeadError> {
        let r = seal(self.variant, key, nonce, ad, pt)?;
        self.counters.merge(&r.counters);
        Ok(r)
    }

    pub fn open(
        &mut self,
        key: &[u8],
        nonce: &[u8],
        ad: &[u8],
        ct: &[u8],
        tag: &[u8],
    ) -> Result<Opened, AeadError> {
        let r = open(self.variant, key, nonce, ad, ct, tag);
        match &r {
            Ok(o) => self.counters.merge(&o.counters),
            Err(AeadError::Authentication { counters }) => self.counters.merge(counters),
            Err(_) => {}
        }
        r
    }

    pub fn counters(&self) -> OpCounters {
        self.counters
    }

    pub fn reset_counters(&mut self) {
        self.counters = OpCounters::default();
    }
}
