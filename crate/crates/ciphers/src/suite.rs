//! Byte-level entry point to every counted primitive, with width checks.

use crate::counters::{Meter, OpCounters, Primitive};
use crate::primitives::{ascon, gift, grain, keccak, photon, skinny, sparkle, spongent, tinyjambu, xoodoo};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{primitive}: {field} must be {expected} bytes, got {got}")]
pub struct WidthError {
    pub primitive: Primitive,
    pub field: &'static str,
    pub expected: usize,
    pub got: usize,
}

/// (state bytes, key bytes) for one primitive; key is 0 for unkeyed permutations.
pub fn state_width(p: Primitive) -> (usize, usize) {
    match p {
        Primitive::AsconP12 | Primitive::AsconP8 | Primitive::AsconP6 | Primitive::AsconP1 => (40, 0),
        Primitive::Spongent160 => (20, 0),
        Primitive::Spongent176 => (22, 0),
        Primitive::KeccakF200 => (25, 0),
        Primitive::Gift128 => (16, 16),
        Primitive::GrainStep => (32, 0),
        Primitive::Photon256 => (32, 0),
        Primitive::Skinny128_384Plus => (16, 48),
        Primitive::Sparkle384Slim | Primitive::Sparkle384Big => (48, 0),
        Primitive::TinyJambuP640 | Primitive::TinyJambuP1024 => (16, 16),
        Primitive::Xoodoo12 => (48, 0),
    }
}

fn words_le(b: &[u8]) -> Vec<u32> {
    b.chunks_exact(4)
        .map(|c| u32::from_le_bytes(c.try_into().unwrap()))
        .collect()
}

fn store_le(words: &[u32], out: &mut [u8]) {
    for (c, w) in out.chunks_exact_mut(4).zip(words) {
        c.copy_from_slice(&w.to_le_bytes());
    }
}

/// Applies one invocation of `p` to `state` in place and returns the counters
/// of that single call (booked under the init phase).
///
/// Byte conventions: Ascon lanes big-endian; Xoodoo, SPARKLE and TinyJAMBU
/// words little-endian (SPARKLE words interleaved x0 y0 x1 y1 ..); Grain state
/// is LFSR ‖ NFSR, each 16 bytes little-endian with bit i = register cell i.
pub fn invoke(p: Primitive, state: &mut [u8], key: &[u8]) -> Result<OpCounters, WidthError> {
    let (sw, kw) = state_width(p);
    let err = |field, expected, got| WidthError {
        primitive: p,
        field,
        expected,
        got,
    };
    if state.len() != sw {
        return Err(err("state", sw, state.len()));
    }
    if key.len() != kw {
        return Err(err("key", kw, key.len()));
    }

    let mut m = Meter::new();
    m.tick(p);
    match p {
        Primitive::AsconP12 | Primitive::AsconP8 | Primitive::AsconP6 | Primitive::AsconP1 => {
            let rounds = match p {
                Primitive::AsconP12 => 12,
                Primitive::AsconP8 => 8,
                Primitive::AsconP6 => 6,
                _ => 1,
            };
            let mut s = ascon::load(state.as_ref().try_into().unwrap());
            ascon::permute(&mut s, rounds);
            state.copy_from_slice(&ascon::store(&s));
        }
        Primitive::Spongent160 => spongent::permute(state, spongent::Width::W160),
        Primitive::Spongent176 => spongent::permute(state, spongent::Width::W176),
        Primitive::KeccakF200 => keccak::permute(state.try_into().unwrap()),
        Primitive::Gift128 => {
            let out = gift::encrypt(state.as_ref().try_into().unwrap(), key.try_into().unwrap());
            state.copy_from_slice(&out);
        }
        Primitive::GrainStep => {
            let mut g = grain::State {
                lfsr: u128::from_le_bytes(state[..16].try_into().unwrap()),
                nfsr: u128::from_le_bytes(state[16..].try_into().unwrap()),
            };
            g.step16();
            state[..16].copy_from_slice(&g.lfsr.to_le_bytes());
            state[16..].copy_from_slice(&g.nfsr.to_le_bytes());
        }
        Primitive::Photon256 => photon::permute(state.try_into().unwrap()),
        Primitive::Skinny128_384Plus => {
            let out = skinny::encrypt(
                state.as_ref().try_into().unwrap(),
                key.try_into().unwrap(),
                skinny::ROUNDS_PLUS,
            );
            state.copy_from_slice(&out);
        }
        Primitive::Sparkle384Slim | Primitive::Sparkle384Big => {
            let steps = if p == Primitive::Sparkle384Slim {
                sparkle::STEPS_SLIM
            } else {
                sparkle::STEPS_BIG
            };
            let mut w = words_le(state);
            sparkle::permute(&mut w, 6, steps);
            store_le(&w, state);
        }
        Primitive::TinyJambuP640 | Primitive::TinyJambuP1024 => {
            let rounds = if p == Primitive::TinyJambuP640 { 640 } else { 1024 };
            let mut s: tinyjambu::State = words_le(state).try_into().unwrap();
            let k: [u32; 4] = words_le(key).try_into().unwrap();
            tinyjambu::permute(&mut s, &k, rounds);
            store_le(&s, state);
        }
        Primitive::Xoodoo12 => {
            let mut s = xoodoo::from_bytes(state.as_ref().try_into().unwrap());
            xoodoo::permute(&mut s, 12);
            state.copy_from_slice(&xoodoo::to_bytes(&s));
        }
    }
    Ok(m.finish(0, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_primitive_counts_once_and_moves_the_state() {
        for p in Primitive::ALL {
            let (sw, kw) = state_width(p);
            let mut a = vec![0u8; sw];
            let mut b = vec![0u8; sw];
            b[sw - 1] = 1;
            let key = vec![0x5a; kw];
            let ca = invoke(p, &mut a, &key).unwrap();
            invoke(p, &mut b, &key).unwrap();
            assert_eq!(ca.total_calls(), 1, "{p}");
            assert_eq!(ca.calls.get(crate::Phase::Init, p), 1, "{p}");
            assert_ne!(a, b, "{p}: distinct inputs collided");
        }
    }

    #[test]
    fn wrong_width_is_a_parameter_error() {
        let mut s = [0u8; 39];
        let e = invoke(Primitive::AsconP12, &mut s, &[]).unwrap_err();
        assert_eq!((e.field, e.expected, e.got), ("state", 40, 39));
        let mut s = [0u8; 16];
        assert!(invoke(Primitive::Gift128, &mut s, &[0; 15]).is_err());
    }
}
