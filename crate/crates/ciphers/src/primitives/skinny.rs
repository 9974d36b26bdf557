//! SKINNY-128-384 tweakable block cipher (TK3 tweakey, 16 cells of 8 bits, row-major).
//!
//! Romulus uses the 40-round "+" instance; the full-round cipher has 56 rounds.

pub const ROUNDS_PLUS: usize = 40;
pub const ROUNDS_FULL: usize = 56;

/// The 8-bit S-box built from its NOR/XOR circuit: four layers, bit permutation
/// between layers and a final swap of bits 1 and 2.
const fn sbox_entry(x: u8) -> u8 {
    let mut b = [0u8; 8];
    let mut i = 0;
    while i < 8 {
        b[i] = (x >> i) & 1;
        i += 1;
    }
    let mut r = 0;
    while r < 4 {
        b[4] ^= 1 ^ (b[7] | b[6]);
        b[0] ^= 1 ^ (b[3] | b[2]);
        if r < 3 {
            b = [b[5], b[3], b[0], b[4], b[6], b[7], b[1], b[2]];
        } else {
            let t = b[1];
            b[1] = b[2];
            b[2] = t;
        }
        r += 1;
    }
    let mut y = 0u8;
    let mut i = 0;
    while i < 8 {
        y |= b[i] << i;
        i += 1;
    }
    y
}

const fn build_sbox() -> [u8; 256] {
    let mut t = [0u8; 256];
    let mut i = 0;
    while i < 256 {
        t[i] = sbox_entry(i as u8);
        i += 1;
    }
    t
}

const SBOX: [u8; 256] = build_sbox();
const TWEAKEY_PERM: [usize; 16] = [9, 15, 8, 13, 10, 14, 12, 11, 0, 1, 2, 3, 4, 5, 6, 7];

#[inline(always)]
fn lfsr_tk2(x: u8) -> u8 {
    (x << 1) | (((x >> 7) ^ (x >> 5)) & 1)
}

#[inline(always)]
fn lfsr_tk3(x: u8) -> u8 {
    (x >> 1) | (((x ^ (x >> 6)) & 1) << 7)
}

/// Encrypts one block under the 384-bit tweakey TK1 ‖ TK2 ‖ TK3.
pub fn encrypt(block: &[u8; 16], tweakey: &[u8; 48], rounds: usize) -> [u8; 16] {
    let mut s = *block;
    let mut tk: [[u8; 16]; 3] =
        std::array::from_fn(|z| tweakey[16 * z..16 * z + 16].try_into().unwrap());
    let mut rc = 0u8;

    for _ in 0..rounds {
        for b in s.iter_mut() {
            *b = SBOX[*b as usize];
        }

        rc = ((rc << 1) & 0x3f) | (((rc >> 5) ^ (rc >> 4) ^ 1) & 1);
        s[0] ^= rc & 0xf;
        s[4] ^= rc >> 4;
        s[8] ^= 0x2;

        for i in 0..8 {
            s[i] ^= tk[0][i] ^ tk[1][i] ^ tk[2][i];
        }
        for (z, t) in tk.iter_mut().enumerate() {
            let old = *t;
            for i in 0..16 {
                t[i] = old[TWEAKEY_PERM[i]];
            }
            for b in t[..8].iter_mut() {
                *b = match z {
                    1 => lfsr_tk2(*b),
                    2 => lfsr_tk3(*b),
                    _ => *b,
                };
            }
        }

        // ShiftRows: row r rotates right by r
        for r in 1..4 {
            s[4 * r..4 * r + 4].rotate_right(r);
        }

        // MixColumns
        for c in 0..4 {
            let (a0, a1, a2, a3) = (s[c], s[4 + c], s[8 + c], s[12 + c]);
            let a1 = a1 ^ a2;
            let a2 = a2 ^ a0;
            let a3 = a3 ^ a2;
            s[c] = a3;
            s[4 + c] = a0;
            s[8 + c] = a1;
            s[12 + c] = a2;
        }
    }
    s
}
