//! GIFT-128 in the bitsliced byte layout used by GIFT-COFB.
//!
//! Slice `s[k]` holds bit k of every nibble (bit j of the word = nibble j);
//! block bytes load big-endian, 4 bytes per slice.

const RC: [u8; 40] = [
    0x01, 0x03, 0x07, 0x0F, 0x1F, 0x3E, 0x3D, 0x3B, 0x37, 0x2F, 0x1E, 0x3C, 0x39, 0x33, 0x27, 0x0E,
    0x1D, 0x3A, 0x35, 0x2B, 0x16, 0x2C, 0x18, 0x30, 0x21, 0x02, 0x05, 0x0B, 0x17, 0x2E, 0x1C, 0x38,
    0x31, 0x23, 0x06, 0x0D, 0x1B, 0x36, 0x2D, 0x1A,
];

/// Moves bit `4b + i` of `s` to bit `b + 8 * pos[i]`.
#[inline(always)]
fn rowperm(s: u32, pos: [u32; 4]) -> u32 {
    let mut t = 0u32;
    for b in 0..8 {
        for (i, &p) in pos.iter().enumerate() {
            t |= ((s >> (4 * b + i as u32)) & 1) << (b + 8 * p);
        }
    }
    t
}

pub fn encrypt(block: &[u8; 16], key: &[u8; 16]) -> [u8; 16] {
    let mut s: [u32; 4] =
        std::array::from_fn(|i| u32::from_be_bytes(block[4 * i..4 * i + 4].try_into().unwrap()));
    let mut w: [u16; 8] =
        std::array::from_fn(|i| u16::from_be_bytes([key[2 * i], key[2 * i + 1]]));

    for &rc in &RC {
        // SubCells
        s[1] ^= s[0] & s[2];
        s[0] ^= s[1] & s[3];
        s[2] ^= s[0] | s[1];
        s[3] ^= s[2];
        s[1] ^= s[3];
        s[3] ^= 0xffff_ffff;
        s[2] ^= s[0] & s[1];
        s.swap(0, 3);

        // PermBits
        s[0] = rowperm(s[0], [0, 3, 2, 1]);
        s[1] = rowperm(s[1], [1, 0, 3, 2]);
        s[2] = rowperm(s[2], [2, 1, 0, 3]);
        s[3] = rowperm(s[3], [3, 2, 1, 0]);

        // AddRoundKey and constant
        s[2] ^= ((w[2] as u32) << 16) | w[3] as u32;
        s[1] ^= ((w[6] as u32) << 16) | w[7] as u32;
        s[3] ^= 0x8000_0000 ^ rc as u32;

        // key schedule
        let t6 = w[6].rotate_right(2);
        let t7 = w[7].rotate_right(12);
        w.copy_within(0..6, 2);
        w[0] = t6;
        w[1] = t7;
    }

    let mut out = [0u8; 16];
    for (chunk, word) in out.chunks_exact_mut(4).zip(s) {
        chunk.copy_from_slice(&word.to_be_bytes());
    }
    out
}
