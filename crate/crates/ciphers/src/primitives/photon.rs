//! PHOTON_256: 8×8 grid of 4-bit cells, 12 rounds.
//!
//! Cell (i, j) is nibble 8i + j of the 32-byte state, low nibble first.

const D: usize = 8;
const ROUNDS: usize = 12;

const RC: [u8; ROUNDS] = [1, 3, 7, 14, 13, 11, 6, 12, 9, 2, 5, 10];
const IC: [u8; D] = [0, 1, 3, 7, 15, 14, 12, 8];
const SBOX: [u8; 16] = [
    0xc, 0x5, 0x6, 0xb, 0x9, 0x0, 0xa, 0xd, 0x3, 0xe, 0xf, 0x8, 0x4, 0x7, 0x1, 0x2,
];
const SERIAL_ROW: [u8; D] = [2, 4, 2, 11, 2, 8, 5, 6];

/// Multiplication in GF(2^4) modulo x^4 + x + 1.
const fn gf16_mul(mut a: u8, mut b: u8) -> u8 {
    let mut r = 0u8;
    while b != 0 {
        if b & 1 != 0 {
            r ^= a;
        }
        a <<= 1;
        if a & 0x10 != 0 {
            a ^= 0x13;
        }
        b >>= 1;
    }
    r
}

/// The MixColumnSerial matrix: Serial[2,4,2,11,2,8,5,6] raised to the 8th power.
const fn mix_matrix() -> [[u8; D]; D] {
    let mut serial = [[0u8; D]; D];
    let mut i = 0;
    while i < D - 1 {
        serial[i][i + 1] = 1;
        i += 1;
    }
    serial[D - 1] = SERIAL_ROW;

    let mut acc = serial;
    let mut p = 1;
    while p < D {
        let mut next = [[0u8; D]; D];
        let mut r = 0;
        while r < D {
            let mut c = 0;
            while c < D {
                let mut k = 0;
                let mut v = 0u8;
                while k < D {
                    v ^= gf16_mul(serial[r][k], acc[k][c]);
                    k += 1;
                }
                next[r][c] = v;
                c += 1;
            }
            r += 1;
        }
        acc = next;
        p += 1;
    }
    acc
}

const MIX: [[u8; D]; D] = mix_matrix();

pub fn permute(state: &mut [u8; 32]) {
    let mut s = [[0u8; D]; D];
    for (i, row) in s.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let n = i * D + j;
            *cell = (state[n / 2] >> (4 * (n & 1))) & 0xf;
        }
    }

    for &rc in &RC {
        // AddConstant
        for (row, &ic) in s.iter_mut().zip(&IC) {
            row[0] ^= rc ^ ic;
        }
        // SubCells
        for row in s.iter_mut() {
            for cell in row.iter_mut() {
                *cell = SBOX[*cell as usize];
            }
        }
        // ShiftRows: row i rotates left by i
        for (i, row) in s.iter_mut().enumerate() {
            row.rotate_left(i);
        }
        // MixColumnSerial
        let mut t = [[0u8; D]; D];
        for j in 0..D {
            for (i, trow) in t.iter_mut().enumerate() {
                let mut v = 0u8;
                for k in 0..D {
                    v ^= gf16_mul(MIX[i][k], s[k][j]);
                }
                trow[j] = v;
            }
        }
        s = t;
    }

    state.fill(0);
    for (i, row) in s.iter().enumerate() {
        for (j, &cell) in row.iter().enumerate() {
            let n = i * D + j;
            state[n / 2] |= cell << (4 * (n & 1));
        }
    }
}
