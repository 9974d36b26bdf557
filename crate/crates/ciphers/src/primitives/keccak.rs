//! Keccak-f[200]: 25 lanes of 8 bits, lane (x, y) at byte x + 5y, 18 rounds.

const ROUNDS: usize = 18;

/// Round constants from the degree-8 LFSR, truncated to the lane width.
const fn round_constants() -> [u8; ROUNDS] {
    let mut out = [0u8; ROUNDS];
    let mut r: u8 = 1;
    let mut i = 0;
    while i < ROUNDS {
        let mut rc = 0u8;
        let mut j = 0;
        while j < 7 {
            // bit j of the lane constant sits at position 2^j - 1
            if r & 1 != 0 && (1u32 << j) - 1 < 8 {
                rc |= 1 << ((1u32 << j) - 1);
            }
            r = if r & 0x80 != 0 { (r << 1) ^ 0x71 } else { r << 1 };
            j += 1;
        }
        out[i] = rc;
        i += 1;
    }
    out
}

/// Rho offsets, reduced modulo the lane width.
const fn rho_offsets() -> [u32; 25] {
    let mut out = [0u32; 25];
    let (mut x, mut y) = (1usize, 0usize);
    let mut t = 0u32;
    while t < 24 {
        out[x + 5 * y] = ((t + 1) * (t + 2) / 2) % 8;
        let nx = y;
        let ny = (2 * x + 3 * y) % 5;
        x = nx;
        y = ny;
        t += 1;
    }
    out
}

const RC: [u8; ROUNDS] = round_constants();
const RHO: [u32; 25] = rho_offsets();

pub fn permute(a: &mut [u8; 25]) {
    for &rc in &RC {
        let c: [u8; 5] = std::array::from_fn(|x| a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20]);
        for x in 0..5 {
            let d = c[(x + 4) % 5] ^ c[(x + 1) % 5].rotate_left(1);
            for y in 0..5 {
                a[x + 5 * y] ^= d;
            }
        }

        let mut b = [0u8; 25];
        for x in 0..5 {
            for y in 0..5 {
                b[y + 5 * ((2 * x + 3 * y) % 5)] = a[x + 5 * y].rotate_left(RHO[x + 5 * y]);
            }
        }

        for y in 0..5 {
            for x in 0..5 {
                a[x + 5 * y] = b[x + 5 * y] ^ (!b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y]);
            }
        }

        a[0] ^= rc;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_match_the_truncated_keccak_table() {
        assert_eq!(
            RC,
            [
                0x01, 0x82, 0x8A, 0x00, 0x8B, 0x01, 0x81, 0x09, 0x8A, 0x88, 0x09, 0x0A, 0x8B,
                0x8B, 0x89, 0x03, 0x02, 0x80
            ]
        );
    }

    #[test]
    fn rho_offsets_match_the_reduced_table() {
        // 64-bit offsets mod 8 for (x, y) = (1,0), (0,1), (2,2), (4,4)
        assert_eq!(RHO[1], 1);
        assert_eq!(RHO[5], 36 % 8);
        assert_eq!(RHO[12], 43 % 8);
        assert_eq!(RHO[24], 14 % 8);
        assert_eq!(RHO[0], 0);
    }
}
