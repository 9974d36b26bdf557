//! SPARKLE permutation family. Words are interleaved: `state[2i]` = x_i, `state[2i+1]` = y_i.

const RCON: [u32; 8] = [
    0xB7E15162, 0xBF715880, 0x38B4DA56, 0x324E7738, 0xBB1185EB, 0x4F7C7B57, 0xCFBFA1C8, 0xC2B3293D,
];

pub const STEPS_SLIM: usize = 7;
pub const STEPS_BIG: usize = 11;

#[inline(always)]
fn ell(x: u32) -> u32 {
    (x ^ (x << 16)).rotate_right(16)
}

/// `state` holds 2·`branches` words; `branches` ∈ {4, 6, 8}.
pub fn permute(state: &mut [u32], branches: usize, steps: usize) {
    assert!(matches!(branches, 4 | 6 | 8), "sparkle has 4, 6 or 8 branches");
    assert_eq!(state.len(), 2 * branches, "state width must match branch count");
    let nb = branches;

    for i in 0..steps {
        state[1] ^= RCON[i % 8];
        state[3] ^= i as u32;

        // Alzette on every branch
        for j in 0..nb {
            let rc = RCON[j];
            let (mut x, mut y) = (state[2 * j], state[2 * j + 1]);
            x = x.wrapping_add(y.rotate_right(31));
            y ^= x.rotate_right(24);
            x ^= rc;
            x = x.wrapping_add(y.rotate_right(17));
            y ^= x.rotate_right(17);
            x ^= rc;
            x = x.wrapping_add(y);
            y ^= x.rotate_right(31);
            x ^= rc;
            x = x.wrapping_add(y.rotate_right(24));
            y ^= x.rotate_right(16);
            x ^= rc;
            state[2 * j] = x;
            state[2 * j + 1] = y;
        }

        // Linear layer: Feistel with the ELL-mixed left half, then branch rotation
        let h = nb / 2;
        let (mut tx, mut ty) = (0u32, 0u32);
        for j in 0..h {
            tx ^= state[2 * j];
            ty ^= state[2 * j + 1];
        }
        let (tx, ty) = (ell(tx), ell(ty));
        let (x0, y0) = (state[0], state[1]);
        for j in 1..h {
            state[2 * (j - 1)] = state[2 * (j + h)] ^ state[2 * j] ^ ty;
            state[2 * (j - 1) + 1] = state[2 * (j + h) + 1] ^ state[2 * j + 1] ^ tx;
            state[2 * (j + h)] = state[2 * j];
            state[2 * (j + h) + 1] = state[2 * j + 1];
        }
        state[2 * (h - 1)] = state[2 * h] ^ x0 ^ ty;
        state[2 * (h - 1) + 1] = state[2 * h + 1] ^ y0 ^ tx;
        state[2 * h] = x0;
        state[2 * h + 1] = y0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ell_matches_its_definition() {
        assert_eq!(ell(0x0000_0001), 0x0001_0001);
        assert_eq!(ell(0x0001_0000), 0x0000_0001);
    }

    #[test]
    fn slim_and_big_differ() {
        let mut a = [0u32; 12];
        let mut b = [0u32; 12];
        permute(&mut a, 6, STEPS_SLIM);
        permute(&mut b, 6, STEPS_BIG);
        assert_ne!(a, b);
    }
}
