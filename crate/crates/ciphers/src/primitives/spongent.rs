//! Spongent-π[160] and Spongent-π[176]. Bit i of the state is bit (i mod 8) of byte i/8.

const SBOX: [u8; 16] = [
    0xE, 0xD, 0xB, 0x0, 0x2, 0x1, 0x4, 0xF, 0x7, 0xA, 0x8, 0x5, 0x9, 0xC, 0x3, 0x6,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Width {
    W160,
    W176,
}

impl Width {
    pub fn bytes(self) -> usize {
        match self {
            Width::W160 => 20,
            Width::W176 => 22,
        }
    }

    fn rounds(self) -> usize {
        match self {
            Width::W160 => 80,
            Width::W176 => 90,
        }
    }

    fn counter_init(self) -> u8 {
        match self {
            Width::W160 => 0x75,
            Width::W176 => 0x45,
        }
    }
}

#[inline(always)]
fn counter_step(l: u8) -> u8 {
    ((l << 1) | (((l >> 6) ^ (l >> 5)) & 1)) & 0x7f
}

pub fn permute(state: &mut [u8], width: Width) {
    let n = width.bytes();
    assert_eq!(state.len(), n, "spongent state width mismatch");
    let bits = 8 * n;
    let mut lc = width.counter_init();

    for _ in 0..width.rounds() {
        state[0] ^= lc;
        state[n - 1] ^= lc.reverse_bits();
        lc = counter_step(lc);

        for b in state.iter_mut() {
            *b = SBOX[(*b & 0xf) as usize] | (SBOX[(*b >> 4) as usize] << 4);
        }

        let mut t = [0u8; 22];
        for i in 0..bits {
            let dest = if i == bits - 1 {
                bits - 1
            } else {
                (i * bits / 4) % (bits - 1)
            };
            t[dest / 8] |= ((state[i / 8] >> (i % 8)) & 1) << (dest % 8);
        }
        state.copy_from_slice(&t[..n]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counter_has_full_period() {
        let mut l = 0x75u8;
        let mut period = 0;
        loop {
            l = counter_step(l);
            period += 1;
            if l == 0x75 {
                break;
            }
        }
        assert_eq!(period, 127);
    }

    #[test]
    fn player_is_a_bit_permutation() {
        for w in [Width::W160, Width::W176] {
            let bits = 8 * w.bytes();
            let mut hit = vec![false; bits];
            for i in 0..bits {
                let d = if i == bits - 1 { bits - 1 } else { (i * bits / 4) % (bits - 1) };
                hit[d] = true;
            }
            assert!(hit.into_iter().all(|h| h));
        }
    }
}
