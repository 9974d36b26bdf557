//! Grain-128AEADv2 keystream generator.
//!
//! Registers are held LSB-first: bit i of `lfsr` is s_i, bit i of `nfsr` is b_i.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct State {
    pub lfsr: u128,
    pub nfsr: u128,
}

#[inline(always)]
fn bit(x: u128, i: u32) -> u128 {
    (x >> i) & 1
}

impl State {
    /// Register loading before initialization clocking: b = K, s = IV ‖ 1^31 ‖ 0.
    pub fn load(key: &[u8; 16], iv: &[u8; 12]) -> State {
        let mut ivw = [0u8; 16];
        ivw[..12].copy_from_slice(iv);
        State {
            lfsr: u128::from_le_bytes(ivw) | (0x7fff_ffffu128 << 96),
            nfsr: u128::from_le_bytes(*key),
        }
    }

    /// Pre-output bit y_t of the current state.
    #[inline(always)]
    pub fn output(&self) -> u128 {
        let (s, b) = (self.lfsr, self.nfsr);
        let h = (bit(b, 12) & bit(s, 8))
            ^ (bit(s, 13) & bit(s, 20))
            ^ (bit(b, 95) & bit(s, 42))
            ^ (bit(s, 60) & bit(s, 79))
            ^ (bit(b, 12) & bit(b, 95) & bit(s, 94));
        h ^ bit(s, 93)
            ^ bit(b, 2)
            ^ bit(b, 15)
            ^ bit(b, 36)
            ^ bit(b, 45)
            ^ bit(b, 64)
            ^ bit(b, 73)
            ^ bit(b, 89)
    }

    #[inline(always)]
    fn feedback(&self) -> (u128, u128) {
        let (s, b) = (self.lfsr, self.nfsr);
        let f = bit(s, 0) ^ bit(s, 7) ^ bit(s, 38) ^ bit(s, 70) ^ bit(s, 81) ^ bit(s, 96);
        let g = bit(s, 0)
            ^ bit(b, 0)
            ^ bit(b, 26)
            ^ bit(b, 56)
            ^ bit(b, 91)
            ^ bit(b, 96)
            ^ (bit(b, 3) & bit(b, 67))
            ^ (bit(b, 11) & bit(b, 13))
            ^ (bit(b, 17) & bit(b, 18))
            ^ (bit(b, 27) & bit(b, 59))
            ^ (bit(b, 40) & bit(b, 48))
            ^ (bit(b, 61) & bit(b, 65))
            ^ (bit(b, 68) & bit(b, 84))
            ^ (bit(b, 22) & bit(b, 24) & bit(b, 25))
            ^ (bit(b, 70) & bit(b, 78) & bit(b, 82))
            ^ (bit(b, 88) & bit(b, 92) & bit(b, 93) & bit(b, 95));
        (f, g)
    }

    /// One clock. `inject_s` / `inject_b` are XORed into the new LFSR / NFSR bit
    /// (used for y feedback and key re-introduction). Returns y_t.
    #[inline(always)]
    pub fn clock_with(&mut self, inject_s: u128, inject_b: u128) -> u128 {
        let y = self.output();
        let (f, g) = self.feedback();
        self.lfsr = (self.lfsr >> 1) | ((f ^ inject_s) << 127);
        self.nfsr = (self.nfsr >> 1) | ((g ^ inject_b) << 127);
        y
    }

    #[inline(always)]
    pub fn clock(&mut self) -> u128 {
        self.clock_with(0, 0)
    }

    /// Sixteen clocks: returns (keystream byte from even clocks, auth byte from odd clocks),
    /// LSB first.
    #[inline]
    pub fn step16(&mut self) -> (u8, u8) {
        let (mut z, mut a) = (0u8, 0u8);
        for j in 0..8 {
            z |= (self.clock() as u8) << j;
            a |= (self.clock() as u8) << j;
        }
        (z, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loading_sets_the_constant_padding() {
        let s = State::load(&[0; 16], &[0; 12]);
        assert_eq!(s.lfsr >> 96, 0x7fff_ffff);
        assert_eq!(s.nfsr, 0);
        let s = State::load(&[1; 16], &[0xff; 12]);
        assert_eq!(s.lfsr & ((1u128 << 96) - 1), (1u128 << 96) - 1);
        assert_eq!(s.nfsr & 0xff, 1);
    }

    #[test]
    fn step16_is_sixteen_clocks() {
        let mut a = State::load(&[7; 16], &[9; 12]);
        let mut b = a.clone();
        let (z, m) = a.step16();
        let bits: Vec<u8> = (0..16).map(|_| b.clock() as u8).collect();
        let z2 = (0..8).fold(0u8, |acc, j| acc | (bits[2 * j] << j));
        let m2 = (0..8).fold(0u8, |acc, j| acc | (bits[2 * j + 1] << j));
        assert_eq!((z, m), (z2, m2));
        assert_eq!(a, b);
    }
}
