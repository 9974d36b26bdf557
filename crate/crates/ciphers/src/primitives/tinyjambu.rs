//! TinyJAMBU keyed permutation P_n: a 128-bit NFSR clocked n times, 32 steps at a time.

pub type State = [u32; 4];

/// `rounds` must be a multiple of 32; TinyJAMBU-128 uses 640 and 1024.
pub fn permute(s: &mut State, key: &[u32; 4], rounds: usize) {
    assert!(rounds % 32 == 0, "tinyjambu steps come in blocks of 32");
    for i in 0..rounds / 32 {
        let t1 = (s[1] >> 15) | (s[2] << 17); // s47
        let t2 = (s[2] >> 6) | (s[3] << 26); // s70
        let t3 = (s[2] >> 21) | (s[3] << 11); // s85
        let t4 = (s[2] >> 27) | (s[3] << 5); // s91
        let fb = s[0] ^ t1 ^ !(t2 & t3) ^ t4 ^ key[i & 3];
        s[0] = s[1];
        s[1] = s[2];
        s[2] = s[3];
        s[3] = fb;
    }
}

/// Bit-serial reference of the same NFSR, one step per loop; used as a test oracle.
#[cfg(test)]
pub(crate) fn permute_bitwise(s: &mut State, key: &[u32; 4], rounds: usize) {
    let bit = |s: &State, i: usize| (s[i / 32] >> (i % 32)) & 1;
    let kbit = |i: usize| (key[(i % 128) / 32] >> (i % 32)) & 1;
    for i in 0..rounds {
        let fb = bit(s, 0) ^ bit(s, 47) ^ (1 ^ (bit(s, 70) & bit(s, 85))) ^ bit(s, 91) ^ kbit(i);
        let mut carry = fb;
        for w in (0..4).rev() {
            let out = s[w] & 1;
            s[w] = (s[w] >> 1) | (carry << 31);
            carry = out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_parallel_matches_bit_serial() {
        let key = [0x03020100, 0x07060504, 0x0b0a0908, 0x0f0e0d0c];
        for rounds in [32, 640, 1024] {
            let mut a = [0x11111111, 0x2468ace0, 0xdeadbeef, 0x01234567];
            let mut b = a;
            permute(&mut a, &key, rounds);
            permute_bitwise(&mut b, &key, rounds);
            assert_eq!(a, b, "rounds = {rounds}");
        }
    }
}
