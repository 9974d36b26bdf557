//! Ascon-p over five 64-bit lanes (big-endian byte order).

pub type State = [u64; 5];

/// Applies the last `rounds` of the 12 Ascon rounds (p^a uses constants 12-a..12).
pub fn permute(s: &mut State, rounds: usize) {
    assert!((1..=12).contains(&rounds), "ascon-p supports 1..=12 rounds");
    for i in 12 - rounds..12 {
        round(s, (((0xf - i) << 4) | i) as u64);
    }
}

#[inline(always)]
fn round(s: &mut State, c: u64) {
    s[2] ^= c;

    s[0] ^= s[4];
    s[4] ^= s[3];
    s[2] ^= s[1];
    let t = [
        !s[0] & s[1],
        !s[1] & s[2],
        !s[2] & s[3],
        !s[3] & s[4],
        !s[4] & s[0],
    ];
    s[0] ^= t[1];
    s[1] ^= t[2];
    s[2] ^= t[3];
    s[3] ^= t[4];
    s[4] ^= t[0];
    s[1] ^= s[0];
    s[0] ^= s[4];
    s[3] ^= s[2];
    s[2] = !s[2];

    s[0] ^= s[0].rotate_right(19) ^ s[0].rotate_right(28);
    s[1] ^= s[1].rotate_right(61) ^ s[1].rotate_right(39);
    s[2] ^= s[2].rotate_right(1) ^ s[2].rotate_right(6);
    s[3] ^= s[3].rotate_right(10) ^ s[3].rotate_right(17);
    s[4] ^= s[4].rotate_right(7) ^ s[4].rotate_right(41);
}

pub fn load(bytes: &[u8; 40]) -> State {
    let mut s = [0u64; 5];
    for (lane, chunk) in s.iter_mut().zip(bytes.chunks_exact(8)) {
        *lane = u64::from_be_bytes(chunk.try_into().unwrap());
    }
    s
}

pub fn store(s: &State) -> [u8; 40] {
    let mut out = [0u8; 40];
    for (chunk, lane) in out.chunks_exact_mut(8).zip(s) {
        chunk.copy_from_slice(&lane.to_be_bytes());
    }
    out
}

/// XORs `data` into the state starting at byte `offset`.
pub fn xor_bytes(s: &mut State, offset: usize, data: &[u8]) {
    for (i, &b) in data.iter().enumerate() {
        let pos = offset + i;
        s[pos / 8] ^= (b as u64) << (56 - 8 * (pos % 8));
    }
}

pub fn byte_at(s: &State, pos: usize) -> u8 {
    (s[pos / 8] >> (56 - 8 * (pos % 8))) as u8
}
