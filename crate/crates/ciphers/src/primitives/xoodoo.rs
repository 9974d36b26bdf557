//! Xoodoo[n_r]: 384-bit state as 3 planes × 4 lanes of 32 bits, lane index x + 4y.

pub type State = [u32; 12];

const RC: [u32; 12] = [
    0x058, 0x038, 0x3C0, 0x0D0, 0x120, 0x014, 0x060, 0x02C, 0x380, 0x0F0, 0x1A0, 0x012,
];

/// Runs the last `rounds` rounds (Xoodyak uses all 12).
pub fn permute(a: &mut State, rounds: usize) {
    assert!((1..=12).contains(&rounds), "xoodoo supports 1..=12 rounds");
    for &rc in &RC[12 - rounds..] {
        round(a, rc);
    }
}

#[inline(always)]
fn round(a: &mut State, rc: u32) {
    // theta
    let p: [u32; 4] = std::array::from_fn(|x| a[x] ^ a[x + 4] ^ a[x + 8]);
    let e: [u32; 4] = std::array::from_fn(|x| {
        let q = p[(x + 3) % 4];
        q.rotate_left(5) ^ q.rotate_left(14)
    });
    for y in 0..3 {
        for x in 0..4 {
            a[x + 4 * y] ^= e[x];
        }
    }

    // rho-west
    let a1 = [a[4], a[5], a[6], a[7]];
    for x in 0..4 {
        a[4 + x] = a1[(x + 3) % 4];
        a[8 + x] = a[8 + x].rotate_left(11);
    }

    // iota
    a[0] ^= rc;

    // chi
    for x in 0..4 {
        let (a0, a1, a2) = (a[x], a[x + 4], a[x + 8]);
        a[x] = a0 ^ (!a1 & a2);
        a[x + 4] = a1 ^ (!a2 & a0);
        a[x + 8] = a2 ^ (!a0 & a1);
    }

    // rho-east
    let a2 = [a[8], a[9], a[10], a[11]];
    for x in 0..4 {
        a[4 + x] = a[4 + x].rotate_left(1);
        a[8 + x] = a2[(x + 2) % 4].rotate_left(8);
    }
}

pub fn from_bytes(bytes: &[u8; 48]) -> State {
    std::array::from_fn(|i| u32::from_le_bytes(bytes[4 * i..4 * i + 4].try_into().unwrap()))
}

pub fn to_bytes(a: &State) -> [u8; 48] {
    let mut out = [0u8; 48];
    for (chunk, w) in out.chunks_exact_mut(4).zip(a) {
        chunk.copy_from_slice(&w.to_le_bytes());
    }
    out
}

/// Byte view helpers for duplex modes.
pub fn xor_byte(a: &mut State, pos: usize, b: u8) {
    a[pos / 4] ^= (b as u32) << (8 * (pos % 4));
}

pub fn byte_at(a: &State, pos: usize) -> u8 {
    (a[pos / 4] >> (8 * (pos % 4))) as u8
}
