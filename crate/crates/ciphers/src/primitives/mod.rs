//! Raw permutations and block ciphers, uninstrumented.

pub mod ascon;
pub mod gift;
pub mod grain;
pub mod keccak;
pub mod photon;
pub mod skinny;
pub mod sparkle;
pub mod spongent;
pub mod tinyjambu;
pub mod xoodoo;
