//! Symbolic cost model and closed-form primitive-call schedules.

pub mod cost_model;
pub mod schedule;

pub use lwc_ciphers::{Family, Phase, PhaseCounts, Primitive, Variant};
