//! Per-phase primitive invocation counters.
//!
//! Counting is always on: every metered primitive call is a single array
//! increment, so timing runs exercise exactly the code that count runs do.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Phase {
    Init,
    Ad,
    Msg,
    Finalize,
}

impl Phase {
    pub const ALL: [Phase; 4] = [Phase::Init, Phase::Ad, Phase::Msg, Phase::Finalize];

    pub fn as_str(self) -> &'static str {
        match self {
            Phase::Init => "init",
            Phase::Ad => "ad",
            Phase::Msg => "msg",
            Phase::Finalize => "finalize",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A countable primitive invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Primitive {
    AsconP12,
    AsconP8,
    AsconP6,
    AsconP1,
    Spongent160,
    Spongent176,
    KeccakF200,
    Gift128,
    /// Sixteen Grain clocks: one keystream byte plus one authentication byte.
    GrainStep,
    Photon256,
    Skinny128_384Plus,
    Sparkle384Slim,
    Sparkle384Big,
    TinyJambuP640,
    TinyJambuP1024,
    Xoodoo12,
}

impl Primitive {
    pub const COUNT: usize = 16;

    pub const ALL: [Primitive; Primitive::COUNT] = [
        Primitive::AsconP12,
        Primitive::AsconP8,
        Primitive::AsconP6,
        Primitive::AsconP1,
        Primitive::Spongent160,
        Primitive::Spongent176,
        Primitive::KeccakF200,
        Primitive::Gift128,
        Primitive::GrainStep,
        Primitive::Photon256,
        Primitive::Skinny128_384Plus,
        Primitive::Sparkle384Slim,
        Primitive::Sparkle384Big,
        Primitive::TinyJambuP640,
        Primitive::TinyJambuP1024,
        Primitive::Xoodoo12,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Primitive::AsconP12 => "ascon-p12",
            Primitive::AsconP8 => "ascon-p8",
            Primitive::AsconP6 => "ascon-p6",
            Primitive::AsconP1 => "ascon-p1",
            Primitive::Spongent160 => "spongent-pi160",
            Primitive::Spongent176 => "spongent-pi176",
            Primitive::KeccakF200 => "keccak-f200",
            Primitive::Gift128 => "gift-128",
            Primitive::GrainStep => "grain-step16",
            Primitive::Photon256 => "photon-256",
            Primitive::Skinny128_384Plus => "skinny-128-384+",
            Primitive::Sparkle384Slim => "sparkle384-7",
            Primitive::Sparkle384Big => "sparkle384-11",
            Primitive::TinyJambuP640 => "tinyjambu-p640",
            Primitive::TinyJambuP1024 => "tinyjambu-p1024",
            Primitive::Xoodoo12 => "xoodoo-12",
        }
    }

    pub fn from_label(label: &str) -> Option<Primitive> {
        Primitive::ALL.into_iter().find(|p| p.label() == label)
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl Serialize for Primitive {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl fmt::Display for Primitive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Invocation counts indexed by phase and primitive.
///
/// Serialized as `{"init": {"label": n, ..}, "ad": {..}, "msg": {..}, "finalize": {..}}`
/// with zero entries omitted.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PhaseCounts {
    cells: [[u64; Primitive::COUNT]; 4],
}

impl PhaseCounts {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, phase: Phase, prim: Primitive) -> u64 {
        self.cells[phase.index()][prim.index()]
    }

    pub fn add(&mut self, phase: Phase, prim: Primitive, n: u64) {
        self.cells[phase.index()][prim.index()] += n;
    }

    pub fn phase_total(&self, phase: Phase) -> u64 {
        self.cells[phase.index()].iter().sum()
    }

    pub fn total(&self) -> u64 {
        Phase::ALL.iter().map(|&p| self.phase_total(p)).sum()
    }

    /// Non-zero entries of one phase, in primitive order.
    pub fn entries(&self, phase: Phase) -> impl Iterator<Item = (Primitive, u64)> + '_ {
        Primitive::ALL
            .into_iter()
            .map(move |p| (p, self.get(phase, p)))
            .filter(|&(_, n)| n > 0)
    }

    pub fn labels(&self, phase: Phase) -> Vec<&'static str> {
        self.entries(phase).map(|(p, _)| p.label()).collect()
    }

    /// Every (phase, primitive) cell where `self` and `other` differ.
    pub fn diff(&self, other: &PhaseCounts) -> Vec<(Phase, Primitive, u64, u64)> {
        let mut out = Vec::new();
        for phase in Phase::ALL {
            for prim in Primitive::ALL {
                let (a, b) = (self.get(phase, prim), other.get(phase, prim));
                if a != b {
                    out.push((phase, prim, a, b));
                }
            }
        }
        out
    }

    pub fn merge(&mut self, other: &PhaseCounts) {
        for phase in Phase::ALL {
            for prim in Primitive::ALL {
                self.add(phase, prim, other.get(phase, prim));
            }
        }
    }

    fn to_maps(self) -> BTreeMap<&'static str, BTreeMap<&'static str, u64>> {
        Phase::ALL
            .iter()
            .map(|&ph| {
                (
                    ph.as_str(),
                    self.entries(ph).map(|(p, n)| (p.label(), n)).collect(),
                )
            })
            .collect()
    }
}

impl fmt::Debug for PhaseCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.to_maps()).finish()
    }
}

impl Serialize for PhaseCounts {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_maps().serialize(s)
    }
}

impl<'de> Deserialize<'de> for PhaseCounts {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = BTreeMap::<String, BTreeMap<String, u64>>::deserialize(d)?;
        let mut out = PhaseCounts::new();
        for (phase, entries) in raw {
            let phase = Phase::ALL
                .into_iter()
                .find(|p| p.as_str() == phase)
                .ok_or_else(|| D::Error::custom(format!("unknown phase `{phase}`")))?;
            for (label, n) in entries {
                let prim = Primitive::from_label(&label)
                    .ok_or_else(|| D::Error::custom(format!("unknown primitive `{label}`")))?;
                out.add(phase, prim, n);
            }
        }
        Ok(out)
    }
}

/// Measured counts for one or more operations on a cipher instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OpCounters {
    pub calls: PhaseCounts,
    pub bytes_ad: u64,
    pub bytes_msg: u64,
}

impl OpCounters {
    pub fn init_calls(&self) -> u64 {
        self.calls.phase_total(Phase::Init)
    }
    pub fn ad_calls(&self) -> u64 {
        self.calls.phase_total(Phase::Ad)
    }
    pub fn msg_calls(&self) -> u64 {
        self.calls.phase_total(Phase::Msg)
    }
    pub fn finalize_calls(&self) -> u64 {
        self.calls.phase_total(Phase::Finalize)
    }
    pub fn total_calls(&self) -> u64 {
        self.calls.total()
    }

    pub fn merge(&mut self, other: &OpCounters) {
        self.calls.merge(&other.calls);
        self.bytes_ad += other.bytes_ad;
        self.bytes_msg += other.bytes_msg;
    }
}

/// Counter sink threaded through a mode; tracks which phase is active.
#[derive(Debug)]
pub(crate) struct Meter {
    phase: Phase,
    counts: PhaseCounts,
}

impl Meter {
    pub(crate) fn new() -> Self {
        Meter {
            phase: Phase::Init,
            counts: PhaseCounts::new(),
        }
    }

    #[inline]
    pub(crate) fn enter(&mut self, phase: Phase) {
        self.phase = phase;
    }

    #[inline]
    pub(crate) fn phase(&self) -> Phase {
        self.phase
    }

    #[inline]
    pub(crate) fn tick(&mut self, prim: Primitive) {
        self.counts.cells[self.phase.index()][prim.index()] += 1;
    }

    pub(crate) fn finish(self, bytes_ad: usize, bytes_msg: usize) -> OpCounters {
        OpCounters {
            calls: self.counts,
            bytes_ad: bytes_ad as u64,
            bytes_msg: bytes_msg as u64,
        }
    }
}
