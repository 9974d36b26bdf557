//! Closed-form primitive-call counts per phase, derived without running a cipher.
//!
//! Each variant's schedule is a table of terms; a term books `count` calls of
//! one primitive in one phase. Block-driven counts share one formula,
//! parameterized by padding rules:
//!
//! ```text
//! len = 0             → 0 (skip) or 1 (one padded block)
//! otherwise           → ⌈(len + bias)/rate⌉ + [extra_block ∧ rate | len + bias] + offset
//! plus, if der_prefix → the DER length-prefix size of len
//! ```

use serde::{Deserialize, Serialize};

use lwc_ciphers::{Phase, PhaseCounts, Primitive, Variant};

use crate::cost_model::{int, CostBreakdown, CostParams, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EmptyRule {
    Skip,
    OnePaddedBlock,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FullFinalBlockRule {
    NoExtra,
    ExtraBlock,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Input {
    Ad,
    Msg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockRule {
    pub input: Input,
    pub rate: u64,
    pub empty: EmptyRule,
    pub full_final: FullFinalBlockRule,
    pub bias: u64,
    pub offset: i64,
    pub der_prefix: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    Always,
    AdNonEmpty,
    MsgNonEmpty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Count {
    Fixed(u64),
    Blocks(BlockRule),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Term {
    pub phase: Phase,
    pub primitive: Primitive,
    pub count: Count,
    pub when: Condition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScheduleParams {
    pub variant: Variant,
    pub rate_ad: u64,
    pub rate_msg: u64,
    pub terms: Vec<Term>,
}

/// `⌈len/rate⌉`.
pub fn block_count(len: u64, rate: u64) -> u64 {
    assert!(rate >= 1, "rate must be at least 1");
    len.div_ceil(rate)
}

/// Bytes of a DER length field: one short-form byte below 128, else 1 + length bytes.
pub fn der_len(len: u64) -> u64 {
    if len < 128 {
        1
    } else {
        1 + (64 - len.leading_zeros() as u64).div_ceil(8)
    }
}

impl BlockRule {
    fn new(input: Input, rate: u64) -> Self {
        BlockRule {
            input,
            rate,
            empty: EmptyRule::Skip,
            full_final: FullFinalBlockRule::NoExtra,
            bias: 0,
            offset: 0,
            der_prefix: false,
        }
    }

    fn padded(mut self) -> Self {
        self.empty = EmptyRule::OnePaddedBlock;
        self
    }

    fn extra(mut self) -> Self {
        self.full_final = FullFinalBlockRule::ExtraBlock;
        self
    }

    fn bias(mut self, bias: u64) -> Self {
        self.bias = bias;
        self
    }

    fn offset(mut self, offset: i64) -> Self {
        self.offset = offset;
        self
    }

    fn der(mut self) -> Self {
        self.der_prefix = true;
        self
    }

    pub fn count(&self, len: u64) -> u64 {
        let blocks = if len == 0 {
            match self.empty {
                EmptyRule::Skip => 0,
                EmptyRule::OnePaddedBlock => 1,
            }
        } else {
            let x = len + self.bias;
            let extra = self.full_final == FullFinalBlockRule::ExtraBlock && x % self.rate == 0;
            let n = block_count(x, self.rate) + extra as u64;
            n.checked_add_signed(self.offset).expect("offset below zero")
        };
        blocks + if self.der_prefix { der_len(len) } else { 0 }
    }
}

fn ad(rate: u64) -> BlockRule {
    BlockRule::new(Input::Ad, rate)
}

fn msg(rate: u64) -> BlockRule {
    BlockRule::new(Input::Msg, rate)
}

struct Builder {
    terms: Vec<Term>,
}

impl Builder {
    fn fixed(mut self, phase: Phase, primitive: Primitive, n: u64) -> Self {
        self.terms.push(Term { phase, primitive, count: Count::Fixed(n), when: Condition::Always });
        self
    }

    fn fixed_if(mut self, phase: Phase, primitive: Primitive, n: u64, when: Condition) -> Self {
        self.terms.push(Term { phase, primitive, count: Count::Fixed(n), when });
        self
    }

    fn blocks(mut self, primitive: Primitive, rule: BlockRule) -> Self {
        let phase = match rule.input {
            Input::Ad => Phase::Ad,
            Input::Msg => Phase::Msg,
        };
        self.terms.push(Term { phase, primitive, count: Count::Blocks(rule), when: Condition::Always });
        self
    }
}

/// The schedule of one variant, traced from its reference implementation.
pub fn schedule_params(v: Variant) -> ScheduleParams {
    use Phase::{Ad, Finalize, Init, Msg};
    use Primitive as Pr;
    let b = Builder { terms: Vec::new() };
    let (rate_ad, rate_msg, b) = match v {
        // Padding always adds a block, so a full final block costs one more call;
        // the last message block is absorbed by the finalization permutation.
        Variant::Ascon128 | Variant::Ascon128a => {
            let (r, pb) = if v == Variant::Ascon128 { (8, Pr::AsconP6) } else { (16, Pr::AsconP8) };
            (
                r,
                r,
                b.fixed(Init, Pr::AsconP12, 1)
                    .blocks(pb, ad(r).extra())
                    .blocks(pb, msg(r).extra().offset(-1))
                    .fixed(Finalize, Pr::AsconP12, 1),
            )
        }
        // Session keys (2·p12 + 127·p_B each) are booked as init; the
        // encryption key is only derived when there is something to encrypt.
        Variant::IsapA128a | Variant::IsapA128 => {
            let (pb, pe) = if v == Variant::IsapA128a { (Pr::AsconP1, Pr::AsconP6) } else { (Pr::AsconP12, Pr::AsconP12) };
            (
                8,
                8,
                b.fixed(Init, Pr::AsconP12, 3)
                    .fixed(Init, pb, 127)
                    .fixed_if(Init, Pr::AsconP12, 2, Condition::MsgNonEmpty)
                    .fixed_if(Init, pb, 127, Condition::MsgNonEmpty)
                    .blocks(Pr::AsconP12, ad(8).padded().extra())
                    .blocks(Pr::AsconP12, msg(8).padded().extra())
                    .blocks(pe, msg(8))
                    .fixed(Finalize, Pr::AsconP12, 1),
            )
        }
        Variant::ElephantDumbo | Variant::ElephantJumbo | Variant::ElephantDelirium => {
            let (n, pr) = match v {
                Variant::ElephantDumbo => (20, Pr::Spongent160),
                Variant::ElephantJumbo => (22, Pr::Spongent176),
                _ => (25, Pr::KeccakF200),
            };
            // AD shares its first block with the 12-byte nonce; the ciphertext
            // authentication always covers a padded final block.
            (
                n,
                n,
                b.fixed(Init, pr, 1)
                    .blocks(pr, ad(n).bias(12 + 1).offset(-1))
                    .blocks(pr, msg(n))
                    .blocks(pr, msg(n).padded().extra())
                    .fixed(Finalize, pr, 1),
            )
        }
        Variant::GiftCofb => (
            16,
            16,
            b.fixed(Init, Pr::Gift128, 1).blocks(Pr::Gift128, ad(16).padded()).blocks(Pr::Gift128, msg(16)),
        ),
        Variant::Grain128AeadV2 => (
            1,
            1,
            b.fixed(Init, Pr::GrainStep, 32)
                .blocks(Pr::GrainStep, ad(1).der())
                .blocks(Pr::GrainStep, msg(1))
                .fixed(Finalize, Pr::GrainStep, 1),
        ),
        Variant::PhotonBeetleAead128 => (
            16,
            16,
            b.blocks(Pr::Photon256, ad(16)).blocks(Pr::Photon256, msg(16)).fixed(Finalize, Pr::Photon256, 1),
        ),
        // AD is consumed two blocks per call, the last call also taking the nonce.
        Variant::RomulusN => (
            32,
            16,
            b.blocks(Pr::Skinny128_384Plus, ad(32).bias(16).padded())
                .blocks(Pr::Skinny128_384Plus, msg(16).padded()),
        ),
        // Every block but the last goes through the slim permutation; the last
        // one through the big permutation.
        Variant::Schwaemm256_128 => (
            32,
            32,
            b.fixed(Init, Pr::Sparkle384Big, 1)
                .blocks(Pr::Sparkle384Slim, ad(32).offset(-1))
                .fixed_if(Ad, Pr::Sparkle384Big, 1, Condition::AdNonEmpty)
                .blocks(Pr::Sparkle384Slim, msg(32).offset(-1))
                .fixed_if(Msg, Pr::Sparkle384Big, 1, Condition::MsgNonEmpty),
        ),
        Variant::TinyJambu128 => (
            4,
            4,
            b.fixed(Init, Pr::TinyJambuP1024, 1)
                .fixed(Init, Pr::TinyJambuP640, 3)
                .blocks(Pr::TinyJambuP640, ad(4))
                .blocks(Pr::TinyJambuP1024, msg(4))
                .fixed(Finalize, Pr::TinyJambuP1024, 1)
                .fixed(Finalize, Pr::TinyJambuP640, 1),
        ),
        Variant::Xoodyak => (
            44,
            24,
            b.fixed(Init, Pr::Xoodoo12, 1)
                .blocks(Pr::Xoodoo12, ad(44).padded())
                .blocks(Pr::Xoodoo12, msg(24).padded())
                .fixed(Finalize, Pr::Xoodoo12, 1),
        ),
    };
    ScheduleParams { variant: v, rate_ad, rate_msg, terms: b.terms }
}

/// Predicted per-phase counts for one seal (or open) at (|A|, |M|) bytes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhasePlan {
    pub variant: Variant,
    pub len_a: u64,
    pub len_m: u64,
    pub counts: PhaseCounts,
}

impl PhasePlan {
    pub fn init_calls(&self) -> u64 {
        self.counts.phase_total(Phase::Init)
    }
    pub fn ad_calls(&self) -> u64 {
        self.counts.phase_total(Phase::Ad)
    }
    pub fn msg_calls(&self) -> u64 {
        self.counts.phase_total(Phase::Msg)
    }
    pub fn finalize_calls(&self) -> u64 {
        self.counts.phase_total(Phase::Finalize)
    }
    pub fn total_calls(&self) -> u64 {
        self.counts.total()
    }
    pub fn primitive_labels(&self, phase: Phase) -> Vec<&'static str> {
        self.counts.labels(phase)
    }
}

pub fn plan(v: Variant, len_a: u64, len_m: u64) -> PhasePlan {
    let sp = schedule_params(v);
    let mut counts = PhaseCounts::new();
    for t in &sp.terms {
        let on = match t.when {
            Condition::Always => true,
            Condition::AdNonEmpty => len_a > 0,
            Condition::MsgNonEmpty => len_m > 0,
        };
        if !on {
            continue;
        }
        let n = match t.count {
            Count::Fixed(n) => n,
            Count::Blocks(rule) => rule.count(match rule.input {
                Input::Ad => len_a,
                Input::Msg => len_m,
            }),
        };
        counts.add(t.phase, t.primitive, n);
    }
    PhasePlan { variant: v, len_a, len_m, counts }
}

/// Cost of one call of `prim` under `params`.
pub fn primitive_cost(prim: Primitive, params: &CostParams) -> &Rational {
    match prim {
        Primitive::TinyJambuP640 => &params.b_640,
        Primitive::TinyJambuP1024 => &params.b_1024,
        Primitive::Spongent160 | Primitive::Spongent176 | Primitive::KeccakF200 => &params.p,
        _ => &params.b,
    }
}

pub fn predicted_cost(plan: &PhasePlan, params: &CostParams) -> CostBreakdown {
    let phase_cost = |ph: Phase| -> Rational {
        plan.counts.entries(ph).map(|(prim, n)| int(n) * primitive_cost(prim, params)).sum()
    };
    CostBreakdown::new(
        phase_cost(Phase::Init) + &params.c_k + &params.c_n,
        phase_cost(Phase::Ad) + int(plan.ad_calls()) * &params.c_a,
        phase_cost(Phase::Msg) + int(plan.msg_calls()) * &params.c_m,
        phase_cost(Phase::Finalize) + &params.c_f,
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseTotals {
    pub init: u64,
    pub ad: u64,
    pub msg: u64,
    pub finalize: u64,
}

/// `{algorithm, len_A, len_M, phases: {init, ad, msg, finalize}, primitives}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanDoc {
    pub algorithm: String,
    #[serde(rename = "len_A")]
    pub len_a: u64,
    #[serde(rename = "len_M")]
    pub len_m: u64,
    pub phases: PhaseTotals,
    pub primitives: PhaseCounts,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlanDocError {
    #[error(transparent)]
    Json(#[from] JsonError),
    #[error(transparent)]
    Algorithm(#[from] lwc_ciphers::UnknownAlgorithm),
    #[error("phase totals {0:?} disagree with the per-primitive counts")]
    Totals(PhaseTotals),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid plan JSON: {0}")]
pub struct JsonError(pub String);

impl PhasePlan {
    pub fn to_doc(&self) -> PlanDoc {
        PlanDoc {
            algorithm: self.variant.slug().to_string(),
            len_a: self.len_a,
            len_m: self.len_m,
            phases: PhaseTotals {
                init: self.init_calls(),
                ad: self.ad_calls(),
                msg: self.msg_calls(),
                finalize: self.finalize_calls(),
            },
            primitives: self.counts,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("plan serializes")
    }

    /// Inverse of `to_json`; the phase totals must match the primitive counts.
    pub fn from_json(text: &str) -> Result<PhasePlan, PlanDocError> {
        let doc: PlanDoc = serde_json::from_str(text).map_err(|e| JsonError(e.to_string()))?;
        let plan = PhasePlan {
            variant: doc.algorithm.parse()?,
            len_a: doc.len_a,
            len_m: doc.len_m,
            counts: doc.primitives,
        };
        if plan.to_doc().phases != doc.phases {
            return Err(PlanDocError::Totals(doc.phases));
        }
        Ok(plan)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_count_examples() {
        assert_eq!(block_count(16, 8), 2);
        assert_eq!(block_count(17, 8), 3);
        assert_eq!(block_count(0, 8), 0);
    }

    #[test]
    fn der_lengths() {
        assert_eq!(der_len(0), 1);
        assert_eq!(der_len(127), 1);
        assert_eq!(der_len(128), 2);
        assert_eq!(der_len(255), 2);
        assert_eq!(der_len(256), 3);
        assert_eq!(der_len(65536), 4);
    }

    #[test]
    fn ascon_skips_empty_ad() {
        let p = plan(Variant::Ascon128, 0, 8);
        assert_eq!(p.ad_calls(), 0);
        assert_eq!(p.msg_calls(), 1);
    }

    #[test]
    fn tinyjambu_phase_primitives() {
        let p = plan(Variant::TinyJambu128, 8, 8);
        assert_eq!(p.primitive_labels(Phase::Ad), vec!["tinyjambu-p640"]);
        assert_eq!(p.primitive_labels(Phase::Msg), vec!["tinyjambu-p1024"]);
    }

    #[test]
    fn predicted_cost_examples() {
        let cp = CostParams::unit(Variant::GiftCofb);
        let empty = PhasePlan { variant: Variant::GiftCofb, len_a: 0, len_m: 0, counts: PhaseCounts::new() };
        assert_eq!(predicted_cost(&empty, &cp), CostBreakdown::zero());

        let mut counts = PhaseCounts::new();
        counts.add(Phase::Ad, Primitive::Gift128, 2);
        counts.add(Phase::Msg, Primitive::Gift128, 3);
        let p = PhasePlan { counts, ..empty };
        assert_eq!(predicted_cost(&p, &cp).total, int(5));

        let mut counts = PhaseCounts::new();
        counts.add(Phase::Init, Primitive::TinyJambuP640, 6);
        counts.add(Phase::Ad, Primitive::TinyJambuP640, 2);
        counts.add(Phase::Msg, Primitive::TinyJambuP1024, 2);
        counts.add(Phase::Finalize, Primitive::TinyJambuP1024, 4);
        let p = PhasePlan { variant: Variant::TinyJambu128, len_a: 0, len_m: 0, counts };
        assert_eq!(predicted_cost(&p, &CostParams::unit(Variant::TinyJambu128)).total, int(14));
    }

    #[test]
    fn plan_json_round_trip() {
        let p = plan(Variant::IsapA128a, 9, 3);
        let text = p.to_json();
        assert_eq!(PhasePlan::from_json(&text).unwrap(), p);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["phases"]["ad"], 2);
        assert_eq!(v["len_A"], 9);
        let tampered = text.replacen("\"ad\": 2", "\"ad\": 3", 1);
        assert!(matches!(PhasePlan::from_json(&tampered), Err(PlanDocError::Totals(_))));
        assert!(PhasePlan::from_json("{").is_err());
    }
}
