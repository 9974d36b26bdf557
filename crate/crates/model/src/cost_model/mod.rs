//! Three-phase cost decomposition and the per-algorithm closed forms.

mod expr;
mod registry;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use lwc_ciphers::Variant;

pub use expr::{ceil, c, juxt, p, prod, quot, sum, Bindings, CostExpr, EvalError, ParseError, Rational, SYMBOLS};
pub use registry::{
    bindings, eval_row, expr_for, registry, registry_json, sparkle_table_form, Input, Quantity, RegistryEntry,
    Row, SymbolDoc,
};

pub fn int(v: u64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `3`, `3/2`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(r))
}

/// Primitive costs, fixed overheads, and the rates/sizes the closed forms refer to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostParams {
    pub b: Rational,
    /// Elephant's permutation.
    pub p: Rational,
    pub b_640: Rational,
    pub b_1024: Rational,
    pub c_k: Rational,
    pub c_n: Rational,
    pub c_a: Rational,
    pub c_m: Rational,
    pub c_f: Rational,
    pub r: u64,
    pub r_in: u64,
    pub r_out: u64,
    pub n: u64,
    pub d: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cost parameter `{0}` is negative")]
pub struct NegativeCost(pub &'static str);

impl CostParams {
    /// Everything zero, rates 1.
    pub fn zero() -> Self {
        CostParams {
            b: Rational::zero(),
            p: Rational::zero(),
            b_640: Rational::zero(),
            b_1024: Rational::zero(),
            c_k: Rational::zero(),
            c_n: Rational::zero(),
            c_a: Rational::zero(),
            c_m: Rational::zero(),
            c_f: Rational::zero(),
            r: 1,
            r_in: 1,
            r_out: 1,
            n: 1,
            d: 1,
        }
    }

    /// Unit primitive costs, no overheads, and the variant's own rates.
    pub fn unit(v: Variant) -> Self {
        let mut cp = CostParams {
            b: int(1),
            p: int(1),
            b_640: int(1),
            b_1024: int(1),
            ..CostParams::zero()
        };
        match v {
            Variant::Ascon128 | Variant::IsapA128a | Variant::IsapA128 => cp.r = 8,
            Variant::Ascon128a => cp.r = 16,
            Variant::ElephantDumbo => cp.r = 20,
            Variant::ElephantJumbo => cp.r = 22,
            Variant::ElephantDelirium => cp.r = 25,
            Variant::GiftCofb | Variant::PhotonBeetleAead128 => cp.r = 16,
            Variant::Grain128AeadV2 => {}
            Variant::RomulusN => {
                cp.r = 16;
                cp.n = 16;
            }
            Variant::Schwaemm256_128 => {
                cp.r = 32;
                cp.d = 32;
            }
            Variant::TinyJambu128 => cp.r = 4,
            Variant::Xoodyak => {
                cp.r = 24;
                cp.r_in = 44;
                cp.r_out = 24;
            }
        }
        cp
    }

    pub fn costs(&self) -> [(&'static str, &Rational); 9] {
        [
            ("b", &self.b),
            ("P", &self.p),
            ("b_640", &self.b_640),
            ("b_1024", &self.b_1024),
            ("c_k", &self.c_k),
            ("c_n", &self.c_n),
            ("c_A", &self.c_a),
            ("c_M", &self.c_m),
            ("c_f", &self.c_f),
        ]
    }

    pub fn sizes(&self) -> [(&'static str, u64); 5] {
        [("r", self.r), ("r_in", self.r_in), ("r_out", self.r_out), ("n", self.n), ("d", self.d)]
    }

    pub fn check(&self) -> Result<(), NegativeCost> {
        match self.costs().into_iter().find(|(_, v)| v.is_negative()) {
            Some((name, _)) => Err(NegativeCost(name)),
            None => Ok(()),
        }
    }
}

/// Per-phase costs; `total` is always the exact sum of the other four.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CostBreakdown {
    #[serde(serialize_with = "ser_rational")]
    pub init: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub process_ad: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub process_msg: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub finalize: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub total: Rational,
}

impl CostBreakdown {
    pub fn new(init: Rational, process_ad: Rational, process_msg: Rational, finalize: Rational) -> Self {
        let total = &init + &process_ad + &process_msg + &finalize;
        CostBreakdown { init, process_ad, process_msg, finalize, total }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero())
    }
}

pub fn eval_init(params: &CostParams) -> Rational {
    &params.c_k + &params.c_n
}

/// `(a·(T_p + c_A), m·(T_p + c_M))`.
pub fn eval_process(a: u64, m: u64, t_p: &Rational, params: &CostParams) -> (Rational, Rational) {
    (int(a) * (t_p + &params.c_a), int(m) * (t_p + &params.c_m))
}

pub fn eval_finalize(params: &CostParams) -> Rational {
    params.c_f.clone()
}

pub fn eval_total(a: u64, m: u64, t_p: &Rational, params: &CostParams) -> CostBreakdown {
    let (ad, msg) = eval_process(a, m, t_p, params);
    CostBreakdown::new(eval_init(params), ad, msg, eval_finalize(params))
}
