//! The ten closed-form rows and how each row's symbols bind to byte lengths.
//!
//! Rows are stored as written in the comparison table, ceilings included only
//! where the table has them. SPARKLE is the exception: it uses the
//! ceiling-bearing four-term form; the table's own spelling is kept separately
//! by `sparkle_table_form`.

use serde::Serialize;

use lwc_ciphers::{Family, Variant};

use super::expr::{c, ceil, juxt, p, prod, quot, sum, Bindings, CostExpr, EvalError, Rational};
use super::{int, CostParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Input {
    Ad,
    Msg,
}

impl Input {
    fn pick(self, len_a: u64, len_m: u64) -> u64 {
        match self {
            Input::Ad => len_a,
            Input::Msg => len_m,
        }
    }
}

/// What a row symbol stands for, in terms of (|A|, |M|) in bytes and `CostParams`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Quantity {
    Bytes { input: Input },
    Bits { input: Input },
    /// `⌈len / size⌉`, `size` naming a `CostParams` size field.
    Blocks { input: Input, size: &'static str },
    /// The `CostParams` field of the same name.
    Param,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymbolDoc {
    pub symbol: &'static str,
    pub meaning: &'static str,
    pub binding: Quantity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub family: Family,
    pub expr: CostExpr,
    pub symbols: Vec<SymbolDoc>,
}

fn doc(symbol: &'static str, meaning: &'static str, binding: Quantity) -> SymbolDoc {
    SymbolDoc { symbol, meaning, binding }
}

fn param(symbol: &'static str, meaning: &'static str) -> SymbolDoc {
    doc(symbol, meaning, Quantity::Param)
}

const B: (&str, &str) = ("b", "cost of one permutation call");

fn row(family: Family) -> Row {
    use Input::{Ad, Msg};
    use Quantity::*;
    let b = || param(B.0, B.1);
    let (expr, symbols) = match family {
        Family::Ascon => (
            sum(vec![prod(vec![p("l_A"), p("b")]), prod(vec![p("l_P"), p("b")])]),
            vec![
                doc("l_A", "associated-data blocks", Blocks { input: Ad, size: "r" }),
                b(),
                doc("l_P", "plaintext blocks", Blocks { input: Msg, size: "r" }),
            ],
        ),
        Family::Elephant => (
            sum(vec![prod(vec![p("ℓ_M"), p("P")]), prod(vec![p("ℓ_A"), p("P")])]),
            vec![
                doc("ℓ_M", "message blocks", Blocks { input: Msg, size: "r" }),
                param("P", "cost of one call to the variant's permutation"),
                doc("ℓ_A", "associated-data blocks", Blocks { input: Ad, size: "r" }),
            ],
        ),
        Family::GiftCofb => (
            sum(vec![p("ℓ_A"), p("ℓ_M")]),
            vec![
                doc("ℓ_A", "associated-data blocks", Blocks { input: Ad, size: "r" }),
                doc("ℓ_M", "message blocks", Blocks { input: Msg, size: "r" }),
            ],
        ),
        Family::Grain128Aead => (
            sum(vec![p("|M|"), p("|AD|")]),
            vec![
                doc("|M|", "message length in bits", Bits { input: Msg }),
                doc("|AD|", "associated-data length in bits", Bits { input: Ad }),
            ],
        ),
        Family::Isap => (
            sum(vec![p("|A|"), p("|M|")]),
            vec![
                doc("|A|", "associated-data length in bytes", Bytes { input: Ad }),
                doc("|M|", "message length in bytes", Bytes { input: Msg }),
            ],
        ),
        Family::PhotonBeetle => (
            sum(vec![
                prod(vec![ceil(p("|A|"), p("r")), p("b")]),
                prod(vec![ceil(p("|M|"), p("r")), p("b")]),
            ]),
            vec![
                doc("|A|", "associated-data length in bytes", Bytes { input: Ad }),
                param("r", "rate in bytes"),
                b(),
                doc("|M|", "message length in bytes", Bytes { input: Msg }),
            ],
        ),
        Family::RomulusN => (
            sum(vec![
                prod(vec![quot(p("|A|"), p("n")), p("b")]),
                prod(vec![quot(p("|M|"), p("n")), p("b")]),
            ]),
            vec![
                doc("|A|", "associated-data length in bytes", Bytes { input: Ad }),
                param("n", "block size in bytes"),
                param("b", "cost of one tweakable-block-cipher call"),
                doc("|M|", "message length in bytes", Bytes { input: Msg }),
            ],
        ),
        Family::Sparkle => (
            sum(vec![
                prod(vec![c(2), ceil(p("|A|"), p("r")), p("b")]),
                prod(vec![c(3), ceil(p("|M|"), p("r")), p("b")]),
                prod(vec![ceil(p("d"), p("r")), p("b")]),
                prod(vec![c(2), p("b")]),
            ]),
            sparkle_symbols(),
        ),
        Family::TinyJambu => (
            sum(vec![
                juxt(6, "b_640"),
                prod(vec![c(2), quot(p("|A|"), c(32)), p("b_640")]),
                prod(vec![c(2), quot(p("|M|"), c(32)), p("b_1024")]),
                juxt(4, "b_1024"),
            ]),
            vec![
                param("b_640", "cost of one 640-round keyed permutation call"),
                doc("|A|", "associated-data length in bits", Bits { input: Ad }),
                doc("|M|", "message length in bits", Bits { input: Msg }),
                param("b_1024", "cost of one 1024-round keyed permutation call"),
            ],
        ),
        Family::Xoodyak => (
            sum(vec![
                juxt(2, "b"),
                prod(vec![c(2), quot(p("|A|"), p("r_in")), p("b")]),
                prod(vec![c(2), quot(p("|P|"), p("r_out")), p("b")]),
            ]),
            vec![
                b(),
                doc("|A|", "associated-data length in bytes", Bytes { input: Ad }),
                param("r_in", "absorb rate in bytes"),
                doc("|P|", "plaintext length in bytes", Bytes { input: Msg }),
                param("r_out", "squeeze rate in bytes"),
            ],
        ),
    };
    Row { family, expr, symbols }
}

fn sparkle_symbols() -> Vec<SymbolDoc> {
    vec![
        doc("|A|", "associated-data length in bytes", Quantity::Bytes { input: Input::Ad }),
        param("r", "rate in bytes"),
        param(B.0, B.1),
        doc("|M|", "message length in bytes", Quantity::Bytes { input: Input::Msg }),
        param("d", "digest length in bytes"),
    ]
}

/// The SPARKLE row as spelled in the comparison table (no ceilings).
pub fn sparkle_table_form() -> Row {
    Row {
        family: Family::Sparkle,
        expr: sum(vec![
            prod(vec![c(2), quot(p("|A|"), p("r")), p("b")]),
            prod(vec![c(3), quot(p("|M|"), p("r")), p("b")]),
            prod(vec![quot(p("d"), p("r")), p("b")]),
            juxt(2, "b"),
        ]),
        symbols: sparkle_symbols(),
    }
}

pub fn registry() -> Vec<Row> {
    Family::ALL.into_iter().map(row).collect()
}

pub fn expr_for(family: Family) -> CostExpr {
    row(family).expr
}

impl Row {
    /// Every cost and size field, plus this row's length and block symbols.
    pub fn bindings(&self, len_a: u64, len_m: u64, params: &CostParams) -> Bindings {
        let mut env = Bindings::new();
        for (name, v) in params.costs() {
            env.insert(name.to_string(), v.clone());
        }
        for (name, v) in params.sizes() {
            env.insert(name.to_string(), int(v));
        }
        for s in &self.symbols {
            let v = match s.binding {
                Quantity::Bytes { input } => int(input.pick(len_a, len_m)),
                Quantity::Bits { input } => int(8 * input.pick(len_a, len_m)),
                Quantity::Blocks { input, size } => {
                    let size = params.sizes().into_iter().find(|(n, _)| *n == size).map_or(0, |(_, v)| v);
                    if size == 0 {
                        continue;
                    }
                    int(input.pick(len_a, len_m).div_ceil(size))
                }
                Quantity::Param => continue,
            };
            env.insert(s.symbol.to_string(), v);
        }
        env
    }

    pub fn eval(&self, len_a: u64, len_m: u64, params: &CostParams) -> Result<Rational, EvalError> {
        self.expr.eval(&self.bindings(len_a, len_m, params))
    }
}

pub fn bindings(family: Family, len_a: u64, len_m: u64, params: &CostParams) -> Bindings {
    row(family).bindings(len_a, len_m, params)
}

/// The variant's row evaluated at byte lengths, with `params` supplying costs and rates.
pub fn eval_row(variant: Variant, len_a: u64, len_m: u64, params: &CostParams) -> Result<Rational, EvalError> {
    row(variant.family()).eval(len_a, len_m, params)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegistryEntry {
    pub algorithm: &'static str,
    pub variant: &'static str,
    pub expression_text: String,
    pub parameters: Vec<SymbolDoc>,
}

/// The registry as `[{algorithm, variant, expression_text, parameters}]`.
pub fn registry_json() -> Vec<RegistryEntry> {
    registry()
        .into_iter()
        .map(|r| RegistryEntry {
            algorithm: r.family.display_name(),
            variant: r.family.primary().name(),
            expression_text: r.expr.render(),
            parameters: r.symbols,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_symbol_is_documented_once() {
        for r in registry().into_iter().chain([sparkle_table_form()]) {
            let used = r.expr.symbols();
            let documented: Vec<&str> = r.symbols.iter().map(|s| s.symbol).collect();
            assert_eq!(used, documented, "{}", r.family);
        }
    }

    #[test]
    fn substitution_examples() {
        // SPARKLE at |A| = |M| = d = r, b = 1
        let cp = CostParams::unit(Variant::Schwaemm256_128);
        assert_eq!(eval_row(Variant::Schwaemm256_128, 32, 32, &cp).unwrap(), int(8));
        // TinyJambu at 32-bit A and M
        let cp = CostParams::unit(Variant::TinyJambu128);
        assert_eq!(eval_row(Variant::TinyJambu128, 4, 4, &cp).unwrap(), int(14));
    }

    #[test]
    fn blocks_bind_to_the_variant_block_size() {
        let env = bindings(Family::Elephant, 21, 40, &CostParams::unit(Variant::ElephantDumbo));
        assert_eq!(env["ℓ_A"], int(2));
        assert_eq!(env["ℓ_M"], int(2));
        let env = bindings(Family::Grain128Aead, 3, 5, &CostParams::unit(Variant::Grain128AeadV2));
        assert_eq!(env["|AD|"], int(24));
        assert_eq!(env["|M|"], int(40));
    }
}
