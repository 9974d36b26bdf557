use std::collections::BTreeMap;

use lwc_model::cost_model::{
    c, eval_finalize, eval_init, eval_process, eval_row, eval_total, expr_for, registry, sparkle_table_form,
    CostExpr, CostParams, Rational, SYMBOLS,
};
use lwc_model::schedule::{plan, predicted_cost, schedule_params, Count, Input};
use lwc_model::{Family, Phase, Variant};
use proptest::prelude::*;

fn golden() -> BTreeMap<String, String> {
    let text = include_str!("../golden/expressions.tsv");
    text.lines()
        .map(|l| {
            let (k, v) = l.split_once('\t').expect("key<TAB>expression");
            (k.to_string(), v.to_string())
        })
        .collect()
}

#[test]
fn registry_matches_golden_transcription() {
    let g = golden();
    let rows = registry();
    assert_eq!(rows.len(), 10);
    for r in &rows {
        assert_eq!(r.expr.render(), g[r.family.slug()], "{}", r.family);
    }
    assert_eq!(sparkle_table_form().expr.render(), g["sparkle-table"]);
    assert_eq!(g.len(), 11);
}

#[test]
fn registry_round_trips_through_the_parser() {
    for r in registry().into_iter().chain([sparkle_table_form()]) {
        assert_eq!(CostExpr::parse(&r.expr.render()).unwrap(), r.expr);
    }
}

#[test]
fn sparkle_forms_agree_on_rate_aligned_lengths() {
    let cp = CostParams::unit(Variant::Schwaemm256_128);
    let table = sparkle_table_form();
    for (a, m) in [(0, 0), (32, 64), (320, 96)] {
        assert_eq!(table.eval(a, m, &cp).unwrap(), eval_row(Variant::Schwaemm256_128, a, m, &cp).unwrap());
    }
    assert_ne!(table.eval(1, 0, &cp).unwrap(), eval_row(Variant::Schwaemm256_128, 1, 0, &cp).unwrap());
}

fn ident_symbols() -> Vec<&'static str> {
    SYMBOLS.iter().copied().filter(|s| !s.starts_with('|')).collect()
}

fn arb_expr() -> impl Strategy<Value = CostExpr> {
    let leaf = prop_oneof![
        (0u64..1000).prop_map(c),
        proptest::sample::select(SYMBOLS).prop_map(|s| CostExpr::Param(s.to_string())),
        (0u64..10, proptest::sample::select(ident_symbols()))
            .prop_map(|(k, s)| CostExpr::Product { factors: vec![c(k), CostExpr::Param(s.to_string())], juxtaposed: true }),
    ];
    leaf.prop_recursive(5, 40, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(CostExpr::Sum),
            prop::collection::vec(inner.clone(), 2..4)
                .prop_map(|factors| CostExpr::Product { factors, juxtaposed: false }),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| CostExpr::Quotient(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| CostExpr::CeilDiv(Box::new(a), Box::new(b))),
        ]
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (0u32..1000, 1u32..50).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn arb_params(v: Variant) -> impl Strategy<Value = CostParams> {
    proptest::collection::vec(rational(), 9).prop_map(move |x| CostParams {
        b: x[0].clone(),
        p: x[1].clone(),
        b_640: x[2].clone(),
        b_1024: x[3].clone(),
        c_k: x[4].clone(),
        c_n: x[5].clone(),
        c_a: x[6].clone(),
        c_m: x[7].clone(),
        c_f: x[8].clone(),
        ..CostParams::unit(v)
    })
}

fn with_params() -> impl Strategy<Value = (Variant, CostParams)> {
    proptest::sample::select(Variant::ALL.to_vec()).prop_flat_map(|v| (Just(v), arb_params(v)))
}

proptest! {
    #[test]
    fn any_expression_round_trips(e in arb_expr()) {
        let text = e.render();
        prop_assert_eq!(CostExpr::parse(&text).unwrap(), e, "{}", text);
    }

    #[test]
    fn decomposition_identity(
        (v, cp) in with_params(), a in 0u64..10_000, m in 0u64..10_000, t_p in rational(),
        la in 0u64..5000, lm in 0u64..5000,
    ) {
        let bd = eval_total(a, m, &t_p, &cp);
        let (pa, pm) = eval_process(a, m, &t_p, &cp);
        prop_assert_eq!(&bd.total, &(eval_init(&cp) + pa + pm + eval_finalize(&cp)));
        let bd = predicted_cost(&plan(v, la, lm), &cp);
        prop_assert_eq!(bd.total, bd.init + bd.process_ad + bd.process_msg + bd.finalize);
    }

    #[test]
    fn rows_are_monotone_in_both_lengths(
        (v, cp) in with_params(), a in 0u64..3000, m in 0u64..3000, da in 0u64..300, dm in 0u64..300,
    ) {
        let base = eval_row(v, a, m, &cp).unwrap();
        prop_assert!(eval_row(v, a + da, m, &cp).unwrap() >= base);
        prop_assert!(eval_row(v, a, m + dm, &cp).unwrap() >= base);
    }

    #[test]
    fn finalization_ignores_lengths((v, cp) in with_params(), a in 0u64..3000, m in 0u64..3000) {
        prop_assert_eq!(eval_finalize(&cp), cp.c_f.clone());
        let finalize = predicted_cost(&plan(v, a, m), &cp).finalize;
        prop_assert_eq!(finalize, predicted_cost(&plan(v, 0, 0), &cp).finalize);
    }

    /// Whole blocks add calls linearly once the input is non-empty.
    #[test]
    fn whole_blocks_are_additive(
        v in proptest::sample::select(Variant::ALL.to_vec()), x in 1u64..40, k1 in 0u64..5, k2 in 0u64..5,
    ) {
        let sp = schedule_params(v);
        for (input, rate) in [(Input::Ad, block_rate(v, Input::Ad)), (Input::Msg, block_rate(v, Input::Msg))] {
            let calls = |len: u64| match input {
                Input::Ad => plan(v, len, 1).ad_calls(),
                Input::Msg => plan(v, 1, len).msg_calls(),
            };
            if v == Variant::Grain128AeadV2 && x + (k1 + k2) * rate >= 128 {
                continue; // DER length prefix grows at 128 bytes
            }
            let d = |k: u64| calls(x + k * rate) - calls(x);
            prop_assert_eq!(d(k1 + k2), d(k1) + d(k2), "{} {:?} rate {}", sp.variant, input, rate);
        }
    }
}

/// Block rate of the first block-driven term of a phase.
fn block_rate(v: Variant, input: Input) -> u64 {
    schedule_params(v)
        .terms
        .iter()
        .find_map(|t| match t.count {
            Count::Blocks(r) if r.input == input => Some(r.rate),
            _ => None,
        })
        .unwrap()
}

#[test]
fn ad_calls_step_once_per_block() {
    for v in Variant::ALL {
        let rate = block_rate(v, Input::Ad);
        let ad = |len: u64| plan(v, len, 0).ad_calls();
        for len in 1..6 * rate.max(8) {
            let step = ad(len + 1) - ad(len);
            if v == Variant::Grain128AeadV2 {
                let der_boundary = matches!(len + 1, 128 | 256);
                assert_eq!(step, 1 + der_boundary as u64, "{v} at {len}");
            } else {
                assert!(step <= 1, "{v} at {len}: step {step}");
                assert_eq!(ad(len + rate) - ad(len), 1, "{v} at {len}");
            }
        }
        assert!(ad(1) >= ad(0));
    }
}

#[test]
fn plan_totals_and_phase_primitives() {
    for v in Variant::ALL {
        let p = plan(v, 40, 70);
        assert_eq!(p.total_calls(), p.init_calls() + p.ad_calls() + p.msg_calls() + p.finalize_calls());
    }
    let p = plan(Variant::TinyJambu128, 8, 8);
    assert_eq!(p.primitive_labels(Phase::Ad), ["tinyjambu-p640"]);
    assert_eq!(p.primitive_labels(Phase::Msg), ["tinyjambu-p1024"]);
}

#[test]
fn registry_covers_exactly_the_ten_rows() {
    let rows: Vec<Family> = registry().iter().map(|r| r.family).collect();
    assert_eq!(rows, Family::ALL);
    assert_eq!(expr_for(Family::GiftCofb).render(), "ℓ_A + ℓ_M");
    assert_eq!(expr_for(Family::Grain128Aead).render(), "|M| + |AD|");
}
