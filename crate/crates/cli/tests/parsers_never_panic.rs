//! The fuzz targets' properties on stable: arbitrary and seed inputs to every
//! parser either error cleanly or round-trip.

use std::path::PathBuf;

use lwc_ciphers::{kat, Variant};
use lwc_cli::{parse_grid, MAX_GRID_LEN};
use lwc_model::cost_model::CostExpr;
use lwc_model::schedule::PhasePlan;
use lwc_validation::{Format, Report};
use proptest::prelude::*;

fn kat_parse(text: &str) {
    if let Ok(records) = kat::parse(text) {
        assert_eq!(kat::parse(&kat::write(&records)).unwrap(), records);
        if records.len() <= 4 {
            let _ = kat::run(Variant::Ascon128, &records);
        }
    }
}

fn expr_parse(text: &str) {
    if let Ok(e) = CostExpr::parse(text) {
        assert_eq!(CostExpr::parse(&e.render()).unwrap(), e, "{text:?}");
    }
}

fn plan_json(text: &str) {
    if let Ok(p) = PhasePlan::from_json(text) {
        assert_eq!(PhasePlan::from_json(&p.to_json()).unwrap(), p);
    }
}

fn report_json(text: &str) {
    if let Ok(r) = Report::from_json(text) {
        let _ = r.render(Format::Markdown);
        let _ = r.render(Format::Csv);
        assert_eq!(Report::from_json(&r.to_json()).unwrap().to_json(), r.to_json());
    }
}

fn grid_parse(rate: u8, text: &str) {
    let rate = u64::from(rate.max(1));
    if let Ok(g) = parse_grid(text, rate) {
        assert!(g.iter().all(|&v| v <= MAX_GRID_LEN.max(64 * rate)));
    }
}

fn algorithm_name(text: &str) {
    if let Ok(v) = text.parse::<Variant>() {
        assert_eq!(v.name().parse::<Variant>().unwrap(), v);
    }
}

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| std::fs::read(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn corpus_seeds() {
    let text = |b: &[u8]| String::from_utf8_lossy(b).into_owned();
    for s in seeds("kat_parse") {
        kat_parse(&text(&s));
    }
    for s in seeds("expr_parse") {
        let t = text(&s);
        assert!(CostExpr::parse(&t).is_ok(), "{t:?}");
        expr_parse(&t);
    }
    for s in seeds("plan_json") {
        assert!(PhasePlan::from_json(&text(&s)).is_ok());
        plan_json(&text(&s));
    }
    for s in seeds("report_json") {
        report_json(&text(&s));
    }
    for s in seeds("grid_parse") {
        grid_parse(s[0], &text(&s[1..]));
    }
    for s in seeds("algorithm_name") {
        assert!(text(&s).parse::<Variant>().is_ok(), "{}", text(&s));
        algorithm_name(&text(&s));
    }
}

const EXPR_CHARS: &str = "[0-9a-zA-Z_|⌈⌉()/·*+ ℓ]{0,40}";

proptest! {
    #[test]
    fn kat_text(s in "((Count|Key|Nonce|PT|AD|CT) = [0-9A-Fa-f]{0,6}\r?\n{1,2}){0,14}") {
        kat_parse(&s);
    }

    #[test]
    fn expr_text(s in EXPR_CHARS) {
        expr_parse(&s);
    }

    #[test]
    fn deep_nesting_is_rejected_not_overflowed(n in 1usize..5000) {
        let ceil = (0..n).fold("r".to_string(), |s, _| format!("⌈{s}/r⌉"));
        let paren = "(".repeat(n) + "r" + &")".repeat(n);
        for s in [ceil, paren] {
            let parsed = CostExpr::parse(&s);
            if n >= 64 {
                prop_assert!(parsed.is_err());
            } else if n < 32 {
                prop_assert!(parsed.is_ok(), "{}", s);
            }
        }
    }

    #[test]
    fn json_text(s in "\\PC{0,64}") {
        plan_json(&s);
        report_json(&s);
        algorithm_name(&s);
    }

    #[test]
    fn grid_text(rate in any::<u8>(), s in "[0-9, a-z-]{0,30}") {
        grid_parse(rate, &s);
    }
}
