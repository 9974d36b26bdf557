#![no_main]

use libfuzzer_sys::fuzz_target;
use lwc_model::cost_model::CostExpr;

fuzz_target!(|text: &str| {
    if let Ok(e) = CostExpr::parse(text) {
        assert_eq!(CostExpr::parse(&e.render()).unwrap(), e);
    }
});
