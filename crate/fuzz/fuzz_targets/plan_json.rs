#![no_main]

use libfuzzer_sys::fuzz_target;
use lwc_model::schedule::PhasePlan;

fuzz_target!(|text: &str| {
    if let Ok(p) = PhasePlan::from_json(text) {
        assert_eq!(PhasePlan::from_json(&p.to_json()).unwrap(), p);
    }
});
