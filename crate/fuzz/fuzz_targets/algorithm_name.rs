#![no_main]

use libfuzzer_sys::fuzz_target;
use lwc_ciphers::Variant;

fuzz_target!(|text: &str| {
    if let Ok(v) = text.parse::<Variant>() {
        assert_eq!(v.name().parse::<Variant>().unwrap(), v);
    }
});
