#![no_main]

use libfuzzer_sys::fuzz_target;
use lwc_ciphers::{kat, Variant};

fuzz_target!(|text: &str| {
    let Ok(records) = kat::parse(text) else { return };
    // Whatever parses must survive a write/parse cycle and a run.
    assert_eq!(kat::parse(&kat::write(&records)).unwrap(), records);
    if records.len() <= 4 {
        let _ = kat::run(Variant::Ascon128, &records);
    }
});
