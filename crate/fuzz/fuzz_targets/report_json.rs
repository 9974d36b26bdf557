#![no_main]

use libfuzzer_sys::fuzz_target;
use lwc_validation::{Format, Report};

fuzz_target!(|text: &str| {
    if let Ok(r) = Report::from_json(text) {
        let _ = r.render(Format::Markdown);
        let _ = r.render(Format::Csv);
        let _ = r.to_json();
    }
});
