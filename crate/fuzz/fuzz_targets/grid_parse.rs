#![no_main]

use libfuzzer_sys::fuzz_target;
use lwc_cli::{parse_grid, MAX_GRID_LEN};

fuzz_target!(|input: (u8, &str)| {
    let rate = u64::from(input.0.max(1));
    if let Ok(g) = parse_grid(input.1, rate) {
        assert!(g.iter().all(|&v| v <= MAX_GRID_LEN.max(64 * rate)));
    }
});
