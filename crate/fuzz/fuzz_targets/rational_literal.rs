#![no_main]

use kvertex_cli::{parse_rational, rational_text};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(x) = parse_rational(text) {
            assert_eq!(parse_rational(&rational_text(&x)).expect("round trip"), x);
        }
    }
});
