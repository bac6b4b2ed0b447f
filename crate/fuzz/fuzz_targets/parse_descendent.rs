#![no_main]

use kvertex_cli::parse_descendent;
use libfuzzer_sys::{fuzz_target, Corpus};

fuzz_target!(|data: &[u8]| -> Corpus {
    let Ok(text) = std::str::from_utf8(data) else {
        return Corpus::Reject;
    };
    if let Ok(t) = parse_descendent(text) {
        let printed = t.to_string();
        assert_eq!(parse_descendent(&printed).expect("printed form parses"), t, "{printed}");
    }
    Corpus::Keep
});
