#![no_main]

use kvertex_cli::JobConfig;
use libfuzzer_sys::{fuzz_target, Corpus};

fuzz_target!(|data: &[u8]| -> Corpus {
    let Ok(text) = std::str::from_utf8(data) else {
        return Corpus::Reject;
    };
    // decoding and validation only; running a job is not bounded in time
    match JobConfig::from_json(text) {
        Ok(c) => {
            let _ = c.validate();
            Corpus::Keep
        }
        Err(_) => Corpus::Keep,
    }
});
