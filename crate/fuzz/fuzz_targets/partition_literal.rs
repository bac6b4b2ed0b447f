#![no_main]

use kvertex_core::{MultiPartition, Partition};
use libfuzzer_sys::{fuzz_target, Corpus};

fuzz_target!(|data: &[u8]| -> Corpus {
    let Ok(text) = std::str::from_utf8(data) else {
        return Corpus::Reject;
    };
    if let Ok(p) = text.parse::<Partition>() {
        assert_eq!(p.to_string().parse::<Partition>().expect("round trip"), p);
    }
    if let Ok(m) = text.parse::<MultiPartition>() {
        assert_eq!(m.to_string().parse::<MultiPartition>().expect("round trip"), m);
    }
    Corpus::Keep
});
