//! Replays the fuzz corpus seeds through the same round-trip assertions.

use std::fs;
use std::path::PathBuf;

use kvertex_cli::{parse_descendent, parse_rational, rational_text, JobConfig};
use kvertex_core::{MultiPartition, Partition};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(PathBuf, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            let text = fs::read_to_string(&p).unwrap();
            (p, text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out.into_iter().map(|(_, t)| t).collect()
}

#[test]
fn descendent_seeds() {
    let parsed = seeds("parse_descendent").iter().filter_map(|s| parse_descendent(s).ok()).count();
    assert!(parsed >= 7);
    for s in seeds("parse_descendent") {
        if let Ok(t) = parse_descendent(&s) {
            assert_eq!(parse_descendent(&t.to_string()).unwrap(), t);
        }
    }
}

#[test]
fn partition_seeds() {
    for s in seeds("partition_literal") {
        if let Ok(p) = s.parse::<Partition>() {
            assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
        }
        if let Ok(m) = s.parse::<MultiPartition>() {
            assert_eq!(m.to_string().parse::<MultiPartition>().unwrap(), m);
        }
    }
}

#[test]
fn config_seeds() {
    let decoded: Vec<JobConfig> = seeds("job_config").iter().map(|s| JobConfig::from_json(s).unwrap()).collect();
    // the psi seed has N < n and must be refused
    assert_eq!(decoded.iter().filter(|c| c.validate().is_ok()).count(), decoded.len() - 1);
}

#[test]
fn rational_seeds() {
    for s in seeds("rational_literal") {
        if let Ok(x) = parse_rational(&s) {
            assert_eq!(parse_rational(&rational_text(&x)).unwrap(), x);
        }
    }
}
