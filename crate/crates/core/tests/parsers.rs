//! Replays the fuzz corpus and throws arbitrary text at the parsers.

use std::fs;
use std::path::PathBuf;

use proptest::prelude::*;
use unitrack::curve::{AnalyticCurve, SampledCurve, SeedSpec};
use unitrack::io::csv::{parse_curve_csv, write_curve_csv, CSV_HEADER};
use unitrack::io::manifest::RunManifest;

fn corpus(target: &str) -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut files: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| (p.clone(), fs::read_to_string(&p).unwrap()))
        .collect()
}

fn check_csv(text: &str) {
    if let Ok(samples) = parse_curve_csv(text) {
        let curve = SampledCurve {
            samples,
            depth: 0,
            source: None,
            approximate: true,
        };
        assert_eq!(
            parse_curve_csv(&write_curve_csv(&curve)).unwrap(),
            curve.samples
        );
    }
}

fn check_seed(text: &str) {
    if let Ok(seed) = serde_json::from_str::<SeedSpec>(text) {
        if seed.validate().is_ok() {
            for depth in 0..=2 {
                let curve = AnalyticCurve::at_depth(seed, depth, 4).unwrap();
                for t in [0.0, 1e-7, 0.5, 1.0] {
                    let _ = curve.evaluate(t, 2);
                }
            }
        }
    }
}

#[test]
fn manifest_corpus() {
    let mut accepted = 0;
    for (path, text) in corpus("parse_manifest") {
        if let Ok(m) = RunManifest::parse(&text) {
            accepted += 1;
            assert_eq!(
                RunManifest::parse(&m.to_json()).unwrap(),
                m,
                "{}",
                path.display()
            );
        }
    }
    assert!(accepted >= 2);
}

#[test]
fn csv_corpus() {
    for (_, text) in corpus("parse_curve_csv") {
        check_csv(&text);
    }
}

#[test]
fn seed_corpus() {
    for (_, text) in corpus("parse_seed_spec") {
        check_seed(&text);
    }
}

proptest! {
    #[test]
    fn arbitrary_text_never_panics(body in "[-0-9eE.,\\n a-zN]{0,200}") {
        check_csv(&format!("{CSV_HEADER}\n{body}"));
        check_csv(&body);
        let _ = RunManifest::parse(&body);
    }

    #[test]
    fn arbitrary_seeds_never_panic(
        kind in prop::sample::select(vec!["finn_bump", "straight", "custom_bump"]),
        amplitude in prop::num::f64::ANY,
        sharpness in prop::num::f64::ANY,
    ) {
        let json = serde_json::json!({ "kind": kind, "amplitude": amplitude, "sharpness": sharpness });
        check_seed(&json.to_string());
    }
}
