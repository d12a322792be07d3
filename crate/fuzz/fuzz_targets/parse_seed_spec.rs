#![no_main]

use libfuzzer_sys::fuzz_target;
use unitrack::curve::{AnalyticCurve, SeedSpec};

fuzz_target!(|data: &[u8]| {
    let Ok(seed) = serde_json::from_slice::<SeedSpec>(data) else {
        return;
    };
    if seed.validate().is_err() {
        return;
    }
    for depth in 0..=2 {
        let curve = AnalyticCurve::at_depth(seed, depth, 4).expect("validated seed");
        for t in [0.0, 1e-7, 0.25, 0.5, 0.75, 1.0] {
            // numerical errors are fine, panics are not
            let _ = curve.evaluate(t, 2);
        }
    }
});
