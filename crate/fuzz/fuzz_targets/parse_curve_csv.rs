#![no_main]

use libfuzzer_sys::fuzz_target;
use unitrack::curve::SampledCurve;
use unitrack::io::csv::{parse_curve_csv, write_curve_csv};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(samples) = parse_curve_csv(text) else {
        return;
    };
    assert!(samples.windows(2).all(|w| w[0].t < w[1].t));
    let curve = SampledCurve {
        samples,
        depth: 0,
        source: None,
        approximate: true,
    };
    let written = write_curve_csv(&curve);
    assert_eq!(
        parse_curve_csv(&written).expect("own output parses"),
        curve.samples
    );
});
