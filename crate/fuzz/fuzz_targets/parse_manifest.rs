#![no_main]

use libfuzzer_sys::fuzz_target;
use unitrack::io::manifest::RunManifest;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(m) = RunManifest::parse(text) {
        // an accepted manifest always describes a runnable configuration
        m.config()
            .validate()
            .expect("parse accepted an invalid configuration");
        let again = RunManifest::parse(&m.to_json()).expect("serialized manifest parses");
        assert_eq!(again.curves, m.curves);
    }
});
