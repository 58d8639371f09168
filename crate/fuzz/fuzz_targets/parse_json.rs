#![no_main]

use libfuzzer_sys::fuzz_target;
use progibbs::LengthSpectrum;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(s) = LengthSpectrum::parse_json(text) {
        assert!(s.entries().windows(2).all(|w| w[0].length < w[1].length));
        assert_eq!(LengthSpectrum::parse_json(&s.to_json()).unwrap(), s);
    }
});
