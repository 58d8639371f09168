//! Line-format spectrum parser: never panics, and anything it accepts is
//! canonical and survives re-serialization.

#![no_main]

use libfuzzer_sys::fuzz_target;
use progibbs::LengthSpectrum;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(s) = LengthSpectrum::parse_text(text) {
        assert!(!s.is_empty());
        for e in s.entries() {
            assert!(e.length.is_finite() && e.length > 0.0);
            assert!(e.mult.is_finite() && e.mult > 0.0);
        }
        assert!(s.entries().windows(2).all(|w| w[0].length < w[1].length));
        assert_eq!(LengthSpectrum::parse_text(&s.to_text()).unwrap(), s);
    }
});
