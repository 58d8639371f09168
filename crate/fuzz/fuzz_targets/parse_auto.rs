//! Format auto-detection as used by the CLI: `{` selects JSON.

#![no_main]

use libfuzzer_sys::fuzz_target;
use progibbs::LengthSpectrum;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let auto = LengthSpectrum::parse(text);
    let direct = if text.trim_start().starts_with('{') {
        LengthSpectrum::parse_json(text)
    } else {
        LengthSpectrum::parse_text(text)
    };
    assert_eq!(auto, direct);
});
