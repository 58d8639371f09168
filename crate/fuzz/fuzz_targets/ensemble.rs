//! Parse a spectrum, then check ensemble invariants at a lambda taken from the
//! first eight bytes.

#![no_main]

use libfuzzer_sys::fuzz_target;
use progibbs::{GibbsState, LengthSpectrum};

fuzz_target!(|data: &[u8]| {
    if data.len() < 8 {
        return;
    }
    let (head, rest) = data.split_at(8);
    let lambda = f64::from_le_bytes(head.try_into().unwrap());
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let Ok(spectrum) = LengthSpectrum::parse(text) else {
        return;
    };
    let Ok(state) = GibbsState::new(&spectrum, lambda) else {
        assert!(!(lambda * spectrum.max_length()).is_finite());
        return;
    };
    let total: f64 = state.probabilities().iter().sum();
    assert!((total - 1.0).abs() <= 1e-9 * spectrum.len() as f64);
    let l = state.mean_length();
    assert!(l >= spectrum.min_length() && l <= spectrum.max_length());
    assert!(state.var_length() >= 0.0);
});
