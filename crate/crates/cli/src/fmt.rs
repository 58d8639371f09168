//! Number formatting for command output.
//!
//! Every value is printed in the shortest form that parses back to the same
//! `f64`, switching to exponent notation outside `[1e-5, 1e16)`.

pub fn num(x: f64) -> String {
    if x.is_nan() {
        "NaN".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else if x == 0.0 || (1e-5..1e16).contains(&x.abs()) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}
