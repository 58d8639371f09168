//! Program-length spectra: ingestion, generation and tail truncation.
//!
//! A spectrum is a list of `(length, multiplicity)` entries. One entry stands
//! for `multiplicity` distinct programs sharing that length. Entries are kept
//! sorted by strictly increasing length; duplicate lengths are merged by
//! summing their multiplicities.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub length: f64,
    pub mult: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LengthSpectrum {
    entries: Vec<Entry>,
}

#[derive(Deserialize, Serialize)]
struct StructuredSpectrum {
    entries: Vec<Entry>,
}

impl LengthSpectrum {
    /// Validates, sorts and merges raw `(length, multiplicity)` pairs.
    pub fn new<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        let mut entries = Vec::new();
        for (length, mult) in pairs {
            entries.push(validate_entry(length, mult)?);
        }
        Self::from_validated(entries)
    }

    fn from_validated(mut entries: Vec<Entry>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptySpectrum);
        }
        entries.sort_by(|x, y| x.length.total_cmp(&y.length));
        let mut merged: Vec<Entry> = Vec::with_capacity(entries.len());
        for e in entries {
            match merged.last_mut() {
                Some(last) if last.length == e.length => {
                    last.mult += e.mult;
                    if !last.mult.is_finite() {
                        return Err(Error::NonFinite("merged multiplicity"));
                    }
                }
                _ => merged.push(e),
            }
        }
        Ok(Self { entries: merged })
    }

    /// Parses either format, choosing by the first non-blank byte: `{`
    /// selects the structured (JSON) format, anything else the line format.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    /// Line format: `<length> <multiplicity>` per line, `#` starts a comment.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let parse_field = |field: Option<&str>, what: &str| -> Result<f64> {
                let s = field.ok_or_else(|| Error::Parse {
                    line: line_no,
                    msg: format!("missing {what}"),
                })?;
                s.parse::<f64>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("invalid {what} `{s}`"),
                })
            };
            let length = parse_field(fields.next(), "length")?;
            let mult = parse_field(fields.next(), "multiplicity")?;
            if let Some(extra) = fields.next() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("unexpected trailing field `{extra}`"),
                });
            }
            pairs.push(validate_entry(length, mult)?);
        }
        Self::from_validated(pairs)
    }

    /// Structured format: `{"entries": [{"length": 1, "mult": 2}, ...]}`.
    pub fn parse_json(text: &str) -> Result<Self> {
        let doc: StructuredSpectrum =
            serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let entries = doc
            .entries
            .into_iter()
            .map(|e| validate_entry(e.length, e.mult))
            .collect::<Result<Vec<_>>>()?;
        Self::from_validated(entries)
    }

    /// Line-format serialization. Values use the shortest representation
    /// that parses back to the identical `f64`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = writeln!(out, "{} {}", e.length, e.mult);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&StructuredSpectrum {
            entries: self.entries.clone(),
        })
        .expect("finite floats always serialize")
    }

    /// Binary programs: `2^l` strings of each length `l = 1..=max_len`.
    pub fn binary_programs(max_len: u64) -> Result<Self> {
        Self::geometric(2.0, max_len)
    }

    /// Entries `(l, g^l)` for `l = 1..=max_len`. Errors rather than rounding
    /// once `g^l` no longer fits the floating format.
    pub fn geometric(growth: f64, max_len: u64) -> Result<Self> {
        if !(growth.is_finite() && growth > 0.0) {
            return Err(Error::InvalidPolicy(
                "growth base must be finite and positive",
            ));
        }
        if max_len == 0 {
            return Err(Error::EmptySpectrum);
        }
        let mut entries = Vec::with_capacity(max_len.min(4096) as usize);
        let mut mult = 1.0;
        for len in 1..=max_len {
            mult *= growth;
            if !mult.is_finite() || mult == 0.0 {
                return Err(Error::MultiplicityOverflow(len));
            }
            entries.push(Entry {
                length: len as f64,
                mult,
            });
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// Number of entries (distinct lengths).
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lengths(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        self.entries.iter().map(|e| e.length)
    }

    pub fn mults(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        self.entries.iter().map(|e| e.mult)
    }

    pub fn min_length(&self) -> f64 {
        self.entries[0].length
    }

    pub fn max_length(&self) -> f64 {
        self.entries[self.entries.len() - 1].length
    }

    pub fn total_multiplicity(&self) -> f64 {
        self.mults().sum()
    }

    /// Smallest spacing between consecutive lengths, `None` for one entry.
    pub fn min_gap(&self) -> Option<f64> {
        self.entries
            .windows(2)
            .map(|w| w[1].length - w[0].length)
            .reduce(f64::min)
    }
}

fn validate_entry(length: f64, mult: f64) -> Result<Entry> {
    if !length.is_finite() {
        return Err(Error::NonFinite("length"));
    }
    if !mult.is_finite() {
        return Err(Error::NonFinite("multiplicity"));
    }
    if length <= 0.0 {
        return Err(Error::NonPositiveLength(length));
    }
    if mult <= 0.0 {
        return Err(Error::NonPositiveMultiplicity(mult));
    }
    Ok(Entry { length, mult })
}

/// Truncation policy for spectra whose multiplicity grows like `g^l`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailPolicy {
    growth_base: f64,
    epsilon: f64,
}

impl TailPolicy {
    pub fn new(growth_base: f64, epsilon: f64) -> Result<Self> {
        if !(growth_base.is_finite() && growth_base > 1.0) {
            return Err(Error::InvalidPolicy("growth base must exceed 1"));
        }
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::InvalidPolicy("epsilon must lie in (0, 1)"));
        }
        Ok(Self {
            growth_base,
            epsilon,
        })
    }

    pub fn growth_base(&self) -> f64 {
        self.growth_base
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

/// Smallest `N` such that the geometric tail beyond length `N` is below
/// `epsilon` times the partial sum through `N`.
///
/// With `r = g * exp(lambda)` the terms are `r^l`, the tail after `N` is
/// `r^(N+1) / (1 - r)` and the partial sum is `r (1 - r^N) / (1 - r)`, so the
/// condition reduces to `r^N < epsilon (1 - r^N)`. It is evaluated in the log
/// domain, which keeps it exact for very negative `lambda`.
pub fn tail_cutoff(policy: &TailPolicy, lambda: f64) -> Result<u64> {
    if !lambda.is_finite() {
        return Err(Error::NonFinite("lambda"));
    }
    let ln_r = policy.growth_base.ln() + lambda;
    if ln_r >= 0.0 {
        return Err(Error::DivergentSum { ratio: ln_r.exp() });
    }
    let ln_eps = policy.epsilon.ln();
    // r^N < eps (1 - r^N); monotone in N.
    let satisfied = |n: u64| -> bool {
        let ln_rn = n as f64 * ln_r;
        ln_rn < ln_eps + (-ln_rn.exp()).ln_1p()
    };
    let mut hi: u64 = 1;
    while !satisfied(hi) {
        hi = hi
            .checked_mul(2)
            .ok_or(Error::DivergentSum { ratio: ln_r.exp() })?;
    }
    let mut lo = hi / 2;
    // invariant: satisfied(hi), lo == 0 or !satisfied(lo)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if satisfied(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// The geometric spectrum `(l, g^l)` truncated at [`tail_cutoff`], so that its
/// partition function at `lambda` is within relative `epsilon` of the
/// infinite sum.
pub fn certified_truncation(policy: &TailPolicy, lambda: f64) -> Result<LengthSpectrum> {
    let n = tail_cutoff(policy, lambda)?;
    LengthSpectrum::geometric(policy.growth_base, n)
}
