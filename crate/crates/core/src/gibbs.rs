//! Gibbs ensemble over a length spectrum at fixed `lambda`.
//!
//! Each program of length `l` carries weight `exp(lambda * l)`; an entry with
//! multiplicity `m` therefore carries `m * exp(lambda * l)`. All weight
//! arithmetic happens in the log domain, so `lambda * l` may be as large as
//! the floating range allows without overflow.
//!
//! Entropies are in nats. An entry with probability `Q` and multiplicity `m`
//! contributes `-Q (ln Q - ln m)`, i.e. the `m` programs are counted as
//! separate equiprobable states.

use std::f64::consts::LN_2;

use crate::error::{Error, Result};
use crate::numeric::log_sum_exp;
use crate::spectrum::LengthSpectrum;

/// Tolerance on `sum(P) = 1` for distributions handed to [`compromise_value`].
pub const SIMPLEX_TOL: f64 = 1e-9;

/// Lagrange parameter `lambda = -beta = -1 / (k T)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemperatureParam {
    lambda: f64,
    kconst: f64,
    base2: bool,
}

impl TemperatureParam {
    pub fn from_lambda(lambda: f64) -> Result<Self> {
        Self::from_lambda_with(lambda, 1.0)
    }

    pub fn from_lambda_with(lambda: f64, kconst: f64) -> Result<Self> {
        check_finite(lambda, "lambda")?;
        check_kconst(kconst)?;
        Ok(Self {
            lambda,
            kconst,
            base2: false,
        })
    }

    /// Base-2 reading of an existing `lambda`: weights are `2^(-l / T)`.
    pub fn from_lambda_base2(lambda: f64) -> Result<Self> {
        check_finite(lambda, "lambda")?;
        Ok(Self {
            lambda,
            kconst: 1.0 / LN_2,
            base2: true,
        })
    }

    /// `lambda = -1 / (kconst * T)`.
    pub fn from_temperature(temperature: f64, kconst: f64) -> Result<Self> {
        check_finite(temperature, "temperature")?;
        check_kconst(kconst)?;
        if temperature == 0.0 {
            return Err(Error::InvalidParameter(
                "temperature must be nonzero".into(),
            ));
        }
        Self::from_lambda_with(-1.0 / (kconst * temperature), kconst)
    }

    /// `lambda = -ln 2 / T`, so that weights read `2^(-l / T)`. Equivalent to
    /// `kconst = 1 / ln 2`.
    pub fn from_temperature_base2(temperature: f64) -> Result<Self> {
        check_finite(temperature, "temperature")?;
        if temperature == 0.0 {
            return Err(Error::InvalidParameter(
                "temperature must be nonzero".into(),
            ));
        }
        Self::from_lambda_base2(-LN_2 / temperature)
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn beta(&self) -> f64 {
        -self.lambda
    }

    pub fn kconst(&self) -> f64 {
        self.kconst
    }

    pub fn is_base2(&self) -> bool {
        self.base2
    }

    /// `T = 1 / (kconst * beta)`, or `None` at `beta = 0`.
    pub fn temperature(&self) -> Option<f64> {
        if self.lambda == 0.0 {
            None
        } else if self.base2 {
            Some(LN_2 / self.beta())
        } else {
            Some(1.0 / (self.kconst * self.beta()))
        }
    }
}

fn check_finite(x: f64, what: &'static str) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}

fn check_kconst(k: f64) -> Result<()> {
    if k.is_finite() && k > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "kconst must be finite and positive, got {k}"
        )))
    }
}

/// Normalized Gibbs ensemble at one `lambda`.
#[derive(Debug, Clone)]
pub struct GibbsState {
    spectrum: LengthSpectrum,
    lambda: f64,
    log_weights: Vec<f64>,
    log_z: f64,
    probs: Vec<f64>,
}

/// Summary statistics of a [`GibbsState`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleStats {
    pub lambda: f64,
    pub mean_length: f64,
    /// Nats.
    pub entropy: f64,
    pub compromise: f64,
    pub log_z: f64,
    pub var_length: f64,
}

impl GibbsState {
    pub fn new(spectrum: &LengthSpectrum, lambda: f64) -> Result<Self> {
        check_finite(lambda, "lambda")?;
        let log_weights: Vec<f64> = spectrum
            .entries()
            .iter()
            .map(|e| lambda * e.length + e.mult.ln())
            .collect();
        if log_weights.iter().any(|w| !w.is_finite()) {
            return Err(Error::NonFinite("lambda * length"));
        }
        let log_z = log_sum_exp(&log_weights);
        let probs = log_weights.iter().map(|&w| (w - log_z).exp()).collect();
        Ok(Self {
            spectrum: spectrum.clone(),
            lambda,
            log_weights,
            log_z,
            probs,
        })
    }

    pub fn spectrum(&self) -> &LengthSpectrum {
        &self.spectrum
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// `ln(mult_k) + lambda * l_k` per entry.
    pub fn log_weights(&self) -> &[f64] {
        &self.log_weights
    }

    pub fn log_z(&self) -> f64 {
        self.log_z
    }

    /// Entry probabilities; entry `k` collects all programs of length `l_k`.
    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    /// Probability of a single program in entry `k`.
    pub fn program_probability(&self, k: usize) -> f64 {
        self.probs[k] / self.spectrum.entries()[k].mult
    }

    pub fn mean_length(&self) -> f64 {
        let mean: f64 = self
            .probs
            .iter()
            .zip(self.spectrum.lengths())
            .map(|(p, l)| p * l)
            .sum();
        // rounding in sum(P) can push the mean an ulp past the extremes
        mean.clamp(self.spectrum.min_length(), self.spectrum.max_length())
    }

    pub fn entropy(&self) -> f64 {
        let mut s = 0.0;
        for ((&q, &lw), mult) in self
            .probs
            .iter()
            .zip(&self.log_weights)
            .zip(self.spectrum.mults())
        {
            if q > 0.0 {
                // ln of the per-program probability
                let ln_p = lw - self.log_z - mult.ln();
                s -= q * ln_p;
            }
        }
        s
    }

    pub fn var_length(&self) -> f64 {
        let mean = self.mean_length();
        self.probs
            .iter()
            .zip(self.spectrum.lengths())
            .map(|(p, l)| p * (l - mean) * (l - mean))
            .sum::<f64>()
            .max(0.0)
    }

    pub fn stats(&self) -> EnsembleStats {
        let mean_length = self.mean_length();
        let entropy = self.entropy();
        EnsembleStats {
            lambda: self.lambda,
            mean_length,
            entropy,
            compromise: self.lambda * mean_length + entropy,
            log_z: self.log_z,
            var_length: self.var_length(),
        }
    }
}

impl EnsembleStats {
    pub fn entropy_bits(&self) -> f64 {
        self.entropy / LN_2
    }
}

/// `F(P) = lambda * sum(P_k l_k) - sum(P_k ln(P_k / mult_k))`, with `0 ln 0 = 0`.
///
/// `probs` are entry probabilities. They must be nonnegative and sum to one
/// within [`SIMPLEX_TOL`]; they are renormalized before use.
pub fn compromise_value(probs: &[f64], spectrum: &LengthSpectrum, lambda: f64) -> Result<f64> {
    check_finite(lambda, "lambda")?;
    if probs.len() != spectrum.len() {
        return Err(Error::DimensionMismatch {
            expected: spectrum.len(),
            got: probs.len(),
        });
    }
    if let Some(bad) = probs.iter().find(|p| !(p.is_finite() && **p >= 0.0)) {
        return Err(Error::OffSimplex(format!(
            "entry {bad} is not a probability"
        )));
    }
    let total: f64 = probs.iter().sum();
    if (total - 1.0).abs() > SIMPLEX_TOL {
        return Err(Error::OffSimplex(format!("entries sum to {total}")));
    }
    let mut mean = 0.0;
    let mut entropy = 0.0;
    for (&raw, e) in probs.iter().zip(spectrum.entries()) {
        let p = raw / total;
        mean += p * e.length;
        if p > 0.0 {
            entropy -= p * (p.ln() - e.mult.ln());
        }
    }
    Ok(lambda * mean + entropy)
}

/// [`compromise_value`] of unnormalized positive weights `p_k / sum(p)`.
pub fn compromise_from_weights(
    weights: &[f64],
    spectrum: &LengthSpectrum,
    lambda: f64,
) -> Result<f64> {
    let z: f64 = weights.iter().sum();
    if !(z.is_finite() && z > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "weights must have a finite positive sum, got {z}"
        )));
    }
    let probs: Vec<f64> = weights.iter().map(|w| w / z).collect();
    compromise_value(&probs, spectrum, lambda)
}
