//! Recover `lambda` from a target mean length.
//!
//! `L(lambda)` is nondecreasing with `dL/dlambda = Var(l)`, so the equation
//! `L(lambda) = L*` is solved by bracketing and bisection, with Newton steps
//! (using the variance as the exact derivative) accepted whenever they stay
//! inside the current bracket.

use crate::error::{Error, Result};
use crate::gibbs::GibbsState;
use crate::spectrum::LengthSpectrum;

pub const DEFAULT_MAX_ITER: usize = 200;

/// Bound on `|lambda| * min_gap` during automatic bracket expansion. Beyond
/// it the ensemble is concentrated on one length to far below any usable
/// tolerance.
const LAMBDA_GAP_CAP: f64 = 2000.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveConfig {
    pub tol: f64,
    pub max_iter: usize,
    pub bracket: Option<(f64, f64)>,
}

impl SolveConfig {
    pub fn new(tol: f64, max_iter: usize, bracket: Option<(f64, f64)>) -> Result<Self> {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "tol must be positive, got {tol}"
            )));
        }
        if max_iter == 0 {
            return Err(Error::InvalidParameter(
                "max_iter must be at least 1".into(),
            ));
        }
        if let Some((lo, hi)) = bracket {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::InvalidParameter(format!(
                    "bracket ({lo}, {hi}) must be finite and ordered"
                )));
            }
        }
        Ok(Self {
            tol,
            max_iter,
            bracket,
        })
    }

    /// `tol = 1e-10 * l_max`, 200 iterations, automatic bracket.
    pub fn for_spectrum(spectrum: &LengthSpectrum) -> Self {
        Self {
            tol: 1e-10 * spectrum.max_length(),
            max_iter: DEFAULT_MAX_ITER,
            bracket: None,
        }
    }
}

/// Result of [`solve_lambda_traced`].
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub lambda: f64,
    pub mean_length: f64,
    /// Refinement iterations after the bracket was established.
    pub iterations: usize,
    /// Final bracket.
    pub bracket: (f64, f64),
    /// Every lambda at which `L` was evaluated during refinement.
    pub evaluated: Vec<f64>,
}

pub fn solve_lambda(spectrum: &LengthSpectrum, target: f64, cfg: &SolveConfig) -> Result<f64> {
    solve_lambda_traced(spectrum, target, cfg).map(|s| s.lambda)
}

pub fn solve_lambda_traced(
    spectrum: &LengthSpectrum,
    target: f64,
    cfg: &SolveConfig,
) -> Result<Solution> {
    if !target.is_finite() {
        return Err(Error::NonFinite("target mean length"));
    }
    let (lmin, lmax) = (spectrum.min_length(), spectrum.max_length());
    let Some(gap) = spectrum.min_gap() else {
        if target == lmin {
            // every lambda attains it
            return Ok(Solution {
                lambda: 0.0,
                mean_length: lmin,
                iterations: 0,
                bracket: (0.0, 0.0),
                evaluated: Vec::new(),
            });
        }
        return Err(Error::DegenerateSpectrum {
            length: lmin,
            target,
        });
    };
    if !(target > lmin && target < lmax) {
        return Err(Error::TargetOutOfRange {
            target,
            min: lmin,
            max: lmax,
        });
    }

    let mean_at = |lambda: f64| -> Result<(f64, f64)> {
        let st = GibbsState::new(spectrum, lambda)?;
        Ok((st.mean_length(), st.var_length()))
    };

    let (mut lo, mut hi) = match cfg.bracket {
        Some((lo, hi)) => {
            let (l_lo, _) = mean_at(lo)?;
            let (l_hi, _) = mean_at(hi)?;
            if l_lo > target + cfg.tol || l_hi < target - cfg.tol {
                return Err(Error::InvalidParameter(format!(
                    "bracket ({lo}, {hi}) does not enclose the target"
                )));
            }
            (lo, hi)
        }
        None => expand_bracket(target, cfg.tol, LAMBDA_GAP_CAP / gap, mean_at)?,
    };

    let mut evaluated = Vec::new();
    let mut x = 0.5 * (lo + hi);
    for it in 1..=cfg.max_iter {
        evaluated.push(x);
        let (l, var) = mean_at(x)?;
        let resid = l - target;
        if resid.abs() <= cfg.tol {
            return Ok(Solution {
                lambda: x,
                mean_length: l,
                iterations: it,
                bracket: (lo, hi),
                evaluated,
            });
        }
        if resid > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let newton = x - resid / var;
        let mid = 0.5 * (lo + hi);
        x = if var > 0.0 && newton > lo && newton < hi {
            newton
        } else {
            mid
        };
        if x <= lo || x >= hi {
            // bracket exhausted at floating resolution
            break;
        }
    }
    Err(Error::NoConvergence(cfg.max_iter))
}

/// Grows `[-1, 1]` by doubling the failing side until it encloses `target`,
/// with `|lambda| <= cap`. A capped endpoint already within `tol` of the
/// target comes back as a zero-width bracket.
fn expand_bracket<F>(target: f64, tol: f64, cap: f64, mean_at: F) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<(f64, f64)>,
{
    let cap = cap.max(1.0);
    let mut lo = -1.0f64;
    let mut hi = 1.0f64;
    let mut l_lo = mean_at(lo)?.0;
    while l_lo > target {
        if lo <= -cap {
            if l_lo - target <= tol {
                return Ok((lo, lo));
            }
            return Err(Error::NoConvergence(0));
        }
        hi = lo;
        lo = (2.0 * lo).max(-cap);
        l_lo = mean_at(lo)?.0;
    }
    let mut l_hi = mean_at(hi)?.0;
    while l_hi < target {
        if hi >= cap {
            if target - l_hi <= tol {
                return Ok((hi, hi));
            }
            return Err(Error::NoConvergence(0));
        }
        lo = lo.max(hi);
        hi = (2.0 * hi).min(cap);
        l_hi = mean_at(hi)?.0;
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    fn two() -> LengthSpectrum {
        LengthSpectrum::new([(1.0, 1.0), (2.0, 1.0)]).unwrap()
    }

    #[test]
    fn recovers_minus_ln2() {
        let cfg = SolveConfig::for_spectrum(&two());
        let lam = solve_lambda(&two(), 4.0 / 3.0, &cfg).unwrap();
        assert!((lam + LN_2).abs() < 1e-9, "{lam}");
    }

    #[test]
    fn midpoint_is_zero() {
        let cfg = SolveConfig::for_spectrum(&two());
        let lam = solve_lambda(&two(), 1.5, &cfg).unwrap();
        assert!(lam.abs() < 1e-9, "{lam}");
    }

    #[test]
    fn out_of_range() {
        let cfg = SolveConfig::for_spectrum(&two());
        for t in [1.0, 2.0, 0.5, 2.5] {
            assert!(matches!(
                solve_lambda(&two(), t, &cfg),
                Err(Error::TargetOutOfRange { .. })
            ));
        }
    }

    #[test]
    fn degenerate() {
        let one = LengthSpectrum::new([(3.0, 2.0)]).unwrap();
        let cfg = SolveConfig::for_spectrum(&one);
        assert!(matches!(
            solve_lambda(&one, 2.0, &cfg),
            Err(Error::DegenerateSpectrum { .. })
        ));
        assert_eq!(solve_lambda(&one, 3.0, &cfg).unwrap(), 0.0);
    }

    #[test]
    fn stays_in_bracket() {
        let s = LengthSpectrum::new([(0.5, 1.0), (2.0, 3.0), (9.0, 1.0)]).unwrap();
        let cfg = SolveConfig::new(1e-12, 200, Some((-4.0, 4.0))).unwrap();
        let sol = solve_lambda_traced(&s, 1.7, &cfg).unwrap();
        assert!(sol.evaluated.iter().all(|&x| (-4.0..=4.0).contains(&x)));
        assert!(sol.iterations <= 200);
        assert!((sol.mean_length - 1.7).abs() <= 1e-12);
    }

    #[test]
    fn near_boundary_with_close_lengths() {
        // lengths 50 and 50.001: far past 700 / l_max in |lambda|
        let s = LengthSpectrum::new([(50.0, 1.0), (50.001, 1.0)]).unwrap();
        let cfg = SolveConfig::for_spectrum(&s);
        let target = 50.0 + 1e-6;
        let lam = solve_lambda(&s, target, &cfg).unwrap();
        let l = GibbsState::new(&s, lam).unwrap().mean_length();
        assert!((l - target).abs() <= cfg.tol);
        assert!(lam < -700.0 / 50.001);
    }

    #[test]
    fn bad_config() {
        assert!(SolveConfig::new(0.0, 10, None).is_err());
        assert!(SolveConfig::new(1e-9, 0, None).is_err());
        assert!(SolveConfig::new(1e-9, 10, Some((1.0, -1.0))).is_err());
        let cfg = SolveConfig::new(1e-9, 10, Some((0.0, 1.0))).unwrap();
        assert!(solve_lambda(&two(), 1.2, &cfg).is_err());
    }
}
