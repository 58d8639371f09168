//! Stationarity and maximality of the Gibbs weights for `F = lambda L + S`.
//!
//! `F` is treated as a function of unnormalized positive entry weights
//! `p_k`, with `P_k = p_k / Z` and `Z = sum(p)`. For multiplicity-one spectra
//! these are exactly the per-program weights; an entry of multiplicity `m`
//! enters the entropy through `ln(p_k / m)`. The stationary ray is
//! `p_k = c * m_k * exp(lambda * l_k)` for any `c > 0`, and at `c = 1`:
//!
//! ```text
//! d2F/dp_k2     = -Z_k / (p_k Z^2),   Z_k = Z - p_k
//! d2F/dp_k dp_j = 1 / Z^2             (j != k)
//! ```

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;

use crate::detkernel::StructuredMatrix;
use crate::error::{Error, Result};
use crate::gibbs::{compromise_from_weights, compromise_value, GibbsState};
use crate::numeric::log_sum_exp;
use crate::spectrum::LengthSpectrum;

/// Smallest weight [`grad_f`] accepts.
pub const WEIGHT_FLOOR: f64 = 1e-300;

/// Gradient of `F` in unnormalized coordinates, evaluated term by term:
///
/// `dF/dp_j = lambda (l_j/Z - sum(l p)/Z^2) - ln(p_j/m_j)/Z + sum(p ln(p/m))/Z^2`
pub fn grad_f(weights: &[f64], spectrum: &LengthSpectrum, lambda: f64) -> Result<Vec<f64>> {
    check_dim(weights.len(), spectrum)?;
    for (index, &value) in weights.iter().enumerate() {
        if !(value.is_finite() && value >= WEIGHT_FLOOR) {
            return Err(Error::NonPositiveWeight { index, value });
        }
    }
    let z: f64 = weights.iter().sum();
    let z2 = z * z;
    let mut sum_lp = 0.0;
    let mut sum_plnp = 0.0;
    for (&p, e) in weights.iter().zip(spectrum.entries()) {
        sum_lp += e.length * p;
        sum_plnp += p * (p / e.mult).ln();
    }
    Ok(weights
        .iter()
        .zip(spectrum.entries())
        .map(|(&p, e)| {
            lambda * (e.length / z - sum_lp / z2) - (p / e.mult).ln() / z + sum_plnp / z2
        })
        .collect())
}

/// The same gradient from log-weights `ln p_k`, rearranged as
/// `(c_j - sum_k P_k c_k) / Z` with `c_j = lambda l_j - ln(p_j / m_j)`.
/// Usable when the weights span more than the floating range.
pub fn grad_f_log(log_weights: &[f64], spectrum: &LengthSpectrum, lambda: f64) -> Result<Vec<f64>> {
    check_dim(log_weights.len(), spectrum)?;
    if log_weights.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite("log weight"));
    }
    let log_z = log_sum_exp(log_weights);
    let c: Vec<f64> = log_weights
        .iter()
        .zip(spectrum.entries())
        .map(|(&u, e)| lambda * e.length - (u - e.mult.ln()))
        .collect();
    let mean_c: f64 = log_weights
        .iter()
        .zip(&c)
        .map(|(&u, &cj)| (u - log_z).exp() * cj)
        .sum();
    let inv_z = (-log_z).exp();
    Ok(c.iter().map(|&cj| (cj - mean_c) * inv_z).collect())
}

fn check_dim(got: usize, spectrum: &LengthSpectrum) -> Result<()> {
    if got == spectrum.len() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: spectrum.len(),
            got,
        })
    }
}

/// Log-weights `ln(m_k) + lambda l_k + log_scale` of the stationary ray.
pub fn gibbs_log_weights(spectrum: &LengthSpectrum, lambda: f64, log_scale: f64) -> Vec<f64> {
    spectrum
        .entries()
        .iter()
        .map(|e| e.mult.ln() + lambda * e.length + log_scale)
        .collect()
}

/// Hessian of `F` at the Gibbs point restricted to the first `n` entries.
#[derive(Debug, Clone, PartialEq)]
pub struct HessianReport {
    pub n: usize,
    /// Stationary weights `p_k` over the full spectrum.
    pub weights: Vec<f64>,
    pub z: f64,
    /// `Z_k = sum_{j != k} p_j` over the full spectrum, for `k < n`.
    pub zk: Vec<f64>,
    pub diag: Vec<f64>,
    pub offdiag: f64,
    /// Determinant from the structured-determinant kernel.
    pub det: f64,
    /// `(-Z)^(-n) (1 - sum_{k<=n} p_k / Z) / prod_{k<=n} p_k`.
    pub closed_form_det: f64,
    /// `ln |closed_form_det|`, `-inf` when it vanishes.
    pub log_abs_closed_form: f64,
    /// Sign of the closed form: -1, 0 or +1.
    pub sign: i8,
    /// Mass outside the varied block relative to `Z`. The kernel determinant
    /// loses about `eps / tail_fraction` relative accuracy.
    pub tail_fraction: f64,
    /// Hadamard bound `prod_k ||row_k||` of the `n x n` block.
    pub natural_scale: f64,
}

impl HessianReport {
    /// `n` equals the full spectrum size, where the determinant vanishes.
    pub fn is_degenerate(&self) -> bool {
        self.n == self.weights.len()
    }

    /// `(-1)^n`.
    pub fn expected_sign(&self) -> i8 {
        if self.n.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Relative gap between the kernel and closed-form determinants; for the
    /// degenerate block, `|det|` relative to [`Self::natural_scale`].
    pub fn det_deviation(&self) -> f64 {
        if self.is_degenerate() {
            self.det.abs() / self.natural_scale
        } else {
            ((self.det - self.closed_form_det) / self.closed_form_det).abs()
        }
    }
}

/// [`hessian_at_scaled_gibbs`] at the unscaled point `p_k = m_k exp(lambda l_k)`.
pub fn hessian_at_gibbs(spectrum: &LengthSpectrum, lambda: f64, n: usize) -> Result<HessianReport> {
    hessian_at_scaled_gibbs(spectrum, lambda, n, 0.0)
}

/// Hessian at `p_k = exp(log_scale) m_k exp(lambda l_k)`. Every point of
/// the ray is stationary; the Hessian scales by `exp(-2 log_scale)`.
pub fn hessian_at_scaled_gibbs(
    spectrum: &LengthSpectrum,
    lambda: f64,
    n: usize,
    log_scale: f64,
) -> Result<HessianReport> {
    let m = spectrum.len();
    if n == 0 || n > m {
        return Err(Error::SubsetOutOfRange { n, m });
    }
    if !(lambda.is_finite() && log_scale.is_finite()) {
        return Err(Error::NonFinite("lambda or scale"));
    }
    let logw = gibbs_log_weights(spectrum, lambda, log_scale);
    let log_z = log_sum_exp(&logw);
    let weights: Vec<f64> = logw.iter().map(|u| u.exp()).collect();
    let z = log_z.exp();
    let z2 = z * z;

    let mut zk = Vec::with_capacity(n);
    let mut diag = Vec::with_capacity(n);
    let mut others = Vec::with_capacity(m);
    for (k, &w) in weights.iter().enumerate().take(n) {
        others.clear();
        others.extend(
            logw.iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, u)| *u),
        );
        let zk_k = log_sum_exp(&others).exp();
        zk.push(zk_k);
        diag.push(-zk_k / (w * z2));
    }
    let offdiag = 1.0 / z2;
    let det = StructuredMatrix::new(diag.clone(), offdiag, offdiag)
        .map(|mat| mat.det())
        .unwrap_or(f64::NAN);

    let log_tail = log_sum_exp(&logw[n..]);
    let tail_fraction = (log_tail - log_z).exp();
    let (sign, log_abs_closed_form) = if log_tail == f64::NEG_INFINITY {
        (0i8, f64::NEG_INFINITY)
    } else {
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        let sum_log_p: f64 = logw[..n].iter().sum();
        (sign, -(n as f64) * log_z + (log_tail - log_z) - sum_log_p)
    };
    let closed_form_det = f64::from(sign) * log_abs_closed_form.exp();

    let log_scale_bound: f64 = diag
        .iter()
        .map(|d| 0.5 * (d * d + (n - 1) as f64 * offdiag * offdiag).ln())
        .sum();

    Ok(HessianReport {
        n,
        weights,
        z,
        zk,
        diag,
        offdiag,
        det,
        closed_form_det,
        log_abs_closed_form,
        sign,
        tail_fraction,
        natural_scale: log_scale_bound.exp(),
    })
}

/// Central-difference gradient; `steps[j]` is the half-width in coordinate `j`.
pub fn fd_gradient<F>(f: F, x: &[f64], steps: &[f64]) -> Vec<f64>
where
    F: Fn(&[f64]) -> f64,
{
    let mut probe = x.to_vec();
    (0..x.len())
        .map(|j| {
            let h = steps[j];
            probe[j] = x[j] + h;
            let fp = f(&probe);
            probe[j] = x[j] - h;
            let fm = f(&probe);
            probe[j] = x[j];
            (fp - fm) / (2.0 * h)
        })
        .collect()
}

/// Central-difference Jacobian of a vector field, restricted to the first
/// `n` outputs and inputs. Row `i`, column `j` approximates `dg_i / dx_j`.
pub fn fd_jacobian<G>(g: G, x: &[f64], steps: &[f64], n: usize) -> Vec<Vec<f64>>
where
    G: Fn(&[f64]) -> Vec<f64>,
{
    let mut probe = x.to_vec();
    let mut jac = vec![vec![0.0; n]; n];
    for j in 0..n {
        let h = steps[j];
        probe[j] = x[j] + h;
        let gp = g(&probe);
        probe[j] = x[j] - h;
        let gm = g(&probe);
        probe[j] = x[j];
        for i in 0..n {
            jac[i][j] = (gp[i] - gm[i]) / (2.0 * h);
        }
    }
    jac
}

/// Seeded uniform draw from the probability simplex (normalized exponentials).
pub fn sample_simplex<R: Rng>(rng: &mut R, dim: usize) -> Vec<f64> {
    let e: Vec<f64> = (0..dim).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = e.iter().sum();
    e.into_iter().map(|x| x / total).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    /// Relative finite-difference step: `h_j = fd_step (1 + |p_j|)`.
    pub fd_step: f64,
    pub samples: usize,
    pub seed: u64,
    pub fd_points: usize,
}

impl VerifyConfig {
    pub fn new(fd_step: f64, samples: usize, seed: u64) -> Result<Self> {
        if !(fd_step > 0.0 && fd_step <= 1e-2) {
            return Err(Error::InvalidParameter(format!(
                "fd_step must lie in (0, 1e-2], got {fd_step}"
            )));
        }
        if samples == 0 {
            return Err(Error::InvalidParameter("samples must be positive".into()));
        }
        Ok(Self {
            fd_step,
            samples,
            seed,
            fd_points: 10,
        })
    }
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            fd_step: 1e-6,
            samples: 10_000,
            seed: 0,
            fd_points: 10,
        }
    }
}

pub const FD_GRADIENT_TOL: f64 = 1e-6;
pub const SIMPLEX_EXCESS_TOL: f64 = 1e-12;
/// Kernel/closed-form agreement threshold, enforced when the tail mass is at
/// least [`KERNEL_CONDITIONING_FLOOR`] of `Z`.
pub const DET_AGREEMENT_TOL: f64 = 1e-10;
pub const KERNEL_CONDITIONING_FLOOR: f64 = 1e-5;

#[derive(Debug, Clone, PartialEq)]
pub struct SignCheck {
    pub n: usize,
    pub sign: i8,
    pub expected: i8,
    pub kernel_det: f64,
    pub closed_form_det: f64,
    pub det_deviation: f64,
    /// Whether the kernel determinant is accurate enough to be compared.
    pub conditioned: bool,
}

impl SignCheck {
    pub fn passed(&self) -> bool {
        self.sign == self.expected && (!self.conditioned || self.det_deviation <= DET_AGREEMENT_TOL)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub lambda: f64,
    pub m: usize,
    pub log_z: f64,
    /// Max `|grad F|` at the Gibbs point scaled so the largest weight is 1.
    pub grad_at_gibbs: f64,
    pub grad_tol: f64,
    /// Max analytic vs central-difference gradient deviation.
    pub fd_gradient_dev: f64,
    pub fd_tol: f64,
    pub hessian_signs: Vec<SignCheck>,
    /// Max of `F(Q) - ln Z` over the random simplex points.
    pub simplex_excess: f64,
    pub simplex_tol: f64,
    pub samples: usize,
}

impl VerifyReport {
    pub fn grad_ok(&self) -> bool {
        self.grad_at_gibbs <= self.grad_tol
    }

    pub fn fd_ok(&self) -> bool {
        self.fd_gradient_dev <= self.fd_tol
    }

    pub fn signs_ok(&self) -> bool {
        self.hessian_signs.iter().all(SignCheck::passed)
    }

    pub fn simplex_ok(&self) -> bool {
        self.simplex_excess <= self.simplex_tol
    }

    pub fn passed(&self) -> bool {
        self.grad_ok() && self.fd_ok() && self.signs_ok() && self.simplex_ok()
    }
}

/// Runs the four maximality checks: zero gradient at the Gibbs point,
/// analytic vs finite-difference gradient at random positive points,
/// `sgn H_n = (-1)^n` for `n < m`, and `F(Q) <= ln Z` on random simplex points.
pub fn verify_maximum(
    spectrum: &LengthSpectrum,
    lambda: f64,
    cfg: &VerifyConfig,
) -> Result<VerifyReport> {
    let m = spectrum.len();
    let state = GibbsState::new(spectrum, lambda)?;
    let log_z = state.log_z();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    // (a) stationarity, on the ray member whose largest weight is 1
    let mut logw = state.log_weights().to_vec();
    let top = logw.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    logw.iter_mut().for_each(|u| *u -= top);
    let grad = grad_f_log(&logw, spectrum, lambda)?;
    let grad_at_gibbs = grad.iter().fold(0.0f64, |acc, g| acc.max(g.abs()));
    let grad_tol = 1e-10 * (1.0 + lambda.abs() * spectrum.max_length());

    // (b) analytic gradient vs central differences of F
    let mut fd_gradient_dev = 0.0f64;
    for _ in 0..cfg.fd_points {
        let p: Vec<f64> = (0..m).map(|_| rng.random_range(0.1..10.0)).collect();
        let analytic = grad_f(&p, spectrum, lambda)?;
        let steps: Vec<f64> = p.iter().map(|x| cfg.fd_step * (1.0 + x.abs())).collect();
        let numeric = fd_gradient(
            |q| compromise_from_weights(q, spectrum, lambda).unwrap_or(f64::NAN),
            &p,
            &steps,
        );
        for (a, b) in analytic.iter().zip(&numeric) {
            let dev = (a - b).abs();
            fd_gradient_dev = if dev.is_nan() {
                f64::INFINITY
            } else {
                fd_gradient_dev.max(dev)
            };
        }
    }

    // (c) Hessian determinant signs on proper leading blocks
    let mut hessian_signs = Vec::with_capacity(m.saturating_sub(1));
    for n in 1..m {
        let h = hessian_at_scaled_gibbs(spectrum, lambda, n, -top)?;
        hessian_signs.push(SignCheck {
            n,
            sign: h.sign,
            expected: h.expected_sign(),
            kernel_det: h.det,
            closed_form_det: h.closed_form_det,
            det_deviation: h.det_deviation(),
            conditioned: h.tail_fraction >= KERNEL_CONDITIONING_FLOOR
                && h.det.is_finite()
                && h.closed_form_det.is_normal(),
        });
    }

    // (d) F(Q) <= ln Z on random simplex points
    let mut simplex_excess = f64::NEG_INFINITY;
    for _ in 0..cfg.samples {
        let q = sample_simplex(&mut rng, m);
        let f = compromise_value(&q, spectrum, lambda)?;
        simplex_excess = simplex_excess.max(f - log_z);
    }

    Ok(VerifyReport {
        lambda,
        m,
        log_z,
        grad_at_gibbs,
        grad_tol,
        fd_gradient_dev,
        fd_tol: FD_GRADIENT_TOL,
        hessian_signs,
        simplex_excess,
        simplex_tol: SIMPLEX_EXCESS_TOL,
        samples: cfg.samples,
    })
}

/// Largest spectrum the grid oracle enumerates.
pub const ORACLE_MAX_ENTRIES: usize = 4;

/// Brute-force maximum of [`compromise_value`] over the grid points
/// `(i_1, ..., i_m) / grid` of the simplex.
pub fn simplex_oracle_max(
    spectrum: &LengthSpectrum,
    lambda: f64,
    grid: usize,
) -> Result<(f64, Vec<f64>)> {
    let m = spectrum.len();
    if m > ORACLE_MAX_ENTRIES {
        return Err(Error::TooManyEntries(m));
    }
    if grid == 0 {
        return Err(Error::InvalidParameter("grid must be positive".into()));
    }
    let mut parts = vec![0usize; m];
    let mut best = (f64::NEG_INFINITY, Vec::new());
    enumerate_compositions(&mut parts, 0, grid, &mut |c| {
        let q: Vec<f64> = c.iter().map(|&i| i as f64 / grid as f64).collect();
        let f = compromise_value(&q, spectrum, lambda)?;
        if f > best.0 {
            best = (f, q);
        }
        Ok(())
    })?;
    Ok(best)
}

fn enumerate_compositions<F>(
    parts: &mut [usize],
    idx: usize,
    left: usize,
    visit: &mut F,
) -> Result<()>
where
    F: FnMut(&[usize]) -> Result<()>,
{
    if idx + 1 == parts.len() {
        parts[idx] = left;
        return visit(parts);
    }
    for i in 0..=left {
        parts[idx] = i;
        enumerate_compositions(parts, idx + 1, left - i, visit)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    fn spec(ls: &[f64]) -> LengthSpectrum {
        LengthSpectrum::new(ls.iter().map(|&l| (l, 1.0))).unwrap()
    }

    #[test]
    fn gradient_vanishes_at_gibbs() {
        let g = grad_f(&[0.5, 0.25], &spec(&[1.0, 2.0]), -LN_2).unwrap();
        assert!(g.iter().all(|x| x.abs() < 1e-15), "{g:?}");
        for c in [1e-3, 0.7, 42.0] {
            let g = grad_f(&[0.5 * c, 0.25 * c], &spec(&[1.0, 2.0]), -LN_2).unwrap();
            assert!(
                g.iter().all(|x| x.abs() < 1e-13 / c.min(1.0)),
                "c={c} {g:?}"
            );
        }
    }

    #[test]
    fn gradient_off_stationary_point() {
        let g = grad_f(&[1.0, 1.0], &spec(&[1.0, 2.0]), -LN_2).unwrap();
        assert!((g[0] - LN_2 / 4.0).abs() < 1e-15);
        assert!((g[1] + LN_2 / 4.0).abs() < 1e-15);
        let gl = grad_f_log(&[0.0, 0.0], &spec(&[1.0, 2.0]), -LN_2).unwrap();
        assert!((gl[0] - g[0]).abs() < 1e-15 && (gl[1] - g[1]).abs() < 1e-15);
    }

    #[test]
    fn gradient_rejects_bad_weights() {
        let s = spec(&[1.0, 2.0]);
        assert!(matches!(
            grad_f(&[1.0, 0.0], &s, 0.0),
            Err(Error::NonPositiveWeight { index: 1, .. })
        ));
        assert!(grad_f(&[1.0, 1e-301], &s, 0.0).is_err());
        assert!(grad_f(&[1.0], &s, 0.0).is_err());
    }

    #[test]
    fn hessian_three_level_n2() {
        let h = hessian_at_gibbs(&spec(&[1.0, 2.0, 3.0]), -LN_2, 2).unwrap();
        assert!((h.z - 0.875).abs() < 1e-15);
        let want = 3584.0 / 2401.0;
        assert!((h.closed_form_det - want).abs() < 1e-13 * want);
        assert!((h.det - want).abs() < 1e-10 * want);
        assert_eq!(h.sign, 1);
        // diag_k = -Z_k / (p_k Z^2)
        assert!((h.diag[0] - (-(0.375) / (0.5 * 0.765625))).abs() < 1e-14);
        assert!((h.offdiag - 1.0 / 0.765625).abs() < 1e-14);
        for (k, zk) in h.zk.iter().enumerate() {
            assert!((zk + h.weights[k] - h.z).abs() <= 1e-12 * h.z);
        }
    }

    #[test]
    fn hessian_single_coordinate() {
        let h = hessian_at_gibbs(&spec(&[1.0, 2.0, 3.0]), -LN_2, 1).unwrap();
        assert_eq!(h.sign, -1);
        assert!(h.det < 0.0);
        assert!((h.det - h.diag[0]).abs() <= 1e-15 * h.diag[0].abs());
        assert!((h.closed_form_det - h.diag[0]).abs() <= 1e-13 * h.diag[0].abs());
    }

    #[test]
    fn hessian_full_block_is_degenerate() {
        let s = LengthSpectrum::new([(1.0, 1.0), (2.0, 3.0), (4.5, 2.0)]).unwrap();
        let h = hessian_at_gibbs(&s, -0.4, 3).unwrap();
        assert!(h.is_degenerate());
        assert_eq!(h.sign, 0);
        assert_eq!(h.closed_form_det, 0.0);
        assert!(h.det.abs() <= 1e-10 * h.natural_scale, "{}", h.det);
        assert!(matches!(
            hessian_at_gibbs(&s, -0.4, 4),
            Err(Error::SubsetOutOfRange { n: 4, m: 3 })
        ));
        assert!(hessian_at_gibbs(&s, -0.4, 0).is_err());
    }

    #[test]
    fn hessian_matches_fd_of_gradient() {
        let s = LengthSpectrum::new([(0.5, 1.0), (1.0, 2.0), (2.0, 1.0), (3.5, 1.0)]).unwrap();
        let lam = -0.8;
        let h = hessian_at_gibbs(&s, lam, 3).unwrap();
        let steps: Vec<f64> = h.weights.iter().map(|p| 1e-4 * p).collect();
        let jac = fd_jacobian(|q| grad_f(q, &s, lam).unwrap(), &h.weights, &steps, 3);
        for (i, row) in jac.iter().enumerate() {
            for (j, &got) in row.iter().enumerate() {
                let want = if i == j { h.diag[i] } else { h.offdiag };
                assert!((got - want).abs() <= 1e-5 * want.abs(), "({i},{j})");
            }
        }
    }

    #[test]
    fn verify_two_level() {
        let cfg = VerifyConfig::new(1e-6, 10_000, 7).unwrap();
        let r = verify_maximum(&spec(&[1.0, 2.0]), -LN_2, &cfg).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.simplex_excess <= 0.0 + 1e-12);
        assert_eq!(r.hessian_signs.len(), 1);
        assert_eq!(r.hessian_signs[0].sign, -1);
    }

    #[test]
    fn verify_single_entry_and_uniform() {
        let cfg = VerifyConfig::new(1e-6, 100, 1).unwrap();
        let r = verify_maximum(&spec(&[5.0]), -1.3, &cfg).unwrap();
        assert!(r.passed());
        assert_eq!(r.grad_at_gibbs, 0.0);
        assert!(r.simplex_excess.abs() < 1e-15);
        let s = LengthSpectrum::new([(1.0, 2.0), (3.0, 1.0), (4.0, 5.0)]).unwrap();
        assert!(verify_maximum(&s, 0.0, &cfg).unwrap().passed());
    }

    #[test]
    fn verify_is_deterministic() {
        let s = LengthSpectrum::new([(1.0, 1.0), (2.0, 2.0), (3.0, 1.0)]).unwrap();
        let cfg = VerifyConfig::new(1e-6, 500, 99).unwrap();
        assert_eq!(
            verify_maximum(&s, -0.3, &cfg).unwrap(),
            verify_maximum(&s, -0.3, &cfg).unwrap()
        );
        assert!(VerifyConfig::new(0.1, 10, 0).is_err());
        assert!(VerifyConfig::new(1e-6, 0, 0).is_err());
    }

    #[test]
    fn oracle_two_level() {
        let (best, q) = simplex_oracle_max(&spec(&[1.0, 2.0]), -LN_2, 300).unwrap();
        assert!((best - 0.75f64.ln()).abs() < 1e-4);
        assert!(best <= 0.75f64.ln() + 1e-15);
        assert!((q[0] - 2.0 / 3.0).abs() <= 1.0 / 300.0);
        assert!((q[1] - 1.0 / 3.0).abs() <= 1.0 / 300.0);
    }

    #[test]
    fn oracle_vertices() {
        let s = spec(&[1.0, 2.0, 4.0]);
        let (best, q) = simplex_oracle_max(&s, -0.5, 1).unwrap();
        assert_eq!(best, -0.5);
        assert_eq!(q, vec![1.0, 0.0, 0.0]);
        let (best, q) = simplex_oracle_max(&spec(&[1.0, 1.0]), -0.5, 10).unwrap();
        // merged entry of two programs: entropy ln 2
        assert_eq!(q, vec![1.0]);
        assert!((best - (-0.5 + LN_2)).abs() < 1e-15);
        assert!(matches!(
            simplex_oracle_max(&spec(&[1.0, 2.0, 3.0, 4.0, 5.0]), 0.0, 3),
            Err(Error::TooManyEntries(5))
        ));
    }
}
