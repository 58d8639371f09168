//! Gibbs ensembles over program-length spectra.
//!
//! A [`LengthSpectrum`] lists program lengths with multiplicities. At a fixed
//! Lagrange parameter `lambda` (equivalently an inverse temperature
//! `beta = -lambda`) the ensemble assigns each program the weight
//! `exp(lambda * length)`. This crate computes the partition function, mean
//! length, entropy and the compromise value `F = lambda * L + S`, and checks
//! numerically that the Gibbs weights maximize `F`:
//!
//! - [`gibbs`]: log-domain ensemble statistics.
//! - [`extremum`]: analytic gradient and Hessian of `F`, finite-difference and
//!   brute-force simplex cross-checks.
//! - [`detkernel`]: closed-form determinant of the matrix with diagonal `r`,
//!   constant `a` above and constant `b` below the diagonal, plus an LU oracle.
//! - [`inverse`]: recover `lambda` from a target mean length.
//! - [`spectrum`]: spectrum ingestion and certified tail truncation.

pub mod detkernel;
pub mod error;
pub mod extremum;
pub mod gibbs;
pub mod inverse;
pub mod numeric;
pub mod spectrum;

pub use detkernel::{
    dense_det_oracle, f_divided_difference, f_poly, structured_det, StructuredMatrix,
};
pub use error::{Error, Result};
pub use extremum::{
    grad_f, grad_f_log, hessian_at_gibbs, simplex_oracle_max, verify_maximum, HessianReport,
    VerifyConfig, VerifyReport,
};
pub use gibbs::{compromise_value, EnsembleStats, GibbsState, TemperatureParam};
pub use inverse::{solve_lambda, SolveConfig};
pub use spectrum::{certified_truncation, tail_cutoff, Entry, LengthSpectrum, TailPolicy};
