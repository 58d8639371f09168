//! Determinant of the matrix with diagonal `r`, the constant `a` strictly
//! above the diagonal and the constant `b` strictly below it:
//!
//! ```text
//! det = (a f(b) - b f(a)) / (a - b),   f(x) = (r_1 - x) ... (r_n - x)
//! ```
//!
//! and, in the limit `b -> a`, `det = f(a) - a f'(a)`.
//!
//! For `a != b` the quotient is evaluated as `f(a) - a f[a, b]`, where the
//! divided difference `f[a, b] = (f(a) - f(b)) / (a - b)` is expanded factor
//! by factor. The expansion has no cancellation as `b` approaches `a` and
//! tends to `f'(a)`.

use crate::error::{Error, Result};

/// Relative threshold below which `a` and `b` are treated as equal.
pub const EQUAL_OFFDIAG_TOL: f64 = 1e-8;

/// Largest matrix accepted by [`dense_det_oracle`].
pub const ORACLE_MAX_DIM: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct StructuredMatrix {
    r: Vec<f64>,
    a: f64,
    b: f64,
}

impl StructuredMatrix {
    pub fn new(r: Vec<f64>, a: f64, b: f64) -> Result<Self> {
        if r.is_empty() {
            return Err(Error::InvalidParameter("matrix needs n >= 1".into()));
        }
        if !(a.is_finite() && b.is_finite() && r.iter().all(|x| x.is_finite())) {
            return Err(Error::NonFinite("matrix entry"));
        }
        Ok(Self { r, a, b })
    }

    pub fn dim(&self) -> usize {
        self.r.len()
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.r
    }

    pub fn upper(&self) -> f64 {
        self.a
    }

    pub fn lower(&self) -> f64 {
        self.b
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.dim();
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                m[i * n + j] = match i.cmp(&j) {
                    std::cmp::Ordering::Equal => self.r[i],
                    std::cmp::Ordering::Less => self.a,
                    std::cmp::Ordering::Greater => self.b,
                };
            }
        }
        m
    }

    pub fn det(&self) -> f64 {
        structured_det(self)
    }
}

/// `f(x) = prod(r_i - x)` and `f'(x) = -sum_i prod_{j != i}(r_j - x)`.
///
/// The derivative uses prefix/suffix products, so it stays exact when some
/// factor vanishes.
pub fn f_poly(r: &[f64], x: f64) -> (f64, f64) {
    let n = r.len();
    let mut suffix = vec![1.0; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] * (r[i] - x);
    }
    let mut prefix = 1.0;
    let mut deriv = 0.0;
    for i in 0..n {
        deriv -= prefix * suffix[i + 1];
        prefix *= r[i] - x;
    }
    (prefix, deriv)
}

/// Divided difference `(f(x) - f(y)) / (x - y)` of `f(t) = prod(r_i - t)`:
/// `-sum_i prod_{j<i}(r_j - x) prod_{j>i}(r_j - y)`. Equals `f'(x)` at `x = y`.
pub fn f_divided_difference(r: &[f64], x: f64, y: f64) -> f64 {
    let n = r.len();
    let mut suffix = vec![1.0; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] * (r[i] - y);
    }
    let mut prefix = 1.0;
    let mut dd = 0.0;
    for i in 0..n {
        dd -= prefix * suffix[i + 1];
        prefix *= r[i] - x;
    }
    dd
}

pub fn structured_det(mat: &StructuredMatrix) -> f64 {
    let (a, b) = (mat.a, mat.b);
    if (a - b).abs() > EQUAL_OFFDIAG_TOL * (a.abs() + b.abs() + 1.0) {
        // (a f(b) - b f(a)) / (a - b) = f(a) - a f[a, b]
        let (fa, _) = f_poly(&mat.r, a);
        fa - a * f_divided_difference(&mat.r, a, b)
    } else {
        let mid = 0.5 * (a + b);
        let (f, df) = f_poly(&mat.r, mid);
        f - mid * df
    }
}

/// Determinant of a row-major `n x n` matrix by Gaussian elimination with
/// partial pivoting.
pub fn dense_det_oracle(matrix: &[f64], n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter("empty matrix".into()));
    }
    if n > ORACLE_MAX_DIM {
        return Err(Error::InvalidParameter(format!(
            "oracle supports n <= {ORACLE_MAX_DIM}, got {n}"
        )));
    }
    if matrix.len() != n * n {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            got: matrix.len(),
        });
    }
    if matrix.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite("matrix entry"));
    }
    let mut m = matrix.to_vec();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i * n + col].abs().total_cmp(&m[j * n + col].abs()))
            .expect("non-empty range");
        if m[pivot * n + col] == 0.0 {
            return Ok(0.0);
        }
        if pivot != col {
            for k in 0..n {
                m.swap(pivot * n + k, col * n + k);
            }
            det = -det;
        }
        let d = m[col * n + col];
        det *= d;
        for row in col + 1..n {
            let factor = m[row * n + col] / d;
            if factor != 0.0 {
                for k in col + 1..n {
                    m[row * n + k] -= factor * m[col * n + k];
                }
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sm(r: &[f64], a: f64, b: f64) -> StructuredMatrix {
        StructuredMatrix::new(r.to_vec(), a, b).unwrap()
    }

    #[test]
    fn poly_values() {
        assert_eq!(f_poly(&[2.0, 3.0], 0.0), (6.0, -5.0));
        assert_eq!(f_poly(&[1.0, 1.0, 1.0], 1.0), (0.0, 0.0));
        assert_eq!(f_poly(&[4.0], 1.5), (2.5, -1.0));
        // simple root: f'(x) = -prod of the remaining factors
        assert_eq!(f_poly(&[1.0, 3.0, 4.0], 1.0), (0.0, -6.0));
    }

    #[test]
    fn divided_difference() {
        let r = [2.0, -1.0, 3.5];
        let (fx, dfx) = f_poly(&r, 0.3);
        let (fy, _) = f_poly(&r, 1.7);
        let dd = f_divided_difference(&r, 0.3, 1.7);
        assert!((dd - (fx - fy) / (0.3 - 1.7)).abs() < 1e-14);
        assert_eq!(f_divided_difference(&r, 0.3, 0.3), dfx);
    }

    #[test]
    fn quotient_form_agrees() {
        let r = [1.5, -2.0, 0.25, 3.0];
        let (a, b) = (0.7, -1.2);
        let (fa, _) = f_poly(&r, a);
        let (fb, _) = f_poly(&r, b);
        let quotient = (a * fb - b * fa) / (a - b);
        assert!((structured_det(&sm(&r, a, b)) - quotient).abs() < 1e-13);
    }

    #[test]
    fn det_examples() {
        assert_eq!(structured_det(&sm(&[2.0, 3.0], 1.0, 0.0)), 6.0);
        assert_eq!(structured_det(&sm(&[2.0, -3.0, 0.5], 0.0, 0.0)), -3.0);
        assert_eq!(structured_det(&sm(&[1.0, 1.0, 1.0], 1.0, 1.0)), 0.0);
        assert_eq!(structured_det(&sm(&[4.0], 9.0, 9.0)), 4.0);
        assert_eq!(structured_det(&sm(&[4.0], 9.0, -2.0)), 4.0);
    }

    #[test]
    fn matches_oracle_small() {
        let m = sm(&[2.0, 3.0, 5.0], 1.0, 4.0);
        let dense = dense_det_oracle(&m.to_dense(), 3).unwrap();
        // 2(15-4) - 1(20-4) + 1(16-12) = 10
        assert!((dense - 10.0).abs() < 1e-12);
        assert!((structured_det(&m) - dense).abs() <= 1e-10 * dense.abs());
    }

    #[test]
    fn oracle_basics() {
        assert_eq!(dense_det_oracle(&[2.0, 1.0, 0.0, 3.0], 2).unwrap(), 6.0);
        let mut id = vec![0.0; 25];
        for i in 0..5 {
            id[i * 5 + i] = 1.0;
        }
        assert_eq!(dense_det_oracle(&id, 5).unwrap(), 1.0);
        // a single swap flips the sign
        assert_eq!(dense_det_oracle(&[0.0, 1.0, 1.0, 0.0], 2).unwrap(), -1.0);
        assert!(dense_det_oracle(&[], 0).is_err());
        assert!(dense_det_oracle(&[1.0, 2.0], 2).is_err());
        assert!(dense_det_oracle(&[f64::NAN], 1).is_err());
    }

    #[test]
    fn validation() {
        assert!(StructuredMatrix::new(vec![], 1.0, 1.0).is_err());
        assert!(StructuredMatrix::new(vec![1.0], f64::INFINITY, 1.0).is_err());
    }
}
