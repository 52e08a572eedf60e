//! Eigenvalues of `L = BBᵀ` for a lower bidiagonal `B`, without forming `L`.

use crate::error::{Error, Result};

const MAX_BISECTIONS: usize = 2200;

/// Lower bidiagonal factor: `B_ii = diag[i]`, `B_{i+1,i} = sub[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bidiagonal {
    diag: Vec<f64>,
    sub: Vec<f64>,
}

impl Bidiagonal {
    pub fn new(diag: Vec<f64>, sub: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || sub.len() + 1 != diag.len() {
            return Err(Error::domain(format!(
                "bidiagonal needs n ≥ 1 diagonal and n − 1 subdiagonal entries, got {} and {}",
                diag.len(),
                sub.len()
            )));
        }
        if diag.iter().chain(&sub).any(|v| !v.is_finite()) {
            return Err(Error::domain("bidiagonal entries must be finite"));
        }
        Ok(Self { diag, sub })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn sub(&self) -> &[f64] {
        &self.sub
    }

    /// `tr(BBᵀ)`, the sum of squares of all entries.
    pub fn trace(&self) -> f64 {
        self.diag.iter().chain(&self.sub).map(|v| v * v).sum()
    }

    /// Diagonal and superdiagonal of `BBᵀ`.
    pub fn tridiagonal(&self) -> (Vec<f64>, Vec<f64>) {
        let n = self.dim();
        let main = (0..n)
            .map(|i| self.diag[i] * self.diag[i] + if i > 0 { self.sub[i - 1] * self.sub[i - 1] } else { 0.0 })
            .collect();
        let off = (0..n - 1).map(|i| self.diag[i] * self.sub[i]).collect();
        (main, off)
    }

    /// Number of eigenvalues of `BBᵀ` strictly below `sigma`.
    ///
    /// Counts negative pivots of `BBᵀ − σI = L₊D₊L₊ᵀ` using the differential
    /// stationary recurrence `q_i = d_i² + t_i`, `t_{i+1} = s_i² t_i/q_i − σ`,
    /// which is accurate relative to the entries of `B`.
    pub fn count_below(&self, sigma: f64) -> usize {
        let n = self.dim();
        let mut count = 0;
        let mut t = -sigma;
        for i in 0..n {
            let mut q = self.diag[i] * self.diag[i] + t;
            if q == 0.0 {
                q = -f64::MIN_POSITIVE;
            }
            if q < 0.0 {
                count += 1;
            }
            if i + 1 < n {
                // t/q → 1 when t dominates
                let r = if t.is_infinite() { 1.0 } else { t / q };
                t = self.sub[i] * self.sub[i] * r - sigma;
            }
        }
        count
    }

    /// The `k`-th smallest eigenvalue of `BBᵀ` (0-based) by bisection to full
    /// floating-point resolution.
    pub fn eigenvalue(&self, k: usize) -> Result<f64> {
        let n = self.dim();
        if k >= n {
            return Err(Error::domain(format!("eigenvalue index {k} out of range for dimension {n}")));
        }
        let mut lo = 0.0f64;
        let mut hi = self.trace() * (1.0 + 8.0 * f64::EPSILON) + f64::MIN_POSITIVE;
        if self.count_below(hi) != n {
            return Err(Error::EigensolverFailure(format!(
                "upper bound {hi} does not bracket the spectrum"
            )));
        }
        for _ in 0..MAX_BISECTIONS {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                return Ok(hi);
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Err(Error::EigensolverFailure(format!(
            "bisection did not converge in {MAX_BISECTIONS} steps"
        )))
    }

    pub fn smallest_eigenvalue(&self) -> Result<f64> {
        self.eigenvalue(0)
    }

    /// All eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        (0..self.dim()).map(|k| self.eigenvalue(k)).collect()
    }
}
