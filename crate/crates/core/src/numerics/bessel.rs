use crate::error::{Error, Result};
use crate::params::SeriesAccuracy;

use super::gamma::log_gamma;
use super::sum::CompensatedSum;

/// Largest argument for which the ascending series is trusted.
pub const BESSEL_ARG_MAX: f64 = 60.0;

/// Modified Bessel function of the first kind `I_ρ(x)` from its ascending
/// series `(x/2)^ρ Σ_k (x/2)^{2k} / (k! Γ(ρ+k+1))`, for `ρ > −1`, `0 ≤ x ≤ 60`.
pub fn bessel_i(rho: f64, x: f64, acc: &SeriesAccuracy) -> Result<f64> {
    if !(rho > -1.0) || !rho.is_finite() {
        return Err(Error::domain(format!("bessel_i requires ρ > −1, got {rho}")));
    }
    if !(x >= 0.0) {
        return Err(Error::domain(format!("bessel_i requires x ≥ 0, got {x}")));
    }
    if x > BESSEL_ARG_MAX {
        return Err(Error::domain(format!(
            "bessel_i argument {x} is outside the validated range [0, {BESSEL_ARG_MAX}]"
        )));
    }
    if x == 0.0 {
        return Ok(if rho == 0.0 { 1.0 } else { 0.0 });
    }
    let half = 0.5 * x;
    let q = half * half;
    let mut term = (rho * half.ln() - log_gamma(rho + 1.0)?).exp();
    let mut sum = CompensatedSum::new();
    sum.add(term);
    for k in 1..=acc.k_max {
        term *= q / (k as f64 * (rho + k as f64));
        sum.add(term);
        // Terms decrease once k exceeds x/2; only stop past the peak.
        if k as f64 > half && term <= acc.tail_tol * sum.value() {
            return Ok(sum.value());
        }
    }
    Err(Error::Divergence {
        tail_tol: acc.tail_tol,
        k_max: acc.k_max,
    })
}
