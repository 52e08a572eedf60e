use crate::error::{Error, Result};

/// `ln Γ(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("log_gamma requires x > 0, got {x}")));
    }
    Ok(libm::lgamma(x))
}

/// `Γ(a)/Γ(a−k) = (a−1)(a−2)···(a−k)` as a direct product.
pub fn gamma_ratio_falling(a: f64, k: usize) -> Result<f64> {
    check_falling(a, k)?;
    Ok((1..=k).map(|i| a - i as f64).product())
}

/// Logarithm of [`gamma_ratio_falling`], summed factor by factor.
pub fn ln_gamma_ratio_falling(a: f64, k: usize) -> Result<f64> {
    check_falling(a, k)?;
    Ok((1..=k).map(|i| (a - i as f64).ln()).sum())
}

fn check_falling(a: f64, k: usize) -> Result<()> {
    if !(a - k as f64 > 0.0) {
        return Err(Error::domain(format!(
            "gamma_ratio_falling requires a − k > 0, got a = {a}, k = {k}"
        )));
    }
    Ok(())
}

/// `ln (a)_k` for `a > 0`.
pub fn ln_rising(a: f64, k: usize) -> f64 {
    (0..k).map(|i| (a + i as f64).ln()).sum()
}

/// `ln k!` as a sum of logarithms (exact enough for any `k` used here).
pub fn ln_factorial(k: usize) -> f64 {
    (2..=k).map(|i| (i as f64).ln()).sum()
}
