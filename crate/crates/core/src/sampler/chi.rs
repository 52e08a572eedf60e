//! χ-distributed variates.

use rand::Rng;
use rand_distr::{Distribution, Gamma};

use crate::error::{Error, Result};

/// One draw with density `2^{1−a/2}/Γ(a/2) x^{a−1} e^{−x²/2}` on `x > 0`,
/// taken as the square root of a Gamma(a/2, scale 2) variate.
pub fn sample_chi<R: Rng + ?Sized>(a: f64, rng: &mut R) -> Result<f64> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::domain(format!("χ degrees of freedom must be positive, got {a}")));
    }
    let g = Gamma::new(0.5 * a, 2.0).map_err(|e| Error::domain(e.to_string()))?;
    Ok(g.sample(rng).sqrt())
}
