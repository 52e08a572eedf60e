//! Hard-edge scaling limit `x = y/(4N³)`, `N → ∞` at fixed `m = M − N + 1 − 2/β`.
//!
//! `Q(y) = e^{−βy/8} ₀F₁^(β/2)(2m/β; (y/4)·1^m)` and `P(y) = −Q′(y)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jack::hyper_pfq_equal_full;
use crate::numerics::{bessel_i, log_gamma};
use crate::params::SeriesAccuracy;

/// Largest `y` of the validated envelope.
pub const ENVELOPE_MAX_Y: f64 = 100.0;
/// Largest `m` of the validated envelope.
pub const ENVELOPE_MAX_M: usize = 6;

/// Parameters of the limiting law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LimitParams {
    beta: f64,
    m: usize,
}

impl LimitParams {
    pub fn new(beta: f64, m: usize) -> Result<Self> {
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::domain(format!("β must be a positive finite number, got {beta}")));
        }
        Ok(Self { beta, m })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn m(&self) -> usize {
        self.m
    }

    fn nu(&self) -> f64 {
        self.beta / 2.0
    }

    fn lower(&self) -> f64 {
        2.0 * self.m as f64 / self.beta
    }
}

/// Warnings for `(m, y)` outside the validated envelope.
pub fn envelope_warnings(lp: &LimitParams, y: f64) -> Vec<String> {
    let mut out = Vec::new();
    if lp.m > ENVELOPE_MAX_M {
        out.push(format!("m = {} exceeds the validated range m ≤ {ENVELOPE_MAX_M}", lp.m));
    }
    if y > ENVELOPE_MAX_Y {
        out.push(format!("y = {y} exceeds the validated range y ≤ {ENVELOPE_MAX_Y}"));
    }
    out
}

fn check_y(y: f64) -> Result<()> {
    if y >= 0.0 && y.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("y must be a nonnegative finite number, got {y}")))
    }
}

/// `Q(y)` and `P(y)` from one pass over the series.
pub fn limit_pair(lp: &LimitParams, y: f64, acc: &SeriesAccuracy) -> Result<(f64, f64)> {
    check_y(y)?;
    let damp = (-lp.beta * y / 8.0).exp();
    let f = hyper_pfq_equal_full(&[], &[lp.lower()], lp.nu(), lp.m, y / 4.0, acc)?;
    let q = damp * f.value;
    let p = if lp.m >= 1 && y == 0.0 {
        0.0
    } else {
        damp * (lp.beta / 8.0 * f.value - f.derivative / 4.0)
    };
    Ok((q, p))
}

/// Limiting survival function `Q(y)`.
pub fn q_limit(lp: &LimitParams, y: f64, acc: &SeriesAccuracy) -> Result<f64> {
    limit_pair(lp, y, acc).map(|(q, _)| q)
}

/// Limiting density `P(y) = −Q′(y)`, differentiated term by term.
///
/// Rounding can leave a tiny negative value where the density is close to
/// zero; values above `−1e-12` are clamped to zero.
pub fn p_limit(lp: &LimitParams, y: f64, acc: &SeriesAccuracy) -> Result<f64> {
    let (_, p) = limit_pair(lp, y, acc)?;
    if p < 0.0 {
        if p > -1e-12 {
            return Ok(0.0);
        }
        return Err(Error::NumericalInconsistency(format!(
            "limiting density is negative ({p}) at y = {y}"
        )));
    }
    Ok(p)
}

/// Closed forms of `Q(y)`: `m = 0` for every β, `m = 1` for every β, and
/// `β = 2, m = 2`. `None` elsewhere.
///
/// For `m = 1` the single-variable series gives
/// `2^{2/β−1} Γ(2/β) e^{−βy/8} y^{1/2−1/β} I_{2/β−1}(√y)`.
pub fn q_limit_closed(lp: &LimitParams, y: f64) -> Result<Option<f64>> {
    check_y(y)?;
    let acc = SeriesAccuracy::default();
    let damp = (-lp.beta * y / 8.0).exp();
    let r = y.sqrt();
    match lp.m {
        0 => Ok(Some(damp)),
        1 => {
            if y == 0.0 {
                return Ok(Some(1.0));
            }
            let b = 2.0 / lp.beta;
            let ln_pref = (b - 1.0) * std::f64::consts::LN_2 + log_gamma(b)? + (0.5 - 1.0 / lp.beta) * y.ln();
            Ok(Some(damp * ln_pref.exp() * bessel_i(b - 1.0, r, &acc)?))
        }
        2 if lp.beta == 2.0 => {
            let i0 = bessel_i(0.0, r, &acc)?;
            let i1 = bessel_i(1.0, r, &acc)?;
            Ok(Some(damp * (i0 * i0 - i1 * i1)))
        }
        _ => Ok(None),
    }
}

/// `4^m (β/2)^{β/2+2m+1} Γ(1+β/2) / (Γ(1+m) Γ(1+m+β/2))`, the prefactor of
/// the closed density form `A y^m e^{−βy/8} ₀F₁(2m/β+2; (y/4)·1^m)`.
pub fn closed_prefactor(lp: &LimitParams) -> Result<f64> {
    let m = lp.m as f64;
    let h = lp.beta / 2.0;
    let ln = m * 4f64.ln() + (h + 2.0 * m + 1.0) * h.ln() + log_gamma(1.0 + h)?
        - log_gamma(1.0 + m)?
        - log_gamma(1.0 + m + h)?;
    Ok(ln.exp())
}

/// The closed-prefactor density form, kept for comparison with `−Q′`.
pub fn p_limit_prefactor_form(lp: &LimitParams, y: f64, acc: &SeriesAccuracy) -> Result<f64> {
    check_y(y)?;
    let f = hyper_pfq_equal_full(&[], &[lp.lower() + 2.0], lp.nu(), lp.m, y / 4.0, acc)?;
    Ok(closed_prefactor(lp)? * y.powi(lp.m as i32) * (-lp.beta * y / 8.0).exp() * f.value)
}

/// One point of the prefactor-form versus derived density comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityDiscrepancy {
    pub y: f64,
    pub derived: f64,
    pub prefactor_form: f64,
    /// `prefactor_form / derived`; NaN where the derived density is zero.
    pub ratio: f64,
}

/// Compares the closed-prefactor density form with `−Q′` on a set of points.
pub fn density_discrepancy(lp: &LimitParams, ys: &[f64], acc: &SeriesAccuracy) -> Result<Vec<DensityDiscrepancy>> {
    ys.iter()
        .map(|&y| {
            let derived = p_limit(lp, y, acc)?;
            let prefactor_form = p_limit_prefactor_form(lp, y, acc)?;
            let ratio = if derived == 0.0 { f64::NAN } else { prefactor_form / derived };
            Ok(DensityDiscrepancy {
                y,
                derived,
                prefactor_form,
                ratio,
            })
        })
        .collect()
}
