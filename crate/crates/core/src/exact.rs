//! Finite-N distribution of the smallest eigenvalue.
//!
//! With `c = βMN/2` and integer `m = βα/2`, the survival function is the
//! finite sum
//!
//! ```text
//! Q(x) = Σ_{k=0}^{mN} a_k x^k (1 − Nx)^{c−k−1},   0 ≤ x < 1/N,
//! a_k  = (−2/β)^k Γ(c)/Γ(c−k) / k! · Σ_{|κ|=k, ℓ(κ)≤m, κ₁≤N} [−N]_κ/[2m/β]_κ · C_κ(1^m)
//! ```
//!
//! with Jack parameter `ν = β/2`, and `Q = 0` for `x ≥ 1/N`. The level sums
//! are computed once per parameter set by [`ExactSeries`]; evaluating `Q`,
//! `P = −Q'` or a moment afterwards costs `O(mN)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jack::{enumerate_partitions, level_sum, JackTable};
use crate::numerics::{
    integrate_adaptive, ln_factorial, ln_gamma_ratio_falling, ln_rising, log_gamma, SignedLog,
};
use crate::par;
use crate::params::{EnsembleParams, SeriesAccuracy};

/// Largest `N` inside the validated precision envelope.
pub const ENVELOPE_MAX_N: usize = 50;
/// Largest Jack index inside the validated precision envelope.
pub const ENVELOPE_MAX_M: usize = 6;

/// Tolerance below zero tolerated (and clamped) in a density value.
const DENSITY_NEG_TOL: f64 = 1e-9;

/// Precomputed level sums of the finite partition series for one parameter set.
#[derive(Debug, Clone)]
pub struct ExactSeries {
    params: EnsembleParams,
    jack_index: usize,
    /// `Σ_{|κ|=k} [−N]_κ/[2m/β]_κ C_κ(1^m)` for `k = 0..=mN`.
    levels: Vec<SignedLog>,
    /// `a_k` of the module docs.
    coeffs: Vec<SignedLog>,
}

impl ExactSeries {
    pub fn new(params: &EnsembleParams, acc: &SeriesAccuracy) -> Result<Self> {
        let m = params.require_jack_index()?;
        let n = params.n_dim();
        let k_top = m * n;
        if k_top > acc.k_max {
            return Err(Error::Divergence {
                tail_tol: acc.tail_tol,
                k_max: acc.k_max,
            });
        }
        let beta = params.beta();
        let nu = params.nu();
        let c = params.trace_exponent();
        let a = [-(n as f64)];
        let b = [2.0 * m as f64 / beta];
        let mut table = JackTable::new(nu, m)?;
        let mut levels = Vec::with_capacity(k_top + 1);
        let mut coeffs = Vec::with_capacity(k_top + 1);
        for k in 0..=k_top {
            let parts = enumerate_partitions(k, m, Some(n));
            let level = level_sum(&a, &b, &mut table, &parts)?.sum;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let coeff = SignedLog {
                ln_abs: level.ln_abs + k as f64 * (2.0 / beta).ln() + ln_gamma_ratio_falling(c, k)?
                    - ln_factorial(k),
                sign: level.sign * sign,
            };
            levels.push(level);
            coeffs.push(if level.is_zero() { SignedLog::ZERO } else { coeff });
        }
        Ok(Self {
            params: *params,
            jack_index: m,
            levels,
            coeffs,
        })
    }

    pub fn params(&self) -> &EnsembleParams {
        &self.params
    }

    pub fn jack_index(&self) -> usize {
        self.jack_index
    }

    /// `a_k` as plain reals (may overflow to ±inf for very large N).
    pub fn coefficients(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64()).collect()
    }

    pub fn warnings(&self) -> Vec<String> {
        envelope_warnings(&self.params)
    }

    fn support_end(&self, x: f64) -> bool {
        let n = self.params.n_dim() as f64;
        x * n >= 1.0 || x >= 1.0 / n
    }

    /// `Q(x) = Prob[λ_min ≥ x]`.
    pub fn q(&self, x: f64) -> Result<f64> {
        check_x(x)?;
        let n = self.params.n_dim();
        if n == 1 {
            return Ok(if x < 1.0 { 1.0 } else { 0.0 });
        }
        if self.support_end(x) {
            return Ok(0.0);
        }
        if x == 0.0 {
            return Ok(1.0);
        }
        let c = self.params.trace_exponent();
        let ln_x = x.ln();
        let ln_u = (-(n as f64) * x).ln_1p();
        let terms: Vec<SignedLog> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a.scale_ln(pow_ln(ln_x, k as f64) + (c - k as f64 - 1.0) * ln_u))
            .collect();
        Ok(SignedLog::sum(&terms).to_f64().clamp(0.0, 1.0))
    }

    /// `P(x) = −Q'(x)` by term-wise differentiation.
    pub fn p(&self, x: f64) -> Result<f64> {
        check_x(x)?;
        let n = self.params.n_dim();
        if n == 1 || self.support_end(x) {
            return Ok(0.0);
        }
        let nf = n as f64;
        let c = self.params.trace_exponent();
        let ln_x = if x == 0.0 { f64::NEG_INFINITY } else { x.ln() };
        let ln_u = (-nf * x).ln_1p();
        let mut terms = Vec::with_capacity(2 * self.coeffs.len());
        for (k, a) in self.coeffs.iter().enumerate() {
            let kf = k as f64;
            let e = c - kf - 1.0;
            // N e x^k u^{e−1}
            if e > 0.0 {
                terms.push(a.scale_ln((nf * e).ln() + pow_ln(ln_x, kf) + (e - 1.0) * ln_u));
            }
            // − k x^{k−1} u^e
            if k > 0 {
                let t = a.scale_ln(kf.ln() + pow_ln(ln_x, kf - 1.0) + e * ln_u);
                terms.push(SignedLog { sign: -t.sign, ..t });
            }
        }
        let value = SignedLog::sum(&terms).to_f64();
        if value < -DENSITY_NEG_TOL {
            return Err(Error::NumericalInconsistency(format!(
                "density {value:e} < 0 at x = {x} for {:?}",
                self.params
            )));
        }
        Ok(value.max(0.0))
    }

    /// `μ_p = E[λ_min^p] = p ∫ x^{p−1} Q(x) dx`, integrated term by term.
    pub fn moment(&self, p: usize) -> Result<f64> {
        if p < 1 {
            return Err(Error::domain("moment order p must be at least 1"));
        }
        let beta = self.params.beta();
        let c = self.params.trace_exponent();
        let n = self.params.n_dim() as f64;
        let ln_n = n.ln();
        let pf = p as f64;
        // k = 0 term p!/((c)_p N^p) as a plain product; the rest relative to it
        let ln_t0 = ln_factorial(p) - ln_rising(c, p) - pf * ln_n;
        let terms: Vec<SignedLog> = self
            .levels
            .iter()
            .enumerate()
            .map(|(k, level)| {
                let kf = k as f64;
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let t = SignedLog {
                    ln_abs: level.ln_abs,
                    sign: level.sign * sign,
                };
                // p (2/β)^k Γ(p+k)/k! · Γ(c)/Γ(c+p) / N^{p+k}
                t.scale_ln(
                    pf.ln() + kf * (2.0 / beta).ln() + ln_rising(kf + 1.0, p - 1)
                        - ln_rising(c, p)
                        - (pf + kf) * ln_n
                        - ln_t0,
                )
            })
            .collect();
        let ratio = SignedLog::sum(&terms).to_f64();
        let t0 = (1..=p).fold(1.0, |acc, i| acc * i as f64 / ((c + (i - 1) as f64) * n));
        if t0.is_normal() {
            Ok(t0 * ratio)
        } else {
            Ok(SignedLog::sum(&terms).scale_ln(ln_t0).to_f64())
        }
    }

    /// Evaluates `Q` or `P` on a strictly increasing grid, in parallel.
    pub fn curve(&self, xs: &[f64], kind: CurveKind) -> Result<DistributionCurve> {
        if xs.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::domain("grid must be strictly increasing"));
        }
        let values = par::map_slice(xs, |&x| match kind {
            CurveKind::Survival => self.q(x),
            CurveKind::Density => self.p(x),
        });
        let points = xs
            .iter()
            .zip(values)
            .map(|(&x, v)| v.map(|v| (x, v)))
            .collect::<Result<Vec<_>>>()?;
        Ok(DistributionCurve {
            params: self.params,
            kind,
            points,
        })
    }
}

fn pow_ln(ln_x: f64, n: f64) -> f64 {
    if n == 0.0 {
        0.0
    } else {
        n * ln_x
    }
}

fn check_x(x: f64) -> Result<()> {
    if x >= 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("x must be nonnegative, got {x}")))
    }
}

/// Warnings for parameters outside the validated precision envelope.
pub fn envelope_warnings(params: &EnsembleParams) -> Vec<String> {
    let mut out = Vec::new();
    if params.n_dim() > ENVELOPE_MAX_N {
        out.push(format!(
            "N = {} exceeds the validated envelope N ≤ {ENVELOPE_MAX_N}; precision not guaranteed",
            params.n_dim()
        ));
    }
    if let Some(m) = params.jack_index() {
        if m > ENVELOPE_MAX_M {
            out.push(format!(
                "m = {m} exceeds the validated envelope m ≤ {ENVELOPE_MAX_M}; precision not guaranteed"
            ));
        }
    }
    out
}

/// `Q_{N,M}(x)`.
pub fn q_exact(params: &EnsembleParams, x: f64, acc: &SeriesAccuracy) -> Result<f64> {
    check_x(x)?;
    ExactSeries::new(params, acc)?.q(x)
}

/// `P_{N,M}(x) = −Q'_{N,M}(x)`.
pub fn p_exact(params: &EnsembleParams, x: f64, acc: &SeriesAccuracy) -> Result<f64> {
    check_x(x)?;
    ExactSeries::new(params, acc)?.p(x)
}

/// `E[λ_min^p]`.
pub fn moment(params: &EnsembleParams, p: usize, acc: &SeriesAccuracy) -> Result<f64> {
    ExactSeries::new(params, acc)?.moment(p)
}

/// The normalization constant `C_{N,M}` of the joint density.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormConst {
    pub ln_value: f64,
    pub value: f64,
}

/// `C_{N,M} = Γ(βMN/2) Γ(1+β/2)^N / Π_{j=0}^{N−1} Γ(β(M−j)/2) Γ(1+β(N−j)/2)`.
pub fn norm_const(params: &EnsembleParams) -> Result<NormConst> {
    let half = params.nu();
    let (n, m) = (params.n_dim(), params.m_dim());
    let numerator = log_gamma(params.trace_exponent())? + n as f64 * log_gamma(1.0 + half)?;
    let mut denominator = 0.0;
    for j in 0..n {
        denominator += log_gamma(half * (m - j) as f64)? + log_gamma(1.0 + half * (n - j) as f64)?;
    }
    let ln_value = numerator - denominator;
    Ok(NormConst {
        ln_value,
        value: ln_value.exp(),
    })
}

/// Direct-quadrature `Q` at `N = 2` for any `β > 0`:
/// `∫_x^{1−x} [λ(1−λ)]^{βα/2} |2λ−1|^β dλ / ∫_0^1 (same)`.
///
/// The integrand is symmetric about 1/2 where it has a kink, so both integrals
/// are taken over the half interval ending there.
pub fn q_oracle_n2(params: &EnsembleParams, x: f64, quad_tol: f64) -> Result<f64> {
    if params.n_dim() != 2 {
        return Err(Error::domain(format!(
            "the quadrature oracle needs N = 2, got N = {}",
            params.n_dim()
        )));
    }
    check_x(x)?;
    if !(quad_tol > 0.0) {
        return Err(Error::domain("quad_tol must be positive"));
    }
    if x >= 0.5 {
        return Ok(0.0);
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    let e = params.weight_exponent();
    let beta = params.beta();
    // scaled by 4^e so the peak of the first factor is 1
    let f = move |lambda: f64| {
        let w = 4.0 * lambda * (1.0 - lambda);
        let first = if e == 0.0 { 0.0 } else { e * w.ln() };
        (first + beta * (1.0 - 2.0 * lambda).ln()).exp()
    };
    // scale of the normalizer, so the tolerance below is relative to it
    let mut probe_tol = 1e-6;
    let rough = loop {
        let r = integrate_adaptive(&f, 0.0, 0.5, probe_tol)?;
        if r > 100.0 * probe_tol || probe_tol < 1e-250 {
            break r;
        }
        probe_tol *= 1e-4;
    };
    let tol = 0.25 * quad_tol * rough;
    let den = integrate_adaptive(&f, 0.0, 0.5, tol)?;
    let num = integrate_adaptive(&f, x, 0.5, tol)?;
    Ok((num / den).clamp(0.0, 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CurveKind {
    /// `Q(x)`
    Survival,
    /// `P(x)`
    Density,
}

/// A sampled `Q` or `P` curve on a grid of `[0, 1/N]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistributionCurve {
    pub params: EnsembleParams,
    pub kind: CurveKind,
    pub points: Vec<(f64, f64)>,
}
