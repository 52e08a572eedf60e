//! Fast invariant checks across all modules, for running from a release
//! binary without the test harness.

use serde::Serialize;

use crate::beta2::{alpha2_cross_term, alpha2_factored_term, laguerre_poly, q_alpha2_sum, Beta2Series};
use crate::error::Result;
use crate::exact::{moment, q_oracle_n2, ExactSeries};
use crate::jack::{enumerate_partitions, jack_c_one};
use crate::limit::{p_limit, q_limit, q_limit_closed, LimitParams};
use crate::numerics::{bessel_i, Rational};
use crate::params::{EnsembleParams, SeriesAccuracy};
use crate::sampler::{ks_validate, run_batch, sample_bidiagonal, stream_rng};

/// Result of one named check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn outcome(name: &'static str, r: Result<(bool, String)>) -> CheckOutcome {
    match r {
        Ok((pass, detail)) => CheckOutcome { name, pass, detail },
        Err(e) => CheckOutcome {
            name,
            pass: false,
            detail: format!("error: {e}"),
        },
    }
}

fn max_err(name: &str, worst: f64, tol: f64) -> (bool, String) {
    (worst <= tol, format!("{name} max error {worst:.3e} (tolerance {tol:.0e})"))
}

fn params_examples() -> Result<(bool, String)> {
    let ok = EnsembleParams::new(2.0, 3, 3)?.jack_index() == Some(0)
        && EnsembleParams::new(2.0, 3, 5)?.jack_index() == Some(2)
        && EnsembleParams::new(1.0, 2, 4)?.jack_index().is_none()
        && EnsembleParams::new(4.0, 2, 2)?.jack_index() == Some(1)
        && EnsembleParams::new(2.0, 3, 2).is_err();
    Ok((ok, "Jack index detection".into()))
}

fn jack_normalization() -> Result<(bool, String)> {
    let mut worst = 0.0f64;
    for &nu in &[0.5, 1.0, 2.0] {
        for m in 1..=3usize {
            for k in 0..=6usize {
                let mut sum = 0.0;
                for kappa in enumerate_partitions(k, m, None) {
                    sum += jack_c_one(&kappa, nu, m)?;
                }
                let target = (m as f64).powi(k as i32);
                worst = worst.max((sum / target - 1.0).abs());
            }
        }
    }
    Ok(max_err("Σ C_κ(1^m) = m^k", worst, 1e-10))
}

fn bessel_half_order() -> Result<(bool, String)> {
    let acc = SeriesAccuracy::default();
    let mut worst = 0.0f64;
    for &x in &[0.5, 1.0, 3.0, 10.0] {
        let exact = (2.0 / (std::f64::consts::PI * x)).sqrt() * x.sinh();
        worst = worst.max((bessel_i(0.5, x, &acc)? / exact - 1.0).abs());
    }
    Ok(max_err("I_{1/2} vs sinh form", worst, 1e-13))
}

fn exact_mean() -> Result<(bool, String)> {
    let acc = SeriesAccuracy::default();
    let mut worst = 0.0f64;
    for n in 2..=5usize {
        let mu = moment(&EnsembleParams::new(2.0, n, n)?, 1, &acc)?;
        worst = worst.max((mu * (n * n * n) as f64 - 1.0).abs());
    }
    Ok(max_err("μ₁ = 1/N³", worst, 1e-12))
}

fn exact_vs_quadrature() -> Result<(bool, String)> {
    let acc = SeriesAccuracy::default();
    let mut worst = 0.0f64;
    for &(beta, m) in &[(2.0, 3), (4.0, 4), (0.5, 9)] {
        let p = EnsembleParams::new(beta, 2, m)?;
        let s = ExactSeries::new(&p, &acc)?;
        for i in 0..10 {
            let x = 0.5 * i as f64 / 9.0;
            worst = worst.max((s.q(x)? - q_oracle_n2(&p, x, 1e-12)?).abs());
        }
    }
    Ok(max_err("N = 2 series vs quadrature", worst, 1e-8))
}

fn beta2_routes() -> Result<(bool, String)> {
    let acc = SeriesAccuracy::default();
    let mut worst = 0.0f64;
    for n in 1..=4usize {
        for alpha in 0..=2usize {
            let jack = ExactSeries::new(&EnsembleParams::new(2.0, n, n + alpha)?, &acc)?;
            let det = Beta2Series::new(n, n + alpha)?;
            for i in 0..20 {
                let x = i as f64 / (19.0 * n as f64);
                worst = worst.max((jack.q(x)? - det.q(x)?).abs());
                if alpha == 2 {
                    worst = worst.max((q_alpha2_sum(n, x)? - det.q(x)?).abs());
                }
            }
        }
    }
    Ok(max_err("determinant vs Jack route", worst, 1e-10))
}

fn rational_identities() -> Result<(bool, String)> {
    let mut ok = true;
    for n in 1..=8usize {
        for rho in 0..=3usize {
            ok &= laguerre_poly(n, rho).derivative() == -&laguerre_poly(n - 1, rho + 1);
        }
        for i in 0..=6 {
            for j in 0..=6 {
                ok &= Rational::from_integer(alpha2_cross_term(n, i, j)) == alpha2_factored_term(n, i, j);
            }
        }
    }
    Ok((ok, "Laguerre derivative relation and 2×2 cross-term identity".into()))
}

fn limit_closed_forms() -> Result<(bool, String)> {
    let acc = SeriesAccuracy::default();
    let mut worst = 0.0f64;
    for &(beta, m) in &[(1.0, 0), (4.0, 0), (1.0, 1), (2.0, 1), (4.0, 1), (2.0, 2)] {
        let lp = LimitParams::new(beta, m)?;
        for &y in &[0.0, 1.0, 5.0, 25.0] {
            if let Some(c) = q_limit_closed(&lp, y)? {
                worst = worst.max((q_limit(&lp, y, &acc)? - c).abs());
            }
        }
    }
    Ok(max_err("limit series vs closed forms", worst, 1e-10))
}

fn limit_density() -> Result<(bool, String)> {
    let acc = SeriesAccuracy::default();
    let h = 1e-5;
    let mut worst = 0.0f64;
    for &(beta, m) in &[(1.0, 1), (2.0, 2), (4.0, 1)] {
        let lp = LimitParams::new(beta, m)?;
        for &y in &[0.5, 2.0, 10.0] {
            let fd = -(q_limit(&lp, y + h, &acc)? - q_limit(&lp, y - h, &acc)?) / (2.0 * h);
            worst = worst.max((p_limit(&lp, y, &acc)? - fd).abs());
        }
    }
    Ok(max_err("P = −Q′", worst, 1e-7))
}

fn sampler_trace() -> Result<(bool, String)> {
    let p = EnsembleParams::new(1.5, 5, 7)?;
    let mut worst = 0.0f64;
    for i in 0..20 {
        let b = sample_bidiagonal(&p, &mut stream_rng(17, i))?;
        let total: f64 = b.eigenvalues()?.iter().sum();
        worst = worst.max((total / b.trace() - 1.0).abs());
    }
    Ok(max_err("Σλ / tr", worst, 1e-12))
}

fn sampler_determinism() -> Result<(bool, String)> {
    let p = EnsembleParams::new(0.7, 3, 5)?;
    let a = run_batch(&p, 200, 3, 1)?;
    let b = run_batch(&p, 200, 3, 4)?;
    Ok((a == b, "batch identical for 1 and 4 workers".into()))
}

fn sampler_ks() -> Result<(bool, String)> {
    let p = EnsembleParams::new(2.0, 3, 3)?;
    let s = ExactSeries::new(&p, &SeriesAccuracy::default())?;
    let batch = run_batch(&p, 5000, 7, crate::par::available_workers())?;
    let r = ks_validate(&batch, |x| 1.0 - s.q(x).unwrap_or(f64::NAN), 0.01)?;
    Ok((r.pass, format!("KS D = {:.4}, p = {:.3}", r.d_stat, r.p_value)))
}

/// Runs every check in order.
pub fn run_all() -> Vec<CheckOutcome> {
    vec![
        outcome("params.jack_index", params_examples()),
        outcome("jack.normalization", jack_normalization()),
        outcome("numerics.bessel", bessel_half_order()),
        outcome("exact.mean", exact_mean()),
        outcome("exact.quadrature_oracle", exact_vs_quadrature()),
        outcome("beta2.route_agreement", beta2_routes()),
        outcome("beta2.rational_identities", rational_identities()),
        outcome("limit.closed_forms", limit_closed_forms()),
        outcome("limit.density", limit_density()),
        outcome("sampler.trace", sampler_trace()),
        outcome("sampler.determinism", sampler_determinism()),
        outcome("sampler.ks", sampler_ks()),
    ]
}
