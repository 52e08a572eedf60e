//! Empirical distribution functions and Kolmogorov–Smirnov tests.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par;

/// Empirical CDF `F̂(x) = #{v ≤ x}/n` of a finite sample.
#[derive(Debug, Clone, PartialEq)]
pub struct Ecdf {
    sorted: Vec<f64>,
}

impl Ecdf {
    pub fn new(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySample);
        }
        if values.iter().any(|v| v.is_nan()) {
            return Err(Error::domain("sample contains NaN"));
        }
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        Ok(Self { sorted })
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn sorted_values(&self) -> &[f64] {
        &self.sorted
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.sorted.partition_point(|&v| v <= x) as f64 / self.len() as f64
    }
}

/// Outcome of a Kolmogorov–Smirnov test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KsReport {
    pub d_stat: f64,
    /// Sample size, or the effective size `n₁n₂/(n₁+n₂)` for two samples.
    pub n: f64,
    pub p_value: f64,
    pub level: f64,
    pub pass: bool,
}

/// `P(K > t)` for the limiting Kolmogorov distribution.
pub fn kolmogorov_survival(t: f64) -> f64 {
    if !(t > 0.0) {
        return 1.0;
    }
    if t < 1.0 {
        // P(K ≤ t) = √(2π)/t Σ_{k≥1} exp(−(2k−1)²π²/(8t²))
        let c = std::f64::consts::PI.powi(2) / (8.0 * t * t);
        let mut sum = 0.0;
        for k in 1..200 {
            let j = (2 * k - 1) as f64;
            let term = (-j * j * c).exp();
            sum += term;
            if term < 1e-18 * sum {
                break;
            }
        }
        return (1.0 - (2.0 * std::f64::consts::PI).sqrt() / t * sum).clamp(0.0, 1.0);
    }
    let mut sum = 0.0;
    for k in 1..200 {
        let kf = k as f64;
        let term = (-2.0 * kf * kf * t * t).exp();
        sum += if k % 2 == 1 { term } else { -term };
        if term < 1e-18 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

fn check_level(level: f64) -> Result<()> {
    if level > 0.0 && level < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("significance level must lie in (0, 1), got {level}")))
    }
}

fn report(d: f64, n: f64, level: f64) -> KsReport {
    let p_value = kolmogorov_survival(n.sqrt() * d);
    KsReport {
        d_stat: d,
        n,
        p_value,
        level,
        pass: p_value >= level,
    }
}

/// `sup_x |F̂(x) − F(x)|`, attained at a sample point.
///
/// The reference CDF is evaluated at the sample points in parallel.
pub fn ks_statistic<F: Fn(f64) -> f64 + Sync>(ecdf: &Ecdf, cdf: F) -> f64 {
    let n = ecdf.len() as f64;
    let fs = par::map_slice(&ecdf.sorted, |&x| cdf(x));
    fs.iter()
        .enumerate()
        .map(|(i, &f)| ((i + 1) as f64 / n - f).max(f - i as f64 / n))
        .fold(0.0, f64::max)
}

/// One-sample test of `values` against the distribution function `cdf`.
pub fn ks_test<F: Fn(f64) -> f64 + Sync>(values: &[f64], cdf: F, level: f64) -> Result<KsReport> {
    check_level(level)?;
    let ecdf = Ecdf::new(values)?;
    let d = ks_statistic(&ecdf, cdf);
    Ok(report(d, ecdf.len() as f64, level))
}

/// Two-sample test that `a` and `b` share one distribution.
pub fn ks_two_sample(a: &[f64], b: &[f64], level: f64) -> Result<KsReport> {
    check_level(level)?;
    let ea = Ecdf::new(a)?;
    let eb = Ecdf::new(b)?;
    let d = ea
        .sorted
        .iter()
        .chain(&eb.sorted)
        .map(|&x| (ea.eval(x) - eb.eval(x)).abs())
        .fold(0.0, f64::max);
    let (na, nb) = (ea.len() as f64, eb.len() as f64);
    Ok(report(d, na * nb / (na + nb), level))
}
