//! Monte Carlo sampling of the trace-normalized smallest eigenvalue.
//!
//! `L = BBᵀ` with `B` lower bidiagonal, `B_ii ~ χ_{β(M−i)}` and
//! `B_{i+1,i} ~ χ_{β(N−1−i)}`. The unconstrained spectrum is drawn and then
//! divided by `tr L`.

mod chi;
mod ks;
mod tridiag;

use std::io::{BufRead, Write};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use chi::sample_chi;
pub use ks::{kolmogorov_survival, ks_statistic, ks_test, ks_two_sample, Ecdf, KsReport};
pub use tridiag::Bidiagonal;

use crate::error::{Error, Result};
use crate::exact::{q_oracle_n2, ExactSeries};
use crate::par;
use crate::params::{EnsembleParams, SeriesAccuracy};

/// Draws the bidiagonal factor `B` of one unconstrained matrix.
pub fn sample_bidiagonal<R: rand::Rng + ?Sized>(params: &EnsembleParams, rng: &mut R) -> Result<Bidiagonal> {
    let beta = params.beta();
    let (n, m) = (params.n_dim(), params.m_dim());
    let diag = (0..n)
        .map(|i| sample_chi(beta * (m - i) as f64, rng))
        .collect::<Result<Vec<_>>>()?;
    let sub = (0..n - 1)
        .map(|i| sample_chi(beta * (n - 1 - i) as f64, rng))
        .collect::<Result<Vec<_>>>()?;
    Bidiagonal::new(diag, sub)
}

/// One draw of `λ_min(L)/tr(L)`, in `(0, 1/N]`.
pub fn sample_smallest<R: rand::Rng + ?Sized>(params: &EnsembleParams, rng: &mut R) -> Result<f64> {
    if params.n_dim() == 1 {
        return Ok(1.0);
    }
    let b = sample_bidiagonal(params, rng)?;
    let lambda = b.smallest_eigenvalue()?;
    Ok((lambda / b.trace()).min(1.0 / params.n_dim() as f64))
}

/// Random stream for sample `index`: stream `index` of the ChaCha8 generator
/// keyed by `seed`.
pub fn stream_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Samples of the normalized smallest eigenvalue for one parameter set.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleBatch {
    params: EnsembleParams,
    seed: u64,
    values: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct ParamsHeader {
    beta: f64,
    n_dim: usize,
    m_dim: usize,
}

#[derive(Serialize, Deserialize)]
struct BatchHeader {
    params: ParamsHeader,
    seed: u64,
    count: usize,
}

impl SampleBatch {
    pub fn params(&self) -> &EnsembleParams {
        &self.params
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn count(&self) -> usize {
        self.values.len()
    }

    /// Writes a JSON header line followed by one value per line. Values use
    /// the shortest decimal that parses back to the same `f64`.
    pub fn write_to<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        let header = BatchHeader {
            params: ParamsHeader {
                beta: self.params.beta(),
                n_dim: self.params.n_dim(),
                m_dim: self.params.m_dim(),
            },
            seed: self.seed,
            count: self.values.len(),
        };
        writeln!(out, "{}", serde_json::to_string(&header).map_err(std::io::Error::other)?)?;
        for v in &self.values {
            writeln!(out, "{v}")?;
        }
        Ok(())
    }

    pub fn read_from<R: BufRead>(input: R) -> Result<Self> {
        let mut lines = input.lines();
        let first = lines
            .next()
            .ok_or_else(|| Error::Format("missing header line".into()))?
            .map_err(|e| Error::Format(e.to_string()))?;
        let header: BatchHeader = serde_json::from_str(&first).map_err(|e| Error::Format(e.to_string()))?;
        let params = EnsembleParams::new(header.params.beta, header.params.n_dim, header.params.m_dim)?;
        let mut values = Vec::with_capacity(header.count);
        for (i, line) in lines.enumerate() {
            let line = line.map_err(|e| Error::Format(e.to_string()))?;
            let t = line.trim();
            if t.is_empty() {
                continue;
            }
            let v: f64 = t
                .parse()
                .map_err(|_| Error::Format(format!("line {}: cannot parse {t:?}", i + 2)))?;
            values.push(v);
        }
        if values.len() != header.count {
            return Err(Error::Format(format!(
                "header declares {} values, found {}",
                header.count,
                values.len()
            )));
        }
        Ok(Self {
            params,
            seed: header.seed,
            values,
        })
    }
}

/// Draws `count` samples; sample `i` uses [`stream_rng`]`(seed, i)`, so the
/// result does not depend on `workers`.
pub fn run_batch(params: &EnsembleParams, count: usize, seed: u64, workers: usize) -> Result<SampleBatch> {
    if count == 0 {
        return Err(Error::EmptySample);
    }
    if workers == 0 {
        return Err(Error::domain("workers must be at least 1"));
    }
    let values = par::map_indexed(count, workers, |i| sample_smallest(params, &mut stream_rng(seed, i)))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(SampleBatch {
        params: *params,
        seed,
        values,
    })
}

/// KS test of a batch against the distribution function `cdf = 1 − Q`.
pub fn ks_validate<F: Fn(f64) -> f64 + Sync>(batch: &SampleBatch, cdf: F, level: f64) -> Result<KsReport> {
    ks_test(&batch.values, cdf, level)
}

/// Reference used to validate a batch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValidationRoute {
    /// Jack series, available for integer `m`.
    ExactSeries,
    /// Direct quadrature of the two-eigenvalue density, available for `N = 2`.
    Quadrature,
    /// Two-sample test between the first and second halves of the batch.
    SplitHalf,
}

/// The most direct reference available for `params`.
pub fn best_route(params: &EnsembleParams) -> ValidationRoute {
    if params.jack_index().is_some() {
        ValidationRoute::ExactSeries
    } else if params.n_dim() == 2 {
        ValidationRoute::Quadrature
    } else {
        ValidationRoute::SplitHalf
    }
}

/// Validates `batch` against `route`. `None` picks [`best_route`].
pub fn validate_batch(
    batch: &SampleBatch,
    route: Option<ValidationRoute>,
    level: f64,
    acc: &SeriesAccuracy,
    quad_tol: f64,
) -> Result<(ValidationRoute, KsReport)> {
    let route = route.unwrap_or_else(|| best_route(&batch.params));
    let report = match route {
        ValidationRoute::ExactSeries => {
            let s = ExactSeries::new(&batch.params, acc)?;
            cdf_test(&batch.values, |x| s.q(x), level)?
        }
        ValidationRoute::Quadrature => cdf_test(&batch.values, |x| q_oracle_n2(&batch.params, x, quad_tol), level)?,
        ValidationRoute::SplitHalf => {
            if batch.values.len() < 2 {
                return Err(Error::EmptySample);
            }
            let (a, b) = batch.values.split_at(batch.values.len() / 2);
            ks_two_sample(a, b, level)?
        }
    };
    Ok((route, report))
}

/// KS test against `1 − Q`, surfacing the first evaluation error.
fn cdf_test<Q: Fn(f64) -> Result<f64> + Sync>(values: &[f64], q: Q, level: f64) -> Result<KsReport> {
    let failure = std::sync::Mutex::new(None);
    let report = ks_test(
        values,
        |x| match q(x) {
            Ok(v) => 1.0 - v,
            Err(e) => {
                failure.lock().unwrap().get_or_insert(e);
                f64::NAN
            }
        },
        level,
    )?;
    match failure.into_inner().unwrap() {
        Some(e) => Err(e),
        None => Ok(report),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DMatrix;

    fn params(beta: f64, n: usize, m: usize) -> EnsembleParams {
        EnsembleParams::new(beta, n, m).unwrap()
    }

    #[test]
    fn single_dimension_is_one() {
        let mut rng = stream_rng(3, 0);
        for _ in 0..10 {
            assert_eq!(sample_smallest(&params(0.5, 1, 4), &mut rng).unwrap(), 1.0);
        }
    }

    #[test]
    fn values_in_range() {
        for &(beta, n, m) in &[(0.3, 3, 3), (1.0, 5, 5), (4.0, 8, 20), (2.0, 2, 2)] {
            let p = params(beta, n, m);
            let b = run_batch(&p, 500, 11, 2).unwrap();
            assert!(b.values().iter().all(|&v| v > 0.0 && v <= 1.0 / n as f64), "{beta} {n} {m}");
        }
    }

    #[test]
    fn complex_square_mean() {
        let b = run_batch(&params(2.0, 2, 2), 100_000, 2024, 4).unwrap();
        let n = b.count() as f64;
        let mean = b.values().iter().sum::<f64>() / n;
        let var = b.values().iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
        assert!((mean - 0.125).abs() < 4.0 * (var / n).sqrt(), "{mean}");
    }

    #[test]
    fn dense_oracle_and_trace() {
        let p = params(2.0, 6, 9);
        for i in 0..100 {
            let mut rng = stream_rng(99, i);
            let b = sample_bidiagonal(&p, &mut rng).unwrap();
            let n = b.dim();
            let mut dense = DMatrix::<f64>::zeros(n, n);
            for k in 0..n {
                dense[(k, k)] = b.diag()[k];
                if k + 1 < n {
                    dense[(k + 1, k)] = b.sub()[k];
                }
            }
            let l = &dense * dense.transpose();
            let oracle = l.symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min);
            let ours = b.smallest_eigenvalue().unwrap();
            assert!((ours / oracle - 1.0).abs() < 1e-10, "draw {i}: {ours} vs {oracle}");
            let total: f64 = b.eigenvalues().unwrap().iter().sum();
            assert!((total / b.trace() - 1.0).abs() < 1e-12);
            assert!((l.trace() / b.trace() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn reproducible_across_workers() {
        let p = params(0.7, 3, 5);
        let a = run_batch(&p, 300, 5, 1).unwrap();
        let b = run_batch(&p, 300, 5, 8).unwrap();
        assert_eq!(a, b);
        let c = run_batch(&p, 300, 6, 1).unwrap();
        assert_ne!(a.values(), c.values());
        assert_eq!(run_batch(&p, 0, 5, 1).unwrap_err(), Error::EmptySample);
        assert!(run_batch(&p, 3, 5, 0).is_err());
    }

    #[test]
    fn file_round_trip_is_bit_exact() {
        let b = run_batch(&params(1.0, 4, 7), 200, 77, 2).unwrap();
        let mut buf = Vec::new();
        b.write_to(&mut buf).unwrap();
        let back = SampleBatch::read_from(buf.as_slice()).unwrap();
        assert_eq!(back, b);
        assert!(back.values().iter().zip(b.values()).all(|(x, y)| x.to_bits() == y.to_bits()));
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("{\"params\":{\"beta\":1.0,\"n_dim\":4,\"m_dim\":7},\"seed\":77,\"count\":200}"));
    }

    #[test]
    fn malformed_files() {
        assert!(SampleBatch::read_from("".as_bytes()).is_err());
        assert!(SampleBatch::read_from("not json\n".as_bytes()).is_err());
        let h = "{\"params\":{\"beta\":2.0,\"n_dim\":2,\"m_dim\":2},\"seed\":1,\"count\":2}\n";
        assert!(SampleBatch::read_from(format!("{h}0.1\n").as_bytes()).is_err());
        assert!(SampleBatch::read_from(format!("{h}0.1\nx\n").as_bytes()).is_err());
        assert!(SampleBatch::read_from(format!("{h}0.1\n0.2\n").as_bytes()).is_ok());
        let bad = "{\"params\":{\"beta\":2.0,\"n_dim\":3,\"m_dim\":2},\"seed\":1,\"count\":0}\n";
        assert!(SampleBatch::read_from(bad.as_bytes()).is_err());
    }

    #[test]
    fn ks_against_exact_and_shifted() {
        let p = params(2.0, 3, 3);
        let s = ExactSeries::new(&p, &SeriesAccuracy::default()).unwrap();
        let batch = run_batch(&p, 20_000, 1, 4).unwrap();
        let cdf = |x: f64| 1.0 - s.q(x).unwrap();
        let r = ks_validate(&batch, cdf, 0.01).unwrap();
        assert!(r.pass, "{r:?}");
        let shift = 0.2 / 3.0;
        let shifted = |x: f64| 1.0 - s.q((x - shift).max(0.0)).unwrap();
        assert!(!ks_validate(&batch, shifted, 0.01).unwrap().pass);
    }

    #[test]
    fn route_selection() {
        assert_eq!(best_route(&params(2.0, 3, 3)), ValidationRoute::ExactSeries);
        assert_eq!(best_route(&params(1.0, 2, 4)), ValidationRoute::Quadrature);
        assert_eq!(best_route(&params(0.7, 3, 5)), ValidationRoute::SplitHalf);
        let acc = SeriesAccuracy::default();
        let b = run_batch(&params(1.0, 2, 4), 2000, 3, 4).unwrap();
        let (route, r) = validate_batch(&b, None, 0.01, &acc, 1e-12).unwrap();
        assert_eq!(route, ValidationRoute::Quadrature);
        assert!(r.pass, "{r:?}");
        assert!(validate_batch(&b, Some(ValidationRoute::ExactSeries), 0.01, &acc, 1e-12).is_err());
        let (_, r) = validate_batch(&b, Some(ValidationRoute::SplitHalf), 0.01, &acc, 1e-12).unwrap();
        assert_eq!(r.n, 500.0);
    }
}
