use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Smallest-eigenvalue statistics of the fixed-trace Laguerre β-ensemble.
#[derive(Debug, Parser)]
#[command(name = "lambdamin", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Survival function Q(x) from the Jack series
    ExactCdf,
    /// Density P(x) = −Q′(x) from the Jack series
    ExactPdf,
    /// Survival function Q(x) at β = 2 from the Laguerre determinant
    Beta2Cdf,
    /// Moments E[λ_min^p]
    Moments,
    /// Limiting survival function Q(y) at the hard edge
    LimitCdf,
    /// Limiting density P(y) at the hard edge
    LimitPdf,
    /// Draw a batch of trace-normalized smallest eigenvalues
    Sample,
    /// Draw (or load) a batch and run a Kolmogorov–Smirnov test
    Validate,
    /// Run the built-in invariant checks
    Selfcheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RouteArg {
    Exact,
    Quadrature,
    SplitHalf,
}

/// Inclusive grid `start:stop:points`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
}

impl Grid {
    pub fn new(start: f64, stop: f64, points: usize) -> anyhow::Result<Self> {
        if !(start.is_finite() && stop.is_finite() && start < stop) {
            bail!("grid needs finite start < stop, got {start}:{stop}");
        }
        if points < 2 {
            bail!("grid needs at least 2 points, got {points}");
        }
        Ok(Self { start, stop, points })
    }

    /// Evenly spaced points; the last one is exactly `stop`.
    pub fn values(&self) -> Vec<f64> {
        let step = (self.stop - self.start) / (self.points - 1) as f64;
        (0..self.points)
            .map(|i| if i + 1 == self.points { self.stop } else { self.start + step * i as f64 })
            .collect()
    }
}

impl FromStr for Grid {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, n] = parts[..] else {
            bail!("grid must look like start:stop:points, got {s:?}");
        };
        let start = a.trim().parse().with_context(|| format!("bad grid start {a:?}"))?;
        let stop = b.trim().parse().with_context(|| format!("bad grid stop {b:?}"))?;
        let points = n.trim().parse().with_context(|| format!("bad grid point count {n:?}"))?;
        Grid::new(start, stop, points)
    }
}

#[derive(Debug, Clone, clap::Args)]
pub struct Options {
    /// Dyson index β > 0
    #[arg(long, global = true)]
    pub beta: Option<f64>,

    /// Matrix dimension N
    #[arg(long = "N", global = true)]
    pub n_dim: Option<usize>,

    /// Second dimension M ≥ N
    #[arg(long = "M", global = true)]
    pub m_dim: Option<usize>,

    /// Jack index m of the limiting law
    #[arg(long = "m", global = true)]
    pub m: Option<usize>,

    /// Evaluation grid start:stop:points, endpoints included
    #[arg(long, global = true)]
    pub grid: Option<Grid>,

    /// Moment orders, comma separated
    #[arg(long = "p", global = true, value_delimiter = ',')]
    pub p: Vec<usize>,

    /// Number of Monte Carlo samples
    #[arg(long, global = true, default_value_t = 20_000)]
    pub samples: usize,

    /// Random seed
    #[arg(long, global = true, env = "LAMBDAMIN_SEED", default_value_t = 0)]
    pub seed: u64,

    /// Worker threads for sampling (defaults to all cores)
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Relative tail tolerance for series truncation
    #[arg(long, global = true, default_value_t = 1e-15)]
    pub tol: f64,

    /// Largest partition weight summed before giving up
    #[arg(long, global = true, default_value_t = 2000)]
    pub kmax: usize,

    /// Absolute tolerance of the N = 2 quadrature route
    #[arg(long = "quad-tol", global = true, default_value_t = 1e-12)]
    pub quad_tol: f64,

    /// Significance level of the KS test
    #[arg(long, global = true, default_value_t = 0.01)]
    pub level: f64,

    /// Validation reference (defaults to the most direct one available)
    #[arg(long, global = true, value_enum)]
    pub route: Option<RouteArg>,

    /// Sample file to validate instead of drawing a new batch
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    /// Also evaluate the closed-prefactor limiting-density formula
    #[arg(long, global = true)]
    pub diagnostics: bool,

    /// Output format (tables default to csv, reports to json)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Output file (standard output when absent)
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}
