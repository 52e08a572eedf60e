//! Ensemble parameters and series truncation controls.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance used to decide whether `(β/2)·α` is an integer.
pub const JACK_INDEX_TOL: f64 = 1e-12;

/// Validated `(β, N, M)` with the derived exponent `α` and Jack index `m`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnsembleParams {
    beta: f64,
    n_dim: usize,
    m_dim: usize,
    alpha: f64,
    jack_index: Option<usize>,
}

impl EnsembleParams {
    pub fn new(beta: f64, n_dim: usize, m_dim: usize) -> Result<Self> {
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::domain(format!("β must be a positive real, got {beta}")));
        }
        if n_dim < 1 {
            return Err(Error::domain("N must be at least 1"));
        }
        if m_dim < n_dim {
            return Err(Error::domain(format!("M = {m_dim} must be at least N = {n_dim}")));
        }
        let alpha = (m_dim - n_dim) as f64 + 1.0 - 2.0 / beta;
        Ok(Self {
            beta,
            n_dim,
            m_dim,
            alpha,
            jack_index: detect_integer(0.5 * beta * alpha),
        })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn n_dim(&self) -> usize {
        self.n_dim
    }

    pub fn m_dim(&self) -> usize {
        self.m_dim
    }

    /// `α = M − N + 1 − 2/β`, always `> −2/β`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `m = (β/2)·α` when it is a nonnegative integer.
    pub fn jack_index(&self) -> Option<usize> {
        self.jack_index
    }

    /// The exponent `βα/2` of each eigenvalue in the weight, integer or not.
    pub fn weight_exponent(&self) -> f64 {
        0.5 * self.beta * self.alpha
    }

    /// `βMN/2`, the total homogeneity degree of the unconstrained density.
    pub fn trace_exponent(&self) -> f64 {
        0.5 * self.beta * (self.m_dim * self.n_dim) as f64
    }

    /// Jack parameter `ν = β/2` of the partition series.
    pub fn nu(&self) -> f64 {
        0.5 * self.beta
    }

    pub fn require_jack_index(&self) -> Result<usize> {
        self.jack_index.ok_or(Error::NonIntegerJackIndex {
            beta: self.beta,
            n_dim: self.n_dim,
            m_dim: self.m_dim,
            value: self.weight_exponent(),
        })
    }
}

fn detect_integer(value: f64) -> Option<usize> {
    let rounded = value.round();
    if rounded >= 0.0 && (value - rounded).abs() <= JACK_INDEX_TOL {
        Some(rounded as usize)
    } else {
        None
    }
}

/// Truncation controls for every infinite series in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesAccuracy {
    /// Relative size of the last retained level below which a series stops.
    pub tail_tol: f64,
    /// Hard cap on the partition weight `k`.
    pub k_max: usize,
}

impl SeriesAccuracy {
    pub fn new(tail_tol: f64, k_max: usize) -> Result<Self> {
        if !(tail_tol.is_finite() && tail_tol > 0.0) {
            return Err(Error::domain(format!("tail_tol must be positive, got {tail_tol}")));
        }
        if k_max < 1 {
            return Err(Error::domain("k_max must be at least 1"));
        }
        Ok(Self { tail_tol, k_max })
    }
}

impl Default for SeriesAccuracy {
    fn default() -> Self {
        Self {
            tail_tol: 1e-15,
            k_max: 2000,
        }
    }
}
