//! Smallest-eigenvalue statistics of the fixed-trace Laguerre β-ensemble.
//!
//! The eigenvalues λ₁..λ_N of the ensemble have joint density proportional to
//! `δ(Σλ − 1) · Π λ_i^{βα/2} · Π_{i<j} |λ_i − λ_j|^β` with `α = M − N + 1 − 2/β`.
//! For β = 2 this is the Schmidt spectrum of a random bipartite pure state in
//! `C^N ⊗ C^M`.
//!
//! The crate computes the survival function `Q(x) = Prob[λ_min ≥ x]`, the
//! density `P = −Q'`, and the moments of `λ_min` by several independent routes:
//!
//! * [`exact`]: a finite sum over partitions weighted by Jack polynomial values,
//!   valid whenever `m = βα/2` is a nonnegative integer, plus a direct
//!   quadrature oracle at `N = 2`;
//! * [`beta2`]: a determinant of Laguerre polynomials in exact rationals (β = 2);
//! * [`limit`]: the hard-edge law after scaling `x = y / 4N³`;
//! * [`sampler`]: Monte Carlo sampling of the bidiagonal χ matrix model, with
//!   Kolmogorov–Smirnov validation.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod beta2;
pub mod error;
pub mod exact;
pub mod jack;
pub mod limit;
pub mod numerics;
pub mod par;
pub mod params;
pub mod sampler;
pub mod selfcheck;

pub use error::{Error, Result};
pub use params::{EnsembleParams, SeriesAccuracy};
