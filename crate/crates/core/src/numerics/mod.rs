//! Shared numerical kernels.

mod bessel;
mod gamma;
mod quadrature;
mod rational;
mod sum;

pub use bessel::{bessel_i, BESSEL_ARG_MAX};
pub use quadrature::integrate_adaptive;
pub use gamma::{gamma_ratio_falling, ln_factorial, ln_gamma_ratio_falling, ln_rising, log_gamma};
pub use rational::{ln_abs_rational, rational_from_i64, Rational};
pub use sum::{CompensatedSum, SignedLog};
