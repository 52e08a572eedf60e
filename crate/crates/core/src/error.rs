use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("Jack index m = (β/2)(M − N + 1 − 2/β) = {value} is not a nonnegative integer (β = {beta}, N = {n_dim}, M = {m_dim})")]
    NonIntegerJackIndex {
        beta: f64,
        n_dim: usize,
        m_dim: usize,
        value: f64,
    },

    #[error("series did not reach tolerance {tail_tol:e} within weight {k_max}")]
    Divergence { tail_tol: f64, k_max: usize },

    #[error("numerical inconsistency: {0}")]
    NumericalInconsistency(String),

    #[error("eigensolver failure: {0}")]
    EigensolverFailure(String),

    #[error("empty sample")]
    EmptySample,

    #[error("malformed sample file: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
