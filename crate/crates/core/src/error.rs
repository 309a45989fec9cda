use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("eigenvalue index {index} out of range for explicit spectrum of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("divergent series: {0}")]
    DivergentSeries(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("simulation diverged (non-finite state) at step {step}")]
    Divergence { step: usize },

    #[error("series underflow: eps too small, needs eps * lambda_1 > {floor:e}")]
    EpsUnderflow { floor: f64 },

    #[error("spectral series tail diverges starting at mode {from_index}")]
    TailDivergence { from_index: usize },

    #[error("psi table does not cover s = {s}: table maximum is {max}")]
    PsiOutOfRange { s: f64, max: f64 },

    #[error(
        "combined support of {atoms} atoms exceeds the exact-solver budget of {budget}; \
         use the entropic solver"
    )]
    SupportBudget { atoms: usize, budget: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("requested path time {t} not present in the sample")]
    MissingPathTime { t: f64 },

    #[error("{0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
