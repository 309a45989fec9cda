//! Numerical laboratory for empirical measures of semilinear SPDEs in
//! spectral (eigen-truncated) coordinates.
//!
//! The process under study is
//!
//! ```text
//! dX_t = { grad V(X_t) - A X_t } dt + sqrt(2) dW_t
//! ```
//!
//! on a separable Hilbert space, where `A` is a positive self-adjoint
//! operator with discrete spectrum and `W` is cylindrical Brownian motion.
//! Everything here works on the `d`-mode eigen-truncation, with series
//! tails beyond the truncation bounded analytically.
//!
//! The crate provides:
//!
//! * [`spectrum`] — the eigenvalue model of `A` and every spectral series
//!   the convergence bounds consume (`h`, trace of `A^{-1}`, ...);
//! * [`potential`] — the nonlinearity `V` together with the constants the
//!   hypotheses need (one-sided bound, gradient growth, `gamma` majorant);
//! * [`gaussian`] — the reference Gaussian measure `mu_0 = N(0, A^{-1})`,
//!   the invariant measure `mu = Z_V^{-1} e^V mu_0`, small-ball tables and
//!   the Gaussian heat-kernel majorant;
//! * [`simulator`] — exact Ornstein-Uhlenbeck transitions (`V = 0`) and
//!   exponential-Euler stepping (`V != 0`);
//! * [`empirical`] — occupation measures `mu_t`, their semigroup-smoothed
//!   and time-discretized variants;
//! * [`transport`] — exact discrete Wasserstein distances (assignment /
//!   network simplex), debiased entropic estimation, and closed-form
//!   Gaussian oracles;
//! * [`rates`] — the analytic bound curves (`xi_t`, `eta_t`, covering
//!   lower bound) and log-log-log exponent fitting;
//! * [`experiment`] — Monte Carlo orchestration that lines simulated
//!   distance curves up against the analytic bounds.

pub mod empirical;
pub mod error;
pub mod experiment;
pub mod gaussian;
pub mod numeric;
pub mod potential;
pub mod rates;
pub mod simulator;
pub mod spectrum;
pub mod transport;

pub use error::{Error, Result};
pub use spectrum::{SeriesValue, SpectrumModel};
