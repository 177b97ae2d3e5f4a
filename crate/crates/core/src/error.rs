use thiserror::Error;

/// Errors raised by the simulator, the analytic models and the throughput integrals.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid system configuration: {0}")]
    InvalidConfig(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("argument outside the domain of {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    #[error("{op}: density underflows at x = {x} (tail too deep)")]
    TailTooDeep { op: &'static str, x: f64 },

    #[error("{op}: singular interference-plus-noise matrix (determinant {det:e})")]
    Singular { op: &'static str, det: f64 },

    #[error("{op}: root bracket could not be established: {detail}")]
    Bracket { op: &'static str, detail: String },

    #[error("quadrature did not converge: achieved {achieved:e}, requested {requested:e} after {intervals} subintervals")]
    Quadrature {
        achieved: f64,
        requested: f64,
        intervals: usize,
    },

    #[error("scaling ratio undefined for pre-asymptotic K = {k}: b_K = {b_k} <= 1")]
    PreAsymptotic { k: u64, b_k: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
