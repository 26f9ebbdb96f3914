use thiserror::Error;

/// Errors produced by model construction, evaluation, and the tooling
/// around it.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Evaluating the power-law model at N=1 is only defined when the
    /// reduction function satisfies h(1) = c_h = 1.
    #[error("evaluation at N=1 requires c_h = 1 (got c_h = {c_h})")]
    EvalAtOne { c_h: f64 },

    #[error("non-positive parallel time at N={n} ({value}); the supplied workload/overhead functions are invalid there")]
    NonPositiveDenominator { n: u64, value: f64 },

    /// Classification limit formulas divide by s·c_f (and by p·c_g), so the
    /// typology is only defined for s strictly inside (0, 1).
    #[error("degenerate split s={s}: asymptotic classification is not defined")]
    DegenerateSplit { s: f64 },

    #[error("matrix size z={z} exceeds the exact-arithmetic bound {max}")]
    WorkloadOverflow { z: u64, max: u64 },

    #[error("estimation: {0}")]
    Estimation(String),

    #[error("benchmark config: {0}")]
    BenchConfig(String),

    #[error("report: {0}")]
    Report(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
