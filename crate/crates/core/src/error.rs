use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("non-finite sample value at theta = {theta}")]
    Evaluation { theta: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("iteration did not converge: worst residual {residual}")]
    Convergence { residual: f64 },

    #[error("no sign change in bracket [{lo}, {hi}]")]
    Bracket { lo: f64, hi: f64 },

    #[error("argument on branch cut of singularity {k}")]
    BranchCut { k: usize },

    #[error("point outside region {region}: {why}")]
    Region { region: &'static str, why: String },

    #[error("series truncation exceeds tolerance; need J >= {required}")]
    Truncation { required: usize },

    #[error("precision failure at step {index}: computed |alpha| >= 1")]
    PrecisionFailure { index: usize },

    #[error("range error: {0}")]
    Range(String),

    #[error("zero on or too close to the search-box boundary")]
    BoundaryZero,

    #[error("level curve has a gap at phi = {phi}")]
    CurveGap { phi: f64 },

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("the function has no zero for this parameter")]
    NoZero,

    #[error("search failed: {0}")]
    Search(String),

    #[error("rational structure of the singular angles is not declared: {0}")]
    Specification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
