//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    /// Input outside an operation's domain (nonpositive coefficient where
    /// positivity is required, |q| >= 1, zero scaling constant, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A float-mode sign decision fell below `eps_sign`; the offending chain
    /// index is attached.
    #[error("indeterminate sign at chain index {index}")]
    Indeterminate { index: usize },

    /// An iterative refinement ran out of iterations; the last bracket is
    /// reported as `[lo, hi]` literals.
    #[error("convergence failure after {iters} iterations, last bracket [{lo}, {hi}]")]
    Convergence { iters: usize, lo: String, hi: String },

    /// The extremal step could not bracket its critical point.
    #[error("construction failure: {0}")]
    Construction(String),

    /// A residual check failed; higher working precision is advised.
    #[error("residual {residual} exceeds tolerance; increase precision bits")]
    Precision { residual: String },

    /// A general seed violates the rightmost-minimum assumption.
    #[error("invalid seed: {0}")]
    Seed(String),

    /// Root/critical-point enumeration could not be certified complete.
    #[error("incomplete enumeration: {0}")]
    IncompleteEnumeration(String),

    /// A spectrum continuation track was lost; the last good q is attached.
    #[error("extremum track lost (last good q = {last_q})")]
    Tracking { last_q: String },

    /// A bisection bracket did not straddle a sign change.
    #[error("bracket sign failure: {0}")]
    Bracket(String),

    /// The interval nest failed to contract.
    #[error("nest contraction failure: {0}")]
    Contract(String),

    /// -q is (numerically) a root of the current iterate or section.
    #[error("degenerate evaluation: {0}")]
    Degenerate(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
