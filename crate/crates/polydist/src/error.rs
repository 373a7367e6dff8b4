//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A dense linear-algebra backend routine did not converge or rejected
    /// its input. Carries the routine name and backend detail.
    #[error("numerical failure in {routine}: {detail}")]
    Numerical { routine: &'static str, detail: String },

    /// Input contained NaN or infinite entries.
    #[error("non-finite entry in {0}")]
    NonFinite(&'static str),

    /// The pencil matrix B (or the leading coefficient behind it) is
    /// numerically singular; relative smallest singular value attached.
    #[error("matrix pencil coefficient B is numerically singular (sigma_min/sigma_max = {ratio:.3e})")]
    SingularPencil { ratio: f64 },

    /// Leading coefficient of a matrix polynomial fails the full-rank gate.
    #[error("leading coefficient is numerically rank deficient (sigma_min/sigma_max = {ratio:.3e})")]
    RankDeficientLeading { ratio: f64 },

    /// Divided-difference nodes repeat non-contiguously. Caller bug.
    #[error("equal divided-difference nodes must be contiguous")]
    NonContiguousNodes,

    /// Divided-difference nodes are closer than the confluence guard but not
    /// bitwise equal; the quotient is not trustworthy and the confluent
    /// branch does not apply.
    #[error("divided-difference nodes nearly coincide (gap {gap:.3e}) but are not equal")]
    NearConfluentNodes { gap: f64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed JSON ({context}): {detail}")]
    Json { context: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
