//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Two polynomials from different rings were combined.
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),

    /// Exact division left a nonzero remainder.
    #[error("not divisible: exact division by {divisor} left remainder {remainder}")]
    NotDivisible { divisor: String, remainder: String },

    /// A degree-1 form was required.
    #[error("not a linear form: {0}")]
    NotLinear(String),

    /// A polynomial failed a homogeneity guard.
    #[error("not homogeneous of degree {expected}: term of degree {found} in {poly}")]
    NotHomogeneous {
        expected: u32,
        found: u32,
        poly: String,
    },

    /// Expression parsing failed.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A word contained a generator index outside the rank.
    #[error("invalid generator index {index} for rank {rank}")]
    BadGenerator { index: usize, rank: usize },

    /// A word was not reduced where a reduced word was required.
    #[error("word {word:?} is not reduced (length {len})")]
    NotReduced { word: Vec<u8>, len: usize },

    /// An enumeration or expansion exceeded its configured cap.
    #[error("cap exceeded: {what} needs {needed} but cap is {cap}")]
    CapExceeded {
        what: String,
        needed: u64,
        cap: u64,
    },

    /// A cache file existed but did not match the expected header.
    #[error("cache mismatch at {path}: {why}")]
    CacheMismatch { path: String, why: String },

    /// Input/output failure (cache files, config files).
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed JSON in a cache or config file.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    /// A verification step failed (the quantity checked is named).
    #[error("verification failed: {0}")]
    Verification(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
