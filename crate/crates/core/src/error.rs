use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// `position` is 1-based.
    #[error("invalid character {found:?} at position {position}: expected one of a, b, A, B")]
    Parse { position: usize, found: char },

    #[error("word is not cyclically reduced: {0}")]
    NotCyclicallyReduced(String),

    #[error("the empty word has no primitivity or self-intersection")]
    EmptyWord,

    #[error("combinatorial length must be at least 1")]
    ZeroLength,

    #[error("invalid shard prefix {prefix:?}: {reason}")]
    InvalidPrefix { prefix: String, reason: &'static str },

    #[error("Christoffel slope {p}/{q} is not in lowest terms")]
    NotCoprime { p: u64, q: u64 },

    #[error("{0} is a proper power; only non-power classes are supported")]
    NotPrimitive(String),

    #[error("rays {0} and {1} have the same endpoint")]
    EqualRays(String, String),

    #[error("strands must be distinct positions of one word")]
    SameStrand,

    #[error("invalid surface order: {0}")]
    InvalidOrder(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("histogram lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("histogram is empty")]
    EmptyHistogram,

    #[error("checkpoint does not match this run: {0}")]
    CheckpointMismatch(String),

    #[error("checkpoint written by engine {found}, this is {expected}")]
    EngineVersion { expected: String, found: String },

    #[error("census mass check failed at length {length}: expected {expected} classes, histogram holds {found}")]
    MassCheck { length: usize, expected: u128, found: u128 },

    #[error("malformed histogram input: {0}")]
    Format(String),

    #[error("run interrupted; checkpoints are up to date")]
    Interrupted,

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Error {
        Error::Io { path: path.into(), source }
    }
}
