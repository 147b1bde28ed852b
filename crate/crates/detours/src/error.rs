use std::io;

use detour_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum SearchError {
    #[error("line {line}: {source}")]
    Decode { line: usize, source: CoreError },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: malformed record: {source}")]
    Record {
        line: usize,
        source: serde_json::Error,
    },
    #[error("invalid filter: {0}")]
    Filter(String),
    #[error("labeled generation supports order <= {max}, got {n}; ingest an external graph6 catalog instead")]
    GeneratorCapacity { n: usize, max: usize },
    #[error("engines disagree on {graph6}: primary (L={primary_order}, f={primary_count}), alternate (L={alternate_order}, f={alternate_count})")]
    EngineMismatch {
        graph6: String,
        primary_order: usize,
        primary_count: u64,
        alternate_order: usize,
        alternate_count: u64,
    },
    #[error("witness {graph6} failed re-verification: {reason}")]
    WitnessRejected { graph6: String, reason: String },
    #[error("no graphs of order {n} with minimum degree {mode} {k} in the corpus")]
    EmptyDomain { k: usize, n: usize, mode: String },
    #[error("witness search needs an exact target f")]
    MissingTarget,
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

pub type Result<T, E = SearchError> = std::result::Result<T, E>;
