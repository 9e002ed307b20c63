use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A text input (corpus, embeddings, dictionary, pattern or config file)
    /// could not be parsed. Lines are 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A precondition on a specific sentence failed. Indices are 0-based.
    #[error("sentence {index}: {msg}")]
    Sentence { index: usize, msg: String },

    /// Tensor or sequence dimensions do not line up.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A dataset that must contain at least one sentence is empty.
    #[error("dataset is empty{}", if .0.is_empty() { String::new() } else { format!(": {}", .0) })]
    EmptyDataset(String),

    /// Invalid run configuration (bad flag value, unknown key, missing path).
    #[error("config error: {0}")]
    Config(String),

    /// A checkpoint stream is malformed, truncated or of the wrong version.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    /// A numerical verification (gradient check) exceeded its tolerance.
    #[error("numerical check failed: {0}")]
    CheckFailed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 config, 3 data, 4 numerical check.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::CheckFailed(_) => 4,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
