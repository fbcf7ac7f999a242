use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid arguments: {0}")]
    Validation(String),

    #[error("unsupported parameter combination: {0}")]
    Unsupported(String),

    #[error("malformed JSON: {0}")]
    MalformedJson(serde_json::Error),

    #[error("schema violation in {what}: {source}")]
    Schema { what: String, source: serde_json::Error },

    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error(transparent)]
    Core(#[from] chowkit::Error),
}

impl CliError {
    /// 3 for broken internal invariants, 2 for everything the caller can fix.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(chowkit::Error::Invariant(_)) => 3,
            _ => 2,
        }
    }
}
