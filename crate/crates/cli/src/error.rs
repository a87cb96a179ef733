use thiserror::Error;

/// Exit status for a query whose oracle comparison found a difference.
pub const EXIT_MISMATCH: u8 = 3;
/// Exit status when an identity or invariant check fails.
pub const EXIT_INVARIANT: u8 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at byte {position} ({token:?}): {message}")]
    Parse {
        token: String,
        position: usize,
        message: String,
    },

    #[error("{0}")]
    Usage(#[from] clap::Error),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("bound error: {0}")]
    Bound(String),

    #[error("internal error: {0}")]
    Invariant(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) | CliError::Validation(_) | CliError::Io { .. } => 1,
            CliError::Bound(_) => 2,
            CliError::Invariant(_) => EXIT_INVARIANT,
        }
    }
}

impl From<avoidgf::Error> for CliError {
    fn from(e: avoidgf::Error) -> Self {
        if e.is_bound() {
            CliError::Bound(e.to_string())
        } else if e.is_invariant() {
            CliError::Invariant(e.to_string())
        } else {
            CliError::Validation(e.to_string())
        }
    }
}
