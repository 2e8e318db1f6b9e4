use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] ekrcx::Error),
    #[error("usage: {0}")]
    Usage(String),
    #[error("resource guard: {0}")]
    Resource(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("bad report line {line}: {source}")]
    Json {
        line: usize,
        #[source]
        source: serde_json::Error,
    },
}

impl CliError {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit status: 2 for bad input or usage, 3 for genericity
    /// failures, 4 for resource guards.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(ekrcx::Error::Genericity { .. }) => 3,
            CliError::Core(ekrcx::Error::Resource(_)) | CliError::Resource(_) => 4,
            _ => 2,
        }
    }
}
