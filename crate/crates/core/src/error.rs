use thiserror::Error;

/// Failure modes shared by every module of the crate.
///
/// The variants line up with the command-line exit codes: input errors map
/// to 2, genericity failures to 3 and resource guards to 4.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("genericity failure after {attempts} attempt(s): {reason}")]
    Genericity { attempts: usize, reason: String },
    #[error("resource guard: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;
