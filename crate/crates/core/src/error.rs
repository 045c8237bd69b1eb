use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("state has zero norm")]
    ZeroState,

    #[error("squeezing diverges: y = {0} (need 0 <= y < 0.5)")]
    DivergentSqueezing(f64),

    #[error("conditioning outcome has negligible probability ({0:e})")]
    NegligibleBranch(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("Fisher information is not positive (F = {0})")]
    NoInformation(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("undefined slope: |sin(phi) <J_z>| = {0:e} (blind working point)")]
    UndefinedSlope(f64),

    #[error("no sign change of the gain between {lo} dB and {hi} dB")]
    NoCrossing { lo: f64, hi: f64 },

    #[error("config error in `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("table is empty")]
    EmptyTable,

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("serialization: {0}")]
    Serialization(String),
}

impl Error {
    pub(crate) fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config { field: field.into(), message: message.into() }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
