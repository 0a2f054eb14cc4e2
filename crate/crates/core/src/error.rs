use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the formula it was passed to.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("configuration error: {0}")]
    Config(String),

    /// One of the logarithm factors of the closed-form structure function vanishes.
    #[error("singular point: |1 - q| = {modulus:e} for log factor {factor}")]
    Singular { factor: usize, modulus: f64 },

    /// Extrapolation residuals failed to shrink.
    #[error("extrapolation did not converge; residuals {residuals:?}")]
    Convergence { residuals: Vec<f64> },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
