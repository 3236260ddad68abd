use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Model(#[from] dkp_core::Error),
    #[error("{source} (m={}, alpha={}, lambda0={}, lambdaR={})", params.m, params.alpha, params.lambda0, params.lambda_r)]
    AtParams { source: dkp_core::Error, params: dkp_core::ModelParams },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0} check(s)")]
    Verification(usize),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    /// Attaches the parameter set to a model error so it is echoed.
    pub fn at(self, params: &dkp_core::ModelParams) -> Self {
        match self {
            CliError::Model(source) => CliError::AtParams { source, params: *params },
            other => other,
        }
    }

    /// 1 for failed verification, 3 when no real spectrum exists, 2 for
    /// every other kind of bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Model(e) | CliError::AtParams { source: e, .. } if e.is_no_real_spectrum() => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
