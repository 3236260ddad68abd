use crate::model::ValidationReport;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    Invalid(ValidationReport),
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error("complex exponent: discriminant D = {discriminant} < 0")]
    ComplexExponent { discriminant: f64 },
    #[error("complex hypergeometric shift: radicand = {radicand} < 0")]
    ComplexShift { radicand: f64 },
    #[error("no real energy: radicand = {radicand} < 0")]
    ComplexEnergy { radicand: f64 },
    #[error("hypergeometric parameter C = {c} is a non-positive integer")]
    BadC { c: f64 },
    #[error("deformed norm diverges: endpoint exponent {exponent} <= -1")]
    DivergentNorm { exponent: f64 },
    #[error("residual {residual:e} exceeds tolerance {tolerance:e} at this grid size")]
    GridTooCoarse { residual: f64, tolerance: f64 },
    #[error("grid point {index} lies outside the deformed ball (alpha r^2 = {alpha_r2})")]
    OutOfDomain { index: usize, alpha_r2: f64 },
    #[error("projector is not idempotent")]
    AlgebraInconsistent,
    #[error("eigenvalue iteration did not converge after {iterations} iterations")]
    NonConvergence { iterations: usize },
}

impl Error {
    /// True for the errors that mean "no real bound state exists here",
    /// as opposed to malformed input.
    pub fn is_no_real_spectrum(&self) -> bool {
        matches!(self, Error::ComplexEnergy { .. } | Error::ComplexExponent { .. } | Error::ComplexShift { .. })
    }
}
