//! Physical parameters and quantum numbers shared by every other module.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::math::sqrt;

/// Inputs of the model in natural units.
///
/// `lambda0` and `lambda_r` are the strengths of the time and radial
/// components of the vector potential, `A_0 = λ₀ r/√(1-αr²)` and
/// `A_r = λ_r r/√(1-αr²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub m: f64,
    pub alpha: f64,
    pub lambda0: f64,
    pub lambda_r: f64,
}

/// One broken invariant of [`ModelParams`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Violation {
    NonFinite,
    MassNotPositive,
    AlphaNegative,
    Lambda0Negative,
    LambdaOrder,
    NegativeDiscriminant(f64),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonFinite => f.write_str("all parameters finite"),
            Violation::MassNotPositive => f.write_str("m > 0"),
            Violation::AlphaNegative => f.write_str("alpha ≥ 0"),
            Violation::Lambda0Negative => f.write_str("lambda0 ≥ 0"),
            Violation::LambdaOrder => f.write_str("lambdaR ≥ lambda0"),
            Violation::NegativeDiscriminant(d) => write!(f, "discriminant D ≥ 0 (D = {d})"),
        }
    }
}

/// Outcome of [`validate`]: empty means the parameters are acceptable.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_pass() {
            Ok(())
        } else {
            Err(Error::Invalid(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("pass");
        }
        f.write_str("fail(")?;
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "\"{v}\"")?;
        }
        f.write_str(")")
    }
}

impl ModelParams {
    /// Builds a parameter set, rejecting it if any invariant fails.
    pub fn new(m: f64, alpha: f64, lambda0: f64, lambda_r: f64) -> Result<Self> {
        let params = ModelParams { m, alpha, lambda0, lambda_r };
        validate(&params).into_result()?;
        Ok(params)
    }

    /// The reference set used throughout the test suite and the CLI defaults.
    pub const REFERENCE: ModelParams = ModelParams { m: 1.0, alpha: 0.1, lambda0: 0.5, lambda_r: 1.0 };

    pub fn with_alpha(self, alpha: f64) -> Self {
        ModelParams { alpha, ..self }
    }

    pub fn with_lambda0(self, lambda0: f64) -> Self {
        ModelParams { lambda0, ..self }
    }

    pub fn is_undeformed(&self) -> bool {
        self.alpha == 0.0
    }

    /// `D = 1 + 4[(λ_r/α)(λ_r/α + 1) − λ₀²/α²]`; `None` when `α = 0`.
    pub fn discriminant(&self) -> Option<f64> {
        if self.alpha == 0.0 {
            return None;
        }
        let x = self.lambda_r / self.alpha;
        let y = self.lambda0 / self.alpha;
        Some(1.0 + 4.0 * (x * (x + 1.0) - y * y))
    }

    /// Smallest attainable momentum uncertainty, `(ΔP)_min = √α / 2`.
    pub fn min_momentum_uncertainty(&self) -> f64 {
        sqrt(self.alpha) / 2.0
    }
}

/// Checks every invariant of `params` and reports all violations at once.
pub fn validate(params: &ModelParams) -> ValidationReport {
    let mut violations = Vec::new();
    let ModelParams { m, alpha, lambda0, lambda_r } = *params;
    if ![m, alpha, lambda0, lambda_r].iter().all(|v| v.is_finite()) {
        violations.push(Violation::NonFinite);
        return ValidationReport { violations };
    }
    if m <= 0.0 {
        violations.push(Violation::MassNotPositive);
    }
    if alpha < 0.0 {
        violations.push(Violation::AlphaNegative);
    }
    if lambda0 < 0.0 {
        violations.push(Violation::Lambda0Negative);
    }
    if lambda_r < lambda0 {
        violations.push(Violation::LambdaOrder);
    }
    if alpha > 0.0 {
        if let Some(d) = params.discriminant() {
            if d < 0.0 {
                violations.push(Violation::NegativeDiscriminant(d));
            }
        }
    }
    ValidationReport { violations }
}

/// Coupling coefficients of the vector spherical harmonics,
/// `ξ_J = √((J+1)/(2J+1))` and `ζ_J = √(J/(2J+1))`.
pub fn xi_zeta(j: u32) -> (f64, f64) {
    let j = f64::from(j);
    let denom = 2.0 * j + 1.0;
    (sqrt((j + 1.0) / denom), sqrt(j / denom))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    /// `(−1)^J` states.
    Natural,
    /// `(−1)^{J+1}` states; only `J = 0` is solvable in closed form.
    Unnatural,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Branch {
    #[default]
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    pub n: u32,
    pub j: u32,
    pub parity: Parity,
    pub branch: Branch,
}

impl QuantumNumbers {
    pub fn new(n: u32, j: u32, parity: Parity, branch: Branch) -> Result<Self> {
        if parity == Parity::Unnatural && j != 0 {
            return Err(Error::UnsupportedRegime("unnatural parity is solved only for J = 0"));
        }
        Ok(QuantumNumbers { n, j, parity, branch })
    }
}

/// Which decoupled radial equation is being solved.
///
/// Natural parity carries its `J`; the two unnatural sectors exist only at
/// `J = 0` with `λ₀ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sector {
    /// `F₀` with `H₊₁`, `H₋₁`, `G₀` slaved to it.
    Natural(u32),
    /// The scalar component `φ` with `F₊₁`, `G₊₁`.
    UnnaturalPhi,
    /// `H₀` with `F₋₁`, `G₋₁`.
    UnnaturalH0,
}

impl Sector {
    pub fn j(self) -> u32 {
        match self {
            Sector::Natural(j) => j,
            Sector::UnnaturalPhi | Sector::UnnaturalH0 => 0,
        }
    }

    pub fn parity(self) -> Parity {
        match self {
            Sector::Natural(_) => Parity::Natural,
            Sector::UnnaturalPhi | Sector::UnnaturalH0 => Parity::Unnatural,
        }
    }

    /// Short label used in reports and CSV output.
    pub fn label(self) -> &'static str {
        match self {
            Sector::Natural(_) => "natural",
            Sector::UnnaturalPhi => "unnatural-phi",
            Sector::UnnaturalH0 => "unnatural-h0",
        }
    }

    /// Rejects parameter sets for which the sector has no closed-form
    /// treatment: the unnatural equations decouple only for `λ₀ = 0`.
    pub fn check_regime(self, params: &ModelParams) -> Result<()> {
        match self {
            Sector::Natural(_) => Ok(()),
            Sector::UnnaturalPhi | Sector::UnnaturalH0 => {
                if params.lambda0 != 0.0 {
                    Err(Error::UnsupportedRegime("unnatural parity requires lambda0 = 0"))
                } else {
                    Ok(())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_set_passes_with_expected_discriminant() {
        let p = ModelParams::REFERENCE;
        assert!(validate(&p).is_pass());
        let d = p.discriminant().unwrap();
        assert!((d - 341.0).abs() < 1e-9, "D = {d}");
    }

    #[test]
    fn undeformed_boundary_with_equal_couplings_passes() {
        let p = ModelParams { m: 1.0, alpha: 0.0, lambda0: 1.0, lambda_r: 1.0 };
        assert!(validate(&p).is_pass());
        assert_eq!(p.discriminant(), None);
    }

    #[test]
    fn coupling_order_violation_is_reported() {
        let p = ModelParams { m: 1.0, alpha: 0.1, lambda0: 2.0, lambda_r: 1.0 };
        let report = validate(&p);
        assert!(report.violations.contains(&Violation::LambdaOrder));
        assert!(alloc::format!("{report}").contains("lambdaR ≥ lambda0"));
        assert!(matches!(ModelParams::new(1.0, 0.1, 2.0, 1.0), Err(Error::Invalid(_))));
    }

    #[test]
    fn multiple_violations_collected() {
        let p = ModelParams { m: -1.0, alpha: -0.1, lambda0: -0.5, lambda_r: 1.0 };
        let v = validate(&p).violations;
        assert!(v.contains(&Violation::MassNotPositive));
        assert!(v.contains(&Violation::AlphaNegative));
        assert!(v.contains(&Violation::Lambda0Negative));
        let nan = ModelParams { m: f64::NAN, ..ModelParams::REFERENCE };
        assert_eq!(validate(&nan).violations, alloc::vec![Violation::NonFinite]);
    }

    #[test]
    fn xi_zeta_values() {
        assert_eq!(xi_zeta(0), (1.0, 0.0));
        let (xi, zeta) = xi_zeta(1);
        assert!((xi - sqrt(2.0 / 3.0)).abs() < 1e-15);
        assert!((zeta - sqrt(1.0 / 3.0)).abs() < 1e-15);
        for j in 0..200 {
            let (xi, zeta) = xi_zeta(j);
            assert!((xi * xi + zeta * zeta - 1.0).abs() <= 1e-15);
        }
    }

    #[test]
    fn unnatural_parity_only_at_j_zero() {
        assert!(QuantumNumbers::new(3, 0, Parity::Unnatural, Branch::Plus).is_ok());
        assert!(matches!(QuantumNumbers::new(0, 1, Parity::Unnatural, Branch::Plus), Err(Error::UnsupportedRegime(_))));
    }

    #[test]
    fn min_momentum_uncertainty() {
        let p = ModelParams::REFERENCE.with_alpha(0.04);
        assert!((p.min_momentum_uncertainty() - 0.1).abs() < 1e-15);
    }
}
