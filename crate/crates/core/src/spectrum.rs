//! Closed-form energy levels.
//!
//! Natural parity reduces to a hypergeometric equation in `ρ = αr²` whose
//! series terminates when `B = −n`; unnatural parity is solvable only for
//! `J = 0`, `λ₀ = 0`, where `φ` and `H₀` decouple.

use crate::error::{Error, Result};
use crate::math::sqrt;
use crate::model::{validate, Branch, ModelParams, Parity, QuantumNumbers, Sector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formula {
    NaturalDeformed,
    NaturalLimit,
    UnnaturalPhi,
    UnnaturalH0,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    pub qn: QuantumNumbers,
    pub value: f64,
    pub formula: Formula,
}

/// Exponents and parameters of the reduced hypergeometric problem
/// `F₀ = ρ^a (1−ρ)^b ₂F₁(A, B; C; ρ)`.
///
/// `u`, `v1`, `v2` are the coefficients of the intermediate equation; `v1`
/// and `v2` vanish at the selected roots and `u = AB`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeomData {
    pub a: f64,
    pub b: f64,
    pub big_a: f64,
    pub big_b: f64,
    pub big_c: f64,
    /// `S = √ε`, half the gap between `A` and `B`.
    pub shift: f64,
    pub u: f64,
    pub v1: f64,
    pub v2: f64,
}

fn require_deformed(params: &ModelParams) -> Result<()> {
    if params.alpha > 0.0 {
        Ok(())
    } else {
        Err(Error::UnsupportedRegime("closed-form deformed spectrum requires alpha > 0"))
    }
}

fn jj(j: u32) -> f64 {
    let j = f64::from(j);
    j * (j + 1.0)
}

/// Roots `a = (J+1)/2` and `b = 1/4 + √D/4` at which the `1/ρ` and
/// `1/(1−ρ)` terms of the natural-parity equation vanish.
pub fn exponents(params: &ModelParams, j: u32) -> Result<(f64, f64)> {
    require_deformed(params)?;
    let d = params.discriminant().expect("alpha > 0");
    if d < 0.0 {
        return Err(Error::ComplexExponent { discriminant: d });
    }
    validate(params).into_result()?;
    let a = (f64::from(j) + 1.0) / 2.0;
    let b = 0.25 + 0.25 * sqrt(d);
    Ok((a, b))
}

/// Hypergeometric data of the natural-parity equation at energy `energy`.
pub fn abc(params: &ModelParams, j: u32, energy: f64) -> Result<HypergeomData> {
    let (a, b) = exponents(params, j)?;
    let ModelParams { m, alpha, lambda0, lambda_r } = *params;
    let delta = lambda_r * lambda_r - lambda0 * lambda0;
    let radicand = (energy * energy - m * m) / (4.0 * alpha) + jj(j) / 4.0 + delta / (4.0 * alpha * alpha);
    if radicand < 0.0 {
        return Err(Error::ComplexShift { radicand });
    }
    let shift = sqrt(radicand);
    let x = lambda_r / alpha;
    let y = lambda0 / alpha;
    let coupling = x * x + x - y * y;
    Ok(HypergeomData {
        a,
        b,
        big_a: a + b + shift,
        big_b: a + b - shift,
        big_c: 0.5 + 2.0 * a,
        shift,
        u: (a + b) * (a + b) - radicand,
        v1: a * (a - 0.5) - jj(j) / 4.0,
        v2: b * (b - 0.5) - coupling / 4.0,
    })
}

/// `E²` for natural parity, rearranged so the `(λ_r² − λ₀²)/α` pieces cancel
/// analytically:
///
/// `E² = m² + λ_r + 2c √(α² + 4αλ_r + 4(λ_r² − λ₀²)) + α(4c² + 1/4 − J(J+1))`
/// with `c = n + (2J+3)/4`.
pub fn natural_energy_squared(params: &ModelParams, n: u32, j: u32) -> f64 {
    let ModelParams { m, alpha, lambda0, lambda_r } = *params;
    let c = f64::from(n) + (2.0 * f64::from(j) + 3.0) / 4.0;
    let delta = lambda_r * lambda_r - lambda0 * lambda0;
    let root = sqrt(alpha * alpha + 4.0 * alpha * lambda_r + 4.0 * delta);
    m * m + lambda_r + 2.0 * c * root + alpha * (4.0 * c * c + 0.25 - jj(j))
}

fn level(qn: QuantumNumbers, e2: f64, formula: Formula) -> Result<EnergyLevel> {
    if !(e2 >= 0.0) {
        return Err(Error::ComplexEnergy { radicand: e2 });
    }
    Ok(EnergyLevel { qn, value: qn.branch.sign() * sqrt(e2), formula })
}

/// Natural-parity level from the quantization condition `B = −n`.
pub fn energy_natural(params: &ModelParams, n: u32, j: u32, branch: Branch) -> Result<EnergyLevel> {
    exponents(params, j)?;
    let qn = QuantumNumbers::new(n, j, Parity::Natural, branch)?;
    level(qn, natural_energy_squared(params, n, j), Formula::NaturalDeformed)
}

/// Undeformed limit `E = ±√(m² + λ_r + (4n + 2J + 3)√(λ_r² − λ₀²))`.
///
/// `α` is ignored. The harmonic-oscillator degeneracy count is `2J`, which
/// is what the `α → 0` limit of the deformed formula produces.
pub fn energy_natural_limit(params: &ModelParams, n: u32, j: u32, branch: Branch) -> Result<EnergyLevel> {
    let ModelParams { m, lambda0, lambda_r, .. } = *params;
    let delta = lambda_r * lambda_r - lambda0 * lambda0;
    if delta < 0.0 {
        return Err(Error::ComplexEnergy { radicand: delta });
    }
    validate(&params.with_alpha(0.0)).into_result()?;
    let qn = QuantumNumbers::new(n, j, Parity::Natural, branch)?;
    let k = 4.0 * f64::from(n) + 2.0 * f64::from(j) + 3.0;
    level(qn, m * m + lambda_r + k * sqrt(delta), Formula::NaturalLimit)
}

/// Natural-parity level, routing `α = 0` to the limit formula.
pub fn energy_natural_any(params: &ModelParams, n: u32, j: u32, branch: Branch) -> Result<EnergyLevel> {
    if params.is_undeformed() {
        energy_natural_limit(params, n, j, branch)
    } else {
        energy_natural(params, n, j, branch)
    }
}

/// `ΔE_n = E_{n+1} − E_n` on the positive branch, evaluated as
/// `(E²_{n+1} − E²_n) / (E_{n+1} + E_n)` with the numerator in closed form.
pub fn level_spacing(params: &ModelParams, n: u32, j: u32) -> Result<f64> {
    let lower = energy_natural_any(params, n, j, Branch::Plus)?.value;
    let upper = energy_natural_any(params, n + 1, j, Branch::Plus)?.value;
    let ModelParams { alpha, lambda0, lambda_r, .. } = *params;
    let delta = lambda_r * lambda_r - lambda0 * lambda0;
    let gap_sq = if params.is_undeformed() {
        4.0 * sqrt(delta)
    } else {
        let c = f64::from(n) + (2.0 * f64::from(j) + 3.0) / 4.0;
        2.0 * sqrt(alpha * alpha + 4.0 * alpha * lambda_r + 4.0 * delta) + 4.0 * alpha * (2.0 * c + 1.0)
    };
    Ok(gap_sq / (upper + lower))
}

fn check_unnatural(params: &ModelParams) -> Result<()> {
    require_deformed(params)?;
    validate(params).into_result()?;
    Sector::UnnaturalPhi.check_regime(params)
}

/// `E_φ² = m² + 4λ_r + 4α(n + 1/2)(n + 3/2 + λ_r/α)`, expanded so that no
/// `1/α` appears.
pub fn phi_energy_squared(m: f64, alpha: f64, lambda_r: f64, n: u32) -> f64 {
    let n = f64::from(n);
    m * m + 4.0 * lambda_r + 4.0 * alpha * (n + 0.5) * (n + 1.5) + 4.0 * lambda_r * (n + 0.5)
}

/// `E_H0² = m² + 4α(n + 1/2)(n + 1/2 + λ_r/α)`.
pub fn h0_energy_squared(m: f64, alpha: f64, lambda_r: f64, n: u32) -> f64 {
    let n = f64::from(n);
    m * m + 4.0 * alpha * (n + 0.5) * (n + 0.5) + 4.0 * lambda_r * (n + 0.5)
}

/// Unnatural parity, scalar component `φ` (`J = 0`, `λ₀ = 0`).
pub fn energy_unnatural_phi(params: &ModelParams, n: u32, branch: Branch) -> Result<EnergyLevel> {
    check_unnatural(params)?;
    let qn = QuantumNumbers::new(n, 0, Parity::Unnatural, branch)?;
    let e2 = phi_energy_squared(params.m, params.alpha, params.lambda_r, n);
    level(qn, e2, Formula::UnnaturalPhi)
}

/// Unnatural parity, component `H₀` (`J = 0`, `λ₀ = 0`).
///
/// The closed form picks the exponent `b = λ_r/(2α)`, which is the regular
/// root only when `λ_r ≥ α/2`.
pub fn energy_unnatural_h0(params: &ModelParams, n: u32, branch: Branch) -> Result<EnergyLevel> {
    check_unnatural(params)?;
    if params.lambda_r < params.alpha / 2.0 {
        return Err(Error::UnsupportedRegime("H0 closed form requires lambdaR >= alpha/2"));
    }
    let qn = QuantumNumbers::new(n, 0, Parity::Unnatural, branch)?;
    let e2 = h0_energy_squared(params.m, params.alpha, params.lambda_r, n);
    level(qn, e2, Formula::UnnaturalH0)
}

/// Exponents `(a, b)` of the unnatural `J = 0` equations: `a = 1/2` and `b`
/// the larger root of `b(b − 1/2) = K/4`, with `K = x(x+1)` for `φ` and
/// `K = x(x−1)` for `H₀`, `x = λ_r/α`.
pub fn unnatural_exponents(params: &ModelParams, sector: Sector) -> Result<(f64, f64)> {
    check_unnatural(params)?;
    let x = params.lambda_r / params.alpha;
    let k = match sector {
        Sector::UnnaturalPhi => x * (x + 1.0),
        Sector::UnnaturalH0 => x * (x - 1.0),
        Sector::Natural(_) => return Err(Error::InvalidArgument("natural sector has its own exponents")),
    };
    Ok((0.5, 0.25 + 0.25 * sqrt(1.0 + 4.0 * k)))
}

/// Hypergeometric data of the unnatural `φ` or `H₀` equation at `energy`.
pub fn unnatural_abc(params: &ModelParams, sector: Sector, energy: f64) -> Result<HypergeomData> {
    let (a, b) = unnatural_exponents(params, sector)?;
    let ModelParams { m, alpha, lambda_r, .. } = *params;
    let x = lambda_r / alpha;
    let (k, offset) = match sector {
        Sector::UnnaturalPhi => (x * (x + 1.0), 0.25 + x * (x - 2.0) / 4.0),
        _ => (x * (x - 1.0), x * x / 4.0),
    };
    let radicand = (energy * energy - m * m) / (4.0 * alpha) + offset;
    if radicand < 0.0 {
        return Err(Error::ComplexShift { radicand });
    }
    let shift = sqrt(radicand);
    Ok(HypergeomData {
        a,
        b,
        big_a: a + b + shift,
        big_b: a + b - shift,
        big_c: 0.5 + 2.0 * a,
        shift,
        u: (a + b) * (a + b) - radicand,
        v1: a * (a - 0.5),
        v2: b * (b - 0.5) - k / 4.0,
    })
}

/// Hypergeometric data for any sector.
pub fn sector_abc(params: &ModelParams, sector: Sector, energy: f64) -> Result<HypergeomData> {
    match sector {
        Sector::Natural(j) => abc(params, j, energy),
        _ => unnatural_abc(params, sector, energy),
    }
}

/// Dispatches to the formula belonging to `sector`.
pub fn energy(params: &ModelParams, sector: Sector, n: u32, branch: Branch) -> Result<EnergyLevel> {
    match sector {
        Sector::Natural(j) => energy_natural_any(params, n, j, branch),
        Sector::UnnaturalPhi => energy_unnatural_phi(params, n, branch),
        Sector::UnnaturalH0 => energy_unnatural_h0(params, n, branch),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const REF: ModelParams = ModelParams::REFERENCE;

    #[test]
    fn exponent_values() {
        let (a, b) = exponents(&REF, 0).unwrap();
        assert_eq!(a, 0.5);
        // b = 1/4 + √341/4
        assert!((b - 4.866_546_3).abs() < 1e-6, "b = {b}");
        let unit = ModelParams { m: 1.0, alpha: 0.3, lambda0: 0.3, lambda_r: 0.3 };
        let (_, b) = exponents(&unit, 2).unwrap();
        assert!((b - (1.0 + sqrt(5.0)) / 4.0).abs() < 1e-15);
        assert!(matches!(exponents(&REF.with_alpha(0.0), 0), Err(Error::UnsupportedRegime(_))));
    }

    #[test]
    fn complex_exponent_reported_before_order_violation() {
        let p = ModelParams { m: 1.0, alpha: 0.1, lambda0: 2.0, lambda_r: 1.0 };
        assert!(matches!(exponents(&p, 0), Err(Error::ComplexExponent { .. })));
    }

    #[test]
    fn reference_energy() {
        let e = energy_natural(&REF, 0, 0, Branch::Plus).unwrap();
        assert!((e.value - 2.2405).abs() < 5e-5, "E = {}", e.value);
        assert_eq!(e.formula, Formula::NaturalDeformed);
        let minus = energy_natural(&REF, 0, 0, Branch::Minus).unwrap();
        assert_eq!(minus.value, -e.value);
    }

    #[test]
    fn stable_form_matches_printed_form() {
        // Printed form: m² + 4α(n + (2J+3)/4 + √D/4)² − αJ(J+1) − (λ_r² − λ₀²)/α
        for &(alpha, l0) in &[(0.05, 0.0), (0.1, 0.5), (0.2, 0.9), (1.0, 0.3)] {
            let p = REF.with_alpha(alpha).with_lambda0(l0);
            let d = p.discriminant().unwrap();
            for j in 0..4 {
                for n in 0..6 {
                    let c = f64::from(n) + (2.0 * f64::from(j) + 3.0) / 4.0 + sqrt(d) / 4.0;
                    let printed = 1.0 + 4.0 * alpha * c * c - alpha * jj(j) - (1.0 - l0 * l0) / alpha;
                    let stable = natural_energy_squared(&p, n, j);
                    assert!(((printed - stable) / stable).abs() < 1e-12, "{alpha} {l0} {j} {n}");
                }
            }
        }
    }

    #[test]
    fn abc_closes_quantization() {
        let e = energy_natural(&REF, 0, 0, Branch::Plus).unwrap().value;
        let h = abc(&REF, 0, e).unwrap();
        assert!(h.big_b.abs() < 1e-12);
        assert!((h.big_a + h.big_b - 2.0 * (h.a + h.b)).abs() < 1e-12);
        assert!((h.big_a * h.big_b - h.u).abs() < 1e-9);
        assert!(h.v1.abs() < 1e-12 && h.v2.abs() < 1e-9);
        assert_eq!(h.big_c, 1.5);
    }

    #[test]
    fn abc_rejects_energies_below_threshold() {
        // λ₀ = λ_r removes the 1/α² lift, so E = 0 sits below threshold.
        let p = REF.with_lambda0(1.0);
        assert!(matches!(abc(&p, 0, 0.0), Err(Error::ComplexShift { .. })));
    }

    #[test]
    fn limit_values() {
        let eq = ModelParams { m: 1.0, alpha: 0.0, lambda0: 1.0, lambda_r: 1.0 };
        for n in 0..20 {
            let e = energy_natural_limit(&eq, n, 0, Branch::Plus).unwrap().value;
            assert!((e - sqrt(2.0)).abs() < 1e-15);
        }
        let p = REF.with_alpha(0.0);
        let e0 = energy_natural_limit(&p, 0, 0, Branch::Plus).unwrap().value;
        assert!((e0 - 2.144_31).abs() < 1e-5, "{e0}");
        let mut prev = e0;
        for n in 1..30 {
            let e = energy_natural_limit(&p, n, 0, Branch::Plus).unwrap().value;
            assert!(e > prev);
            prev = e;
        }
        let bad = ModelParams { m: 1.0, alpha: 0.0, lambda0: 1.5, lambda_r: 1.0 };
        assert!(matches!(energy_natural_limit(&bad, 0, 0, Branch::Plus), Err(Error::ComplexEnergy { .. })));
    }

    #[test]
    fn spacing_approaches_two_sqrt_alpha() {
        let p = REF.with_alpha(0.04);
        let de = level_spacing(&p, 10_000, 0).unwrap();
        assert!((de - 0.4).abs() < 1e-4, "{de}");
        let direct = energy_natural(&p, 11, 0, Branch::Plus).unwrap().value
            - energy_natural(&p, 10, 0, Branch::Plus).unwrap().value;
        assert!((level_spacing(&p, 10, 0).unwrap() - direct).abs() < 1e-12);
    }

    #[test]
    fn undeformed_spacing_vanishes() {
        let p = REF.with_alpha(0.0);
        let a = level_spacing(&p, 10, 0).unwrap();
        let b = level_spacing(&p, 10_000, 0).unwrap();
        assert!(b < a / 10.0 && b > 0.0);
    }

    #[test]
    fn unnatural_values() {
        let p = REF.with_lambda0(0.0);
        let phi = energy_unnatural_phi(&p, 0, Branch::Plus).unwrap().value;
        assert!((phi - sqrt(7.3)).abs() < 1e-14);
        let h0 = energy_unnatural_h0(&p, 0, Branch::Plus).unwrap().value;
        assert!((h0 - sqrt(3.1)).abs() < 1e-14);
        assert!((h0 - 1.760_68).abs() < 1e-5);
        let h0m = energy_unnatural_h0(&p, 0, Branch::Minus).unwrap().value;
        assert_eq!(h0m, -h0);
        // Massless, n = 0: E² = α + 2λ_r.
        assert!((h0_energy_squared(0.0, 0.1, 1.0, 0) - 2.1).abs() < 1e-14);
    }

    #[test]
    fn unnatural_regime_checks() {
        assert!(matches!(energy_unnatural_phi(&REF, 0, Branch::Plus), Err(Error::UnsupportedRegime(_))));
        assert!(matches!(energy_unnatural_h0(&REF, 0, Branch::Plus), Err(Error::UnsupportedRegime(_))));
        let weak = ModelParams { m: 1.0, alpha: 1.0, lambda0: 0.0, lambda_r: 0.2 };
        assert!(matches!(energy_unnatural_h0(&weak, 0, Branch::Plus), Err(Error::UnsupportedRegime(_))));
        assert!(energy_unnatural_phi(&weak, 0, Branch::Plus).is_ok());
    }

    #[test]
    fn unnatural_quantization_closes() {
        for alpha in [0.05, 0.1, 0.3] {
            let p = REF.with_lambda0(0.0).with_alpha(alpha);
            for n in 0..6 {
                for sector in [Sector::UnnaturalPhi, Sector::UnnaturalH0] {
                    let e = energy(&p, sector, n, Branch::Plus).unwrap().value;
                    let h = sector_abc(&p, sector, e).unwrap();
                    assert!((h.big_b + f64::from(n)).abs() < 1e-9, "{sector:?} {n}");
                    assert!(h.v1.abs() < 1e-12 && h.v2.abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn phi_limit_expansion() {
        // 4α(n+½)(λ_r/α) = (4n+2)λ_r, so E_φ² → m² + 4λ_r + (4n+2)λ_r as α → 0.
        for n in 0..5 {
            let e2 = phi_energy_squared(1.0, 1e-9, 1.0, n);
            let limit = 1.0 + 4.0 + (4.0 * f64::from(n) + 2.0);
            assert!((e2 - limit).abs() < 1e-7);
        }
    }
}
