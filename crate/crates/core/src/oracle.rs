//! Independent numerical eigensolver for the radial equations in `ρ`.
//!
//! Writing the solution as `ρ^a (1−ρ)^b u(ρ)` leaves the regular operator
//! `ρ(1−ρ)u'' + (C − (A+B+1)ρ)u'`, which is self-adjoint with
//! `p = ρ^{2a+1/2}(1−ρ)^{2b+1/2}` and weight `w = ρ^{2a−1/2}(1−ρ)^{2b−1/2}`.
//! It is discretized by cell-centred finite volumes with zero flux at both
//! ends, giving a symmetric tridiagonal pencil whose lowest eigenvalues are
//! found by Sturm bisection.
//!
//! Nothing here calls into [`crate::spectrum`]: the exponents and the
//! energy offset are rebuilt from the equation coefficients.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{exp, powf, sqrt};
use crate::model::{validate, ModelParams, Sector};
use crate::quadrature::GaussLegendre;

/// Bisection steps allowed per eigenvalue.
pub const MAX_BISECTION_STEPS: usize = 200;

/// Mass weights below `e^{-TAIL_LOG}` of the peak are dropped at the
/// `ρ = 1` end.
const TAIL_LOG: f64 = 69.0;

/// Coefficients of `ρ(1−ρ)F'' + (1/2 − ρ)F' − q₁F/ρ − q₂F/(1−ρ) + [κ + c₀]F = 0`
/// with `κ = (E² − m²)/(4α)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorCoefficients {
    pub q1: f64,
    pub q2: f64,
    pub c0: f64,
}

impl SectorCoefficients {
    pub fn new(params: &ModelParams, sector: Sector) -> Self {
        let ModelParams { alpha, lambda0, lambda_r, .. } = *params;
        let x = lambda_r / alpha;
        match sector {
            Sector::Natural(j) => {
                let jj = f64::from(j) * (f64::from(j) + 1.0);
                let y = lambda0 / alpha;
                SectorCoefficients { q1: jj / 4.0, q2: (x * x + x - y * y) / 4.0, c0: (jj + x * x - y * y) / 4.0 }
            }
            Sector::UnnaturalPhi => {
                SectorCoefficients { q1: 0.0, q2: x * (x + 1.0) / 4.0, c0: 0.25 + x * (x - 2.0) / 4.0 }
            }
            Sector::UnnaturalH0 => SectorCoefficients { q1: 0.0, q2: x * (x - 1.0) / 4.0, c0: x * x / 4.0 },
        }
    }

    /// Regular indicial roots at `ρ = 0` and `ρ = 1`.
    pub fn exponents(&self) -> Result<(f64, f64)> {
        let root = |q: f64| {
            let disc = 1.0 + 16.0 * q;
            if disc < 0.0 {
                Err(Error::ComplexExponent { discriminant: disc })
            } else {
                Ok(0.25 + 0.25 * sqrt(disc))
            }
        };
        Ok((root(self.q1)?, root(self.q2)?))
    }
}

/// `E² = m² + 4α (offset + λ)` for a discrete eigenvalue `λ ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenvalueMap {
    pub m2: f64,
    pub four_alpha: f64,
    pub offset: f64,
}

impl EigenvalueMap {
    pub fn energy_squared(&self, lambda: f64) -> f64 {
        self.m2 + self.four_alpha * (self.offset + lambda)
    }
}

/// Generalized problem `K u = λ M u` with `K` tridiagonal and `M` diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscretizedProblem {
    pub grid_size: usize,
    pub sector: Sector,
    /// Cell centres.
    pub rho_nodes: Vec<f64>,
    /// Right end of the computational interval, `1` unless the tail was cut.
    pub rho_end: f64,
    pub a: f64,
    pub b: f64,
    pub stiffness_diag: Vec<f64>,
    /// `K[i][i+1] = K[i+1][i]`.
    pub stiffness_off: Vec<f64>,
    pub mass: Vec<f64>,
    pub eigenvalue_map: EigenvalueMap,
}

impl DiscretizedProblem {
    /// `M⁻¹ K u`, the discrete version of `−ρ(1−ρ)u'' − (C − (A+B+1)ρ)u'`.
    pub fn apply(&self, u: &[f64]) -> Vec<f64> {
        let n = self.grid_size;
        (0..n)
            .map(|i| {
                // Written as flux differences so constants map to exactly zero.
                let mut v = 0.0;
                if i > 0 {
                    v -= self.stiffness_off[i - 1] * (u[i] - u[i - 1]);
                }
                if i + 1 < n {
                    v -= self.stiffness_off[i] * (u[i] - u[i + 1]);
                }
                v / self.mass[i]
            })
            .collect()
    }

    /// Dense `M⁻¹ K`, row major.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.grid_size;
        let mut out = alloc::vec![alloc::vec![0.0; n]; n];
        for i in 0..n {
            out[i][i] = self.stiffness_diag[i] / self.mass[i];
            if i + 1 < n {
                out[i][i + 1] = self.stiffness_off[i] / self.mass[i];
                out[i + 1][i] = self.stiffness_off[i] / self.mass[i + 1];
            }
        }
        out
    }

    /// Symmetric tridiagonal `M^{-1/2} K M^{-1/2}` as (diagonal, off-diagonal).
    pub fn symmetric_form(&self) -> (Vec<f64>, Vec<f64>) {
        let d = self.stiffness_diag.iter().zip(&self.mass).map(|(k, m)| k / m).collect();
        let e = self.stiffness_off.iter().enumerate().map(|(i, k)| k / sqrt(self.mass[i] * self.mass[i + 1])).collect();
        (d, e)
    }
}

pub fn discretize(params: &ModelParams, sector: Sector, grid_size: usize) -> Result<DiscretizedProblem> {
    if grid_size < 2 {
        return Err(Error::InvalidArgument("grid size must be at least 2"));
    }
    if !(params.alpha > 0.0) {
        return Err(Error::UnsupportedRegime("numerical oracle requires alpha > 0"));
    }
    validate(params).into_result()?;
    sector.check_regime(params)?;
    let coeffs = SectorCoefficients::new(params, sector);
    let (a, b) = coeffs.exponents()?;

    let pe = 2.0 * a + 0.5;
    let qe = 2.0 * b + 0.5;
    let tail = 1.0 - exp(-TAIL_LOG / (qe - 1.0).max(1e-300));
    let rho_end = if qe - 1.0 > 0.0 && tail < 0.9 { tail } else { 1.0 };

    let h = rho_end / grid_size as f64;
    let flux = |rho: f64| powf(rho, pe) * powf(1.0 - rho, qe) / h;
    let weight = |rho: f64| powf(rho, pe - 1.0) * powf(1.0 - rho, qe - 1.0);

    let interior = GaussLegendre::new(8);
    let edge = GaussLegendre::new(32);
    let mass: Vec<f64> = (0..grid_size)
        .map(|i| {
            let lo = h * i as f64;
            let hi = lo + h;
            if i == 0 {
                // ρ = h t²: the ρ^{2a−1/2} factor becomes a polynomial in t.
                edge.integrate(0.0, 1.0, |t| 2.0 * h * t * weight(h * t * t))
            } else if i == grid_size - 1 && rho_end == 1.0 {
                edge.integrate(0.0, 1.0, |t| 2.0 * h * t * weight(1.0 - h * t * t))
            } else {
                interior.integrate(lo, hi, weight)
            }
        })
        .collect();

    let faces: Vec<f64> = (1..grid_size).map(|i| flux(h * i as f64)).collect();
    let stiffness_diag = (0..grid_size)
        .map(|i| {
            let left = if i == 0 { 0.0 } else { faces[i - 1] };
            let right = if i + 1 == grid_size { 0.0 } else { faces[i] };
            left + right
        })
        .collect();
    let stiffness_off = faces.iter().map(|f| -f).collect();
    let rho_nodes = (0..grid_size).map(|i| h * (i as f64 + 0.5)).collect();

    Ok(DiscretizedProblem {
        grid_size,
        sector,
        rho_nodes,
        rho_end,
        a,
        b,
        stiffness_diag,
        stiffness_off,
        mass,
        eigenvalue_map: EigenvalueMap {
            m2: params.m * params.m,
            four_alpha: 4.0 * params.alpha,
            offset: (a + b) * (a + b) - coeffs.c0,
        },
    })
}

/// Number of eigenvalues of the symmetric tridiagonal `(d, e)` below `x`.
fn sturm_count(d: &[f64], e: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0f64;
    for i in 0..d.len() {
        let off = if i == 0 { 0.0 } else { e[i - 1] * e[i - 1] };
        q = d[i] - x - if i == 0 { 0.0 } else { off / q };
        if q == 0.0 {
            q = -f64::EPSILON * (d[i].abs() + x.abs() + 1.0);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `k` smallest discrete eigenvalues mapped to `E²`, ascending.
pub fn solve_lowest(problem: &DiscretizedProblem, k: usize) -> Result<Vec<f64>> {
    if k > problem.grid_size {
        return Err(Error::InvalidArgument("requested more eigenvalues than grid points"));
    }
    let (d, e) = problem.symmetric_form();
    let mut lo_bound = f64::INFINITY;
    let mut hi_bound = f64::NEG_INFINITY;
    for i in 0..d.len() {
        let r = if i > 0 { e[i - 1].abs() } else { 0.0 } + if i < e.len() { e[i].abs() } else { 0.0 };
        lo_bound = lo_bound.min(d[i] - r);
        hi_bound = hi_bound.max(d[i] + r);
    }
    let mut out = Vec::with_capacity(k);
    for idx in 0..k {
        let (mut lo, mut hi) = (lo_bound, hi_bound);
        let mut steps = 0;
        loop {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi || hi - lo <= 4.0 * f64::EPSILON * hi_bound.abs().max(1.0) * 1e-3 {
                break;
            }
            if steps == MAX_BISECTION_STEPS {
                return Err(Error::NonConvergence { iterations: steps });
            }
            if sturm_count(&d, &e, mid) > idx {
                hi = mid;
            } else {
                lo = mid;
            }
            steps += 1;
        }
        out.push(problem.eigenvalue_map.energy_squared(0.5 * (lo + hi)));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonRow {
    pub n: u32,
    pub analytic: f64,
    pub numeric: f64,
    pub rel_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub sector: Sector,
    pub grid_size: usize,
    pub tolerance: f64,
    pub rows: Vec<ComparisonRow>,
    pub passed: bool,
    /// Row with the largest relative error.
    pub worst: Option<ComparisonRow>,
}

/// Tabulates `analytic(n)` against the oracle for `n = 0..=n_max`.
pub fn compare<F>(
    params: &ModelParams,
    sector: Sector,
    n_max: u32,
    grid_size: usize,
    tol: f64,
    analytic: F,
) -> Result<ComparisonReport>
where
    F: Fn(u32) -> Result<f64>,
{
    let problem = discretize(params, sector, grid_size)?;
    let e2 = solve_lowest(&problem, n_max as usize + 1)?;
    let mut rows = Vec::with_capacity(e2.len());
    for (n, &v) in (0..=n_max).zip(&e2) {
        let numeric = sqrt(v);
        let exact = analytic(n)?;
        rows.push(ComparisonRow { n, analytic: exact, numeric, rel_error: ((numeric - exact) / exact).abs() });
    }
    let worst = rows.iter().copied().fold(None, |acc: Option<ComparisonRow>, r| match acc {
        Some(w) if !(r.rel_error > w.rel_error) => Some(w),
        _ => Some(r),
    });
    let passed = rows.iter().all(|r| r.rel_error < tol);
    Ok(ComparisonReport { sector, grid_size, tolerance: tol, rows, passed, worst })
}

/// Deformation parameters used for the `α → 0` extrapolation.
pub const RICHARDSON_ALPHAS: [f64; 3] = [4e-3, 2e-3, 1e-3];

/// `E²` of level `n` at `α → 0`, from oracle solves at [`RICHARDSON_ALPHAS`]
/// combined to cancel the `O(α)` and `O(α²)` terms.
pub fn limit_energy_squared(params: &ModelParams, sector: Sector, n: u32, grid_size: usize) -> Result<f64> {
    let mut vals = [0.0; 3];
    for (v, &alpha) in vals.iter_mut().zip(&RICHARDSON_ALPHAS) {
        let p = params.with_alpha(alpha);
        let problem = discretize(&p, sector, grid_size)?;
        *v = solve_lowest(&problem, n as usize + 1)?[n as usize];
    }
    let coarse = 2.0 * vals[1] - vals[0];
    let fine = 2.0 * vals[2] - vals[1];
    Ok((4.0 * fine - coarse) / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    const REF: ModelParams = ModelParams::REFERENCE;

    #[test]
    fn matrix_has_requested_size() {
        let p = discretize(&REF, Sector::Natural(0), 8).unwrap();
        let dense = p.to_dense();
        assert_eq!(dense.len(), 8);
        assert!(dense.iter().all(|row| row.len() == 8));
    }

    #[test]
    fn constant_is_the_ground_state() {
        let p = discretize(&REF, Sector::Natural(1), 64).unwrap();
        let v = p.apply(&[1.0; 64]);
        assert!(v.iter().all(|x| *x == 0.0));
        let lowest = solve_lowest(&p, 1).unwrap()[0];
        assert!((lowest - p.eigenvalue_map.energy_squared(0.0)).abs() < 1e-9);
    }

    #[test]
    fn sturm_count_on_diagonal() {
        assert_eq!(sturm_count(&[1.0, 2.0, 3.0], &[0.0, 0.0], 2.5), 2);
        assert_eq!(sturm_count(&[1.0, 2.0, 3.0], &[0.0, 0.0], 0.5), 0);
    }

    #[test]
    fn ascending_and_reference_value() {
        let p = discretize(&REF, Sector::Natural(0), 4096).unwrap();
        let e2 = solve_lowest(&p, 3).unwrap();
        assert!(e2.windows(2).all(|w| w[0] < w[1]));
        assert!((sqrt(e2[0]) - 2.24052).abs() / 2.24052 < 1e-5);
    }

    #[test]
    fn h0_ground_state() {
        let p = discretize(&REF.with_lambda0(0.0), Sector::UnnaturalH0, 4096).unwrap();
        let e = sqrt(solve_lowest(&p, 1).unwrap()[0]);
        assert!((e - 1.76068).abs() / 1.76068 < 1e-5);
    }

    #[test]
    fn too_many_eigenvalues() {
        let p = discretize(&REF, Sector::Natural(0), 4).unwrap();
        assert!(matches!(solve_lowest(&p, 5), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn unnatural_needs_lambda0_zero() {
        assert!(matches!(discretize(&REF, Sector::UnnaturalPhi, 8), Err(Error::UnsupportedRegime(_))));
    }
}
