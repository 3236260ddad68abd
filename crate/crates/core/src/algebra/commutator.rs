//! Pointwise verification of the deformed Heisenberg algebra
//! `[X_i, X_j] = 0`, `[X_i, P_j] = i(δ_ij + α X_i X_j)`, `[P_i, P_j] = iα L_ij`.

use alloc::vec::Vec;

use num_complex::Complex64;

use super::poly::{DeformedOperators, Poly, SFunction};
use crate::error::{Error, Result};
use crate::math::sqrt;

/// Largest residual seen for each of the three relations.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CommutatorReport {
    pub alpha: f64,
    pub functions_checked: usize,
    pub points_checked: usize,
    /// `[X_i, X_j] f` was symbolically zero for every `f`, `i`, `j`.
    pub position_exactly_zero: bool,
    pub position_residual: f64,
    pub mixed_residual: f64,
    pub momentum_residual: f64,
}

impl CommutatorReport {
    pub fn max_residual(&self) -> f64 {
        self.position_residual.max(self.mixed_residual).max(self.momentum_residual)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.position_exactly_zero && self.max_residual() < tol
    }
}

/// Every monomial `x^a y^b z^c` with `a + b + c <= max_degree`.
pub fn monomial_basis(max_degree: u8) -> Vec<Poly> {
    let mut out = Vec::new();
    for total in 0..=max_degree {
        for a in 0..=total {
            for b in 0..=(total - a) {
                let c = total - a - b;
                out.push(Poly::monomial([a, b, c], Complex64::new(1.0, 0.0)));
            }
        }
    }
    out
}

/// Cubic lattice with `per_axis` points per side, clipped to
/// `α r² <= max_alpha_r2`.
pub fn ball_grid(alpha: f64, per_axis: usize, max_alpha_r2: f64) -> Vec<[f64; 3]> {
    let radius = sqrt(max_alpha_r2 / alpha);
    let step = if per_axis > 1 { 2.0 * radius / (per_axis - 1) as f64 } else { 0.0 };
    let mut pts = Vec::new();
    for i in 0..per_axis {
        for j in 0..per_axis {
            for k in 0..per_axis {
                let p = [-radius + step * i as f64, -radius + step * j as f64, -radius + step * k as f64];
                let r2: f64 = p.iter().map(|c| c * c).sum();
                if alpha * r2 <= max_alpha_r2 {
                    pts.push(p);
                }
            }
        }
    }
    pts
}

fn sup_over_grid(f: &SFunction, grid: &[[f64; 3]], alpha: f64) -> f64 {
    grid.iter().map(|&p| f.eval(p, alpha).norm()).fold(0.0, f64::max)
}

/// Applies the position-space representation to every test function and
/// measures each relation on `grid`.
pub fn check_deformed_commutators(alpha: f64, test_fns: &[Poly], grid: &[[f64; 3]]) -> Result<CommutatorReport> {
    if !(alpha > 0.0) {
        return Err(Error::InvalidArgument("commutator check requires alpha > 0"));
    }
    for (index, p) in grid.iter().enumerate() {
        let alpha_r2 = alpha * p.iter().map(|c| c * c).sum::<f64>();
        if alpha_r2 >= 1.0 {
            return Err(Error::OutOfDomain { index, alpha_r2 });
        }
    }

    let ops = DeformedOperators { alpha };
    let i_unit = Complex64::new(0.0, 1.0);
    let mut report = CommutatorReport {
        alpha,
        functions_checked: test_fns.len(),
        points_checked: grid.len(),
        position_exactly_zero: true,
        ..CommutatorReport::default()
    };

    for p in test_fns {
        let f = SFunction::from_poly(p.clone());
        let xf: [SFunction; 3] = core::array::from_fn(|i| ops.position(i, &f));
        let pf: [SFunction; 3] = core::array::from_fn(|i| ops.momentum(i, &f));
        for i in 0..3 {
            for j in 0..3 {
                let xx = ops.position(i, &xf[j]).sub(&ops.position(j, &xf[i]));
                if !xx.is_zero() {
                    report.position_exactly_zero = false;
                }
                report.position_residual = report.position_residual.max(sup_over_grid(&xx, grid, alpha));

                let xp = ops.position(i, &pf[j]).sub(&ops.momentum(j, &xf[i]));
                let delta = if i == j { 1.0 } else { 0.0 };
                let expected = f
                    .scale(Complex64::new(delta, 0.0))
                    .add(&ops.position(i, &ops.position(j, &f)).scale(Complex64::new(alpha, 0.0)))
                    .scale(i_unit);
                report.mixed_residual = report.mixed_residual.max(sup_over_grid(&xp.sub(&expected), grid, alpha));

                let pp = ops.momentum(i, &pf[j]).sub(&ops.momentum(j, &pf[i]));
                let expected = ops.angular_momentum(i, j, &f).scale(i_unit * alpha);
                report.momentum_residual = report.momentum_residual.max(sup_over_grid(&pp.sub(&expected), grid, alpha));
            }
        }
    }
    Ok(report)
}
