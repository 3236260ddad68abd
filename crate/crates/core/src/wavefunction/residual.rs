//! Pointwise residuals of the radial first-order system and of the reduced
//! second-order equation.
//!
//! Algebraic terms use the stored samples; derivative terms are analytic in
//! the closed form, so a wrong formula shows up as an O(1) residual rather
//! than being hidden by discretization error.

use super::{Local, RadialSolution};
use crate::math::sqrt;
use crate::model::{xi_zeta, ModelParams, Sector};
use crate::spectrum::EnergyLevel;

fn column<'a>(sol: &'a RadialSolution, name: &str) -> &'a [f64] {
    sol.secondary.get(name).map_or(&[], |v| v.as_slice())
}

/// Sup over the active sector's first-order equations and over the grid of
/// `|LHS − RHS|`, with the energy taken from `level`.
pub fn residual_first_order(params: &ModelParams, level: &EnergyLevel, sol: &RadialSolution) -> f64 {
    let e = level.value;
    let m = params.m;
    let e0 = sol.energy;
    let mut sup = 0.0f64;
    for (i, &rho) in sol.rho_grid.iter().enumerate() {
        let loc = Local::at(params, rho);
        let jet = sol.profile.jet_r(rho, params.alpha);
        let (f, df, d2f) = (sol.primary[i], jet.d1, jet.d2);
        let Local { r, s, ds, w, dw, a0 } = loc;
        let terms: &[f64] = match sol.sector {
            Sector::Natural(j) => {
                let (xi, zeta) = xi_zeta(j);
                let jf = f64::from(j);
                let hp = column(sol, "H+1")[i];
                let hm = column(sol, "H-1")[i];
                let g_re = column(sol, "G0_re")[i];
                let g_im = column(sol, "G0_im")[i];
                // H±1 = −(s c / m) h±, differentiated through s and h±.
                let up = df - (jf + 1.0) * f / r - w * f;
                let dup = d2f - (jf + 1.0) * (df / r - f / (r * r)) - dw * f - w * df;
                let um = df + jf * f / r - w * f;
                let dum = d2f + jf * (df / r - f / (r * r)) - dw * f - w * df;
                let dhp = -(zeta / m) * (ds * up + s * dup);
                let dhm = -(xi / m) * (ds * um + s * dum);
                let h_plus_eq = s * zeta * up + m * hp;
                let h_minus_eq = s * xi * um + m * hm;
                let div = zeta * (dhp + (jf + 1.0) * hp / r + w * hp) + xi * (dhm - jf * hm / r + w * hm);
                // (E − iA₀)(G_re + iG_im) − mF₀, both parts.
                let f0_eq_re = -s * div + e * g_re + a0 * g_im - m * f;
                let f0_eq_im = e * g_im - a0 * g_re;
                let g0_eq_re = e * f - m * g_re;
                let g0_eq_im = a0 * f - m * g_im;
                &[
                    h_plus_eq,
                    h_minus_eq,
                    sqrt(f0_eq_re * f0_eq_re + f0_eq_im * f0_eq_im),
                    sqrt(g0_eq_re * g0_eq_re + g0_eq_im * g0_eq_im),
                ]
            }
            Sector::UnnaturalPhi => {
                let gp = column(sol, "G+1")[i];
                let fp = column(sol, "F+1")[i];
                let k = m / (e0 * e0 - m * m);
                let h = df - f / r - w * f;
                let dh = d2f - df / r + f / (r * r) - dw * f - w * df;
                let dgp = k * (ds * h + s * dh);
                let phi_eq = -s * (dgp + gp / r + w * gp) - m * f;
                let f_plus_eq = e * gp - m * fp;
                let g_plus_eq = -s * h + e * fp - m * gp;
                &[phi_eq, f_plus_eq, g_plus_eq]
            }
            Sector::UnnaturalH0 => {
                let fm = column(sol, "F-1")[i];
                let gm = column(sol, "G-1")[i];
                let k = m / (e0 * e0 - m * m);
                let g = df + w * f;
                let dg = d2f + dw * f + w * df;
                let dfm = k * (ds * g + s * dg);
                let h0_eq = s * (dfm - w * fm) + m * f;
                let f_minus_eq = -s * g + e * gm - m * fm;
                let g_minus_eq = e * fm - m * gm;
                &[h0_eq, f_minus_eq, g_minus_eq]
            }
        };
        for t in terms {
            sup = sup.max(t.abs());
        }
    }
    sup
}

/// Sup over the grid of the reduced equation in `ρ`,
/// `ρ(1−ρ)F'' + (1/2 − ρ)F' − q₁F/ρ − q₂F/(1−ρ) + [(E² − m²)/(4α) + c₀]F`.
pub fn second_order_residual(params: &ModelParams, sol: &RadialSolution) -> f64 {
    let ModelParams { m, alpha, lambda0, lambda_r } = *params;
    let x = lambda_r / alpha;
    let (q1, q2, c0) = match sol.sector {
        Sector::Natural(j) => {
            let jj = f64::from(j) * (f64::from(j) + 1.0);
            let y = lambda0 / alpha;
            (jj / 4.0, (x * x + x - y * y) / 4.0, jj / 4.0 + (x * x - y * y) / 4.0)
        }
        Sector::UnnaturalPhi => (0.0, x * (x + 1.0) / 4.0, 0.25 + x * (x - 2.0) / 4.0),
        Sector::UnnaturalH0 => (0.0, x * (x - 1.0) / 4.0, x * x / 4.0),
    };
    let e = sol.energy;
    let k = (e * e - m * m) / (4.0 * alpha) + c0;
    sol.rho_grid
        .iter()
        .map(|&rho| {
            let j = sol.profile.jet_rho(rho);
            let res = rho * (1.0 - rho) * j.d2 + (0.5 - rho) * j.d1 - q1 * j.f / rho - q2 * j.f / (1.0 - rho) + k * j.f;
            res.abs()
        })
        .fold(0.0, f64::max)
}
