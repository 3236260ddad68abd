//! Explicit eigenfunctions in the variable `ρ = αr²`.
//!
//! The solved component is `N ρ^a (1−ρ)^b ₂F₁(A, −n; C; ρ)`; the remaining
//! radial components follow from the first-order equations using analytic
//! derivatives of that closed form.
//!
//! Phase convention: the solved component is real. In the natural sector
//! `G₀ = (E + iA₀) F₀ / m` is complex and is stored as two real columns.

mod hypergeometric;
mod residual;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::f64::consts::PI;

pub use hypergeometric::{gauss2f1_terminating, pochhammer, TerminatingSeries};
pub use residual::{residual_first_order, second_order_residual};

use crate::error::{Error, Result};
use crate::math::{beta, cos, powf, sin, sqrt};
use crate::model::{xi_zeta, Branch, ModelParams, Sector};
use crate::quadrature::GaussLegendre;
use crate::spectrum::{self, EnergyLevel};

/// Sup-norm tolerance on the first-order residual for an accepted solution.
pub const RESIDUAL_TOLERANCE: f64 = 1e-8;

/// Gauss–Legendre nodes used by [`deformed_norm`].
pub const NORM_QUADRATURE_NODES: usize = 256;

/// `scale · ρ^a (1−ρ)^b P(ρ)` with its first two `ρ`-derivatives.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    pub a: f64,
    pub b: f64,
    pub series: TerminatingSeries,
    pub scale: f64,
}

/// Value and first two derivatives at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub f: f64,
    pub d1: f64,
    pub d2: f64,
}

impl RadialProfile {
    pub fn value(&self, rho: f64) -> f64 {
        self.scale * powf(rho, self.a) * powf(1.0 - rho, self.b) * self.series.eval(rho)
    }

    /// Derivatives with respect to `ρ`, via the logarithmic derivative of
    /// the prefactor.
    pub fn jet_rho(&self, rho: f64) -> Jet {
        let g = self.scale * powf(rho, self.a) * powf(1.0 - rho, self.b);
        let p = self.series.eval(rho);
        let dp = self.series.derivative(rho);
        let d2p = self.series.second_derivative(rho);
        let l = self.a / rho - self.b / (1.0 - rho);
        let dl = -self.a / (rho * rho) - self.b / ((1.0 - rho) * (1.0 - rho));
        Jet { f: g * p, d1: g * (dp + l * p), d2: g * (d2p + 2.0 * l * dp + (l * l + dl) * p) }
    }

    /// Derivatives with respect to `r`, where `ρ = αr²`.
    pub fn jet_r(&self, rho: f64, alpha: f64) -> Jet {
        let j = self.jet_rho(rho);
        let r = sqrt(rho / alpha);
        Jet { f: j.f, d1: 2.0 * alpha * r * j.d1, d2: 2.0 * alpha * j.d1 + 4.0 * alpha * rho * j.d2 }
    }
}

/// A sampled eigenfunction together with its closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialSolution {
    pub sector: Sector,
    pub n: u32,
    pub params: ModelParams,
    pub energy: f64,
    pub rho_grid: Vec<f64>,
    pub primary_name: &'static str,
    pub primary: Vec<f64>,
    pub secondary: BTreeMap<&'static str, Vec<f64>>,
    pub norm_constant: f64,
    pub residual_sup: f64,
    pub profile: RadialProfile,
}

impl RadialSolution {
    pub fn r_grid(&self) -> Vec<f64> {
        self.rho_grid.iter().map(|&rho| sqrt(rho / self.params.alpha)).collect()
    }

    /// Primary component at an arbitrary `ρ`.
    pub fn primary_at(&self, rho: f64) -> f64 {
        self.profile.value(rho)
    }

    /// Primary component at radius `r` (`0 ≤ r < 1/√α`).
    pub fn primary_at_r(&self, r: f64) -> f64 {
        self.profile.value(self.params.alpha * r * r)
    }

    /// Interior sign changes of the primary component on a uniform grid of
    /// `samples` points.
    pub fn node_count(&self, samples: usize) -> usize {
        let values = (1..samples).map(|i| self.profile.value(i as f64 / samples as f64));
        count_sign_changes(values)
    }

    /// The same solution multiplied by `c`.
    pub fn scaled(&self, c: f64) -> RadialSolution {
        let mut out = self.clone();
        out.primary.iter_mut().for_each(|v| *v *= c);
        for col in out.secondary.values_mut() {
            col.iter_mut().for_each(|v| *v *= c);
        }
        out.norm_constant *= c;
        out.profile.scale *= c;
        out
    }

    pub fn energy_level(&self) -> EnergyLevel {
        let (parity, j) = (self.sector.parity(), self.sector.j());
        EnergyLevel {
            qn: crate::model::QuantumNumbers { n: self.n, j, parity, branch: Branch::Plus },
            value: self.energy,
            formula: match self.sector {
                Sector::Natural(_) => spectrum::Formula::NaturalDeformed,
                Sector::UnnaturalPhi => spectrum::Formula::UnnaturalPhi,
                Sector::UnnaturalH0 => spectrum::Formula::UnnaturalH0,
            },
        }
    }

    /// Deformed-measure weight `dr/dρ · (1−αr²)^{−1/2}` at each grid point.
    pub fn measure_weights(&self) -> Vec<f64> {
        let sa = sqrt(self.params.alpha);
        self.rho_grid.iter().map(|&rho| 1.0 / (2.0 * sa * sqrt(rho * (1.0 - rho)))).collect()
    }
}

pub fn count_sign_changes<I: IntoIterator<Item = f64>>(values: I) -> usize {
    let mut prev = 0.0f64;
    let mut changes = 0;
    for v in values {
        if v == 0.0 {
            continue;
        }
        if prev != 0.0 && (v > 0.0) != (prev > 0.0) {
            changes += 1;
        }
        prev = v;
    }
    changes
}

/// `N` Chebyshev points of the first kind mapped to `(0, 1)`, clustered at
/// both ends and strictly increasing.
pub fn chebyshev_rho_grid(n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| {
            let theta = PI * (k as f64 + 0.5) / n as f64;
            0.5 * (1.0 - cos(theta))
        })
        .collect()
}

/// `∫₀^{1/√α} |F(r)|² (1−αr²)^{−1/2} dr`.
///
/// With `ρ = sin²(θ/2)` the measure `dρ / √(ρ(1−ρ))` becomes `dθ`, so the
/// integral is `∫₀^π F² dθ / (2√α)` with a smooth integrand.
pub fn deformed_norm(sol: &RadialSolution, params: &ModelParams) -> Result<f64> {
    deformed_norm_of(&sol.profile, params.alpha, NORM_QUADRATURE_NODES)
}

pub fn deformed_norm_of(profile: &RadialProfile, alpha: f64, nodes: usize) -> Result<f64> {
    for exponent in [2.0 * profile.a - 0.5, 2.0 * profile.b - 0.5] {
        if exponent <= -1.0 {
            return Err(Error::DivergentNorm { exponent });
        }
    }
    let gl = GaussLegendre::new(nodes);
    let integral = gl.integrate(0.0, PI, |theta| {
        let half = 0.5 * theta;
        let (sn, cs) = (sin(half), cos(half));
        let f = profile.scale * powf(sn, 2.0 * profile.a) * powf(cs, 2.0 * profile.b) * profile.series.eval(sn * sn);
        f * f
    });
    Ok(integral / (2.0 * sqrt(alpha)))
}

/// Closed-form deformed norm of the nodeless profile `ρ^a (1−ρ)^b`:
/// `B(2a + 1/2, 2b + 1/2) / (2√α)`.
pub fn nodeless_norm(a: f64, b: f64, alpha: f64) -> f64 {
    beta(2.0 * a + 0.5, 2.0 * b + 0.5) / (2.0 * sqrt(alpha))
}

struct Setup {
    energy: f64,
    a: f64,
    b: f64,
    big_a: f64,
    big_c: f64,
}

fn setup(params: &ModelParams, sector: Sector, n: u32) -> Result<Setup> {
    let level = spectrum::energy(params, sector, n, Branch::Plus)?;
    let h = spectrum::sector_abc(params, sector, level.value)?;
    // B = −n fixes A = 2(a + b) + n exactly.
    let big_a = 2.0 * (h.a + h.b) + f64::from(n);
    Ok(Setup { energy: level.value, a: h.a, b: h.b, big_a, big_c: h.big_c })
}

fn build(params: &ModelParams, sector: Sector, n: u32, grid_size: usize) -> Result<RadialSolution> {
    if grid_size < 2 {
        return Err(Error::InvalidArgument("grid size must be at least 2"));
    }
    if !(params.alpha > 0.0) {
        return Err(Error::UnsupportedRegime("eigenfunctions require alpha > 0"));
    }
    sector.check_regime(params)?;
    let s = setup(params, sector, n)?;
    let series = TerminatingSeries::new(s.big_a, n, s.big_c)?;
    let mut profile = RadialProfile { a: s.a, b: s.b, series, scale: 1.0 };
    let raw_norm = deformed_norm_of(&profile, params.alpha, NORM_QUADRATURE_NODES)?;
    let norm_constant = 1.0 / sqrt(raw_norm);
    profile.scale = norm_constant;

    let rho_grid = chebyshev_rho_grid(grid_size);
    let primary: Vec<f64> = rho_grid.iter().map(|&rho| profile.value(rho)).collect();
    let secondary = secondary_components(params, sector, s.energy, &profile, &rho_grid);
    let primary_name = match sector {
        Sector::Natural(_) => "F0",
        Sector::UnnaturalPhi => "phi",
        Sector::UnnaturalH0 => "H0",
    };
    let mut sol = RadialSolution {
        sector,
        n,
        params: *params,
        energy: s.energy,
        rho_grid,
        primary_name,
        primary,
        secondary,
        norm_constant,
        residual_sup: 0.0,
        profile,
    };
    let level = sol.energy_level();
    sol.residual_sup = residual_first_order(params, &level, &sol).max(second_order_residual(params, &sol));
    if !(sol.residual_sup <= RESIDUAL_TOLERANCE) {
        return Err(Error::GridTooCoarse { residual: sol.residual_sup, tolerance: RESIDUAL_TOLERANCE });
    }
    Ok(sol)
}

/// Pointwise potential data at one grid point.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Local {
    pub r: f64,
    /// `s = √(1 − αr²)`
    pub s: f64,
    /// `ds/dr`
    pub ds: f64,
    /// `W = A_r / s = λ_r r / (1 − αr²)`
    pub w: f64,
    /// `dW/dr`
    pub dw: f64,
    /// `A₀ = λ₀ r / s`
    pub a0: f64,
}

impl Local {
    pub(crate) fn at(params: &ModelParams, rho: f64) -> Local {
        let alpha = params.alpha;
        let r = sqrt(rho / alpha);
        let s = sqrt(1.0 - rho);
        Local {
            r,
            s,
            ds: -alpha * r / s,
            w: params.lambda_r * r / (1.0 - rho),
            dw: params.lambda_r * (1.0 + rho) / ((1.0 - rho) * (1.0 - rho)),
            a0: params.lambda0 * r / s,
        }
    }
}

fn secondary_components(
    params: &ModelParams,
    sector: Sector,
    energy: f64,
    profile: &RadialProfile,
    rho_grid: &[f64],
) -> BTreeMap<&'static str, Vec<f64>> {
    let m = params.m;
    let mut out: BTreeMap<&'static str, Vec<f64>> = BTreeMap::new();
    let mut push = |name: &'static str, v: f64| out.entry(name).or_default().push(v);
    for &rho in rho_grid {
        let loc = Local::at(params, rho);
        let jet = profile.jet_r(rho, params.alpha);
        let (f, df, r, s, w) = (jet.f, jet.d1, loc.r, loc.s, loc.w);
        match sector {
            Sector::Natural(j) => {
                let (xi, zeta) = xi_zeta(j);
                let jf = f64::from(j);
                push("H+1", -(s * zeta / m) * (df - (jf + 1.0) * f / r - w * f));
                push("H-1", -(s * xi / m) * (df + jf * f / r - w * f));
                push("G0_re", energy * f / m);
                push("G0_im", loc.a0 * f / m);
            }
            Sector::UnnaturalPhi => {
                let g = m * s * (df - f / r - w * f) / (energy * energy - m * m);
                push("G+1", g);
                push("F+1", energy * g / m);
            }
            Sector::UnnaturalH0 => {
                let fm = m * s * (df + w * f) / (energy * energy - m * m);
                push("F-1", fm);
                push("G-1", energy * fm / m);
            }
        }
    }
    out
}

/// Natural-parity eigenfunction `(F₀; H₊₁, H₋₁, G₀)` for `(n, J)`.
pub fn natural_solution(params: &ModelParams, n: u32, j: u32, grid_size: usize) -> Result<RadialSolution> {
    build(params, Sector::Natural(j), n, grid_size)
}

/// Unnatural-parity eigenfunction at `J = 0`: `(φ; F₊₁, G₊₁)` or
/// `(H₀; F₋₁, G₋₁)`.
pub fn unnatural_solution(params: &ModelParams, n: u32, which: Sector, grid_size: usize) -> Result<RadialSolution> {
    match which {
        Sector::Natural(_) => Err(Error::InvalidArgument("expected an unnatural sector")),
        _ => build(params, which, n, grid_size),
    }
}

/// Builds the solution for any sector.
pub fn solution(params: &ModelParams, sector: Sector, n: u32, grid_size: usize) -> Result<RadialSolution> {
    build(params, sector, n, grid_size)
}

#[cfg(test)]
mod tests {
    use super::*;

    const REF: ModelParams = ModelParams::REFERENCE;

    #[test]
    fn ground_state_is_nodeless_and_normalized() {
        let sol = natural_solution(&REF, 0, 0, 512).unwrap();
        assert_eq!(sol.node_count(10_000), 0);
        let norm = deformed_norm(&sol, &REF).unwrap();
        assert!((norm - 1.0).abs() < 1e-10);
        assert_eq!(sol.primary.len(), 512);
        assert!(sol.rho_grid.windows(2).all(|w| w[0] < w[1]));
        assert!(sol.rho_grid[0] > 0.0 && *sol.rho_grid.last().unwrap() < 1.0);
    }

    #[test]
    fn ground_state_norm_matches_beta_integral() {
        let sol = natural_solution(&REF, 0, 0, 64).unwrap();
        let unit = RadialProfile { scale: 1.0, ..sol.profile.clone() };
        let quad = deformed_norm_of(&unit, REF.alpha, NORM_QUADRATURE_NODES).unwrap();
        let (a, b) = (unit.a, unit.b);
        let closed = nodeless_norm(a, b, REF.alpha);
        assert!((quad - closed).abs() < 1e-10 * closed, "{quad} vs {closed}");
    }

    #[test]
    fn scaling_scales_norm_quadratically() {
        let sol = natural_solution(&REF, 2, 1, 64).unwrap();
        let n1 = deformed_norm(&sol, &REF).unwrap();
        let n3 = deformed_norm(&sol.scaled(3.0), &REF).unwrap();
        assert!((n3 - 9.0 * n1).abs() < 1e-12);
    }

    #[test]
    fn node_count_equals_n() {
        for n in 0..=5 {
            let sol = natural_solution(&REF, n, 0, 256).unwrap();
            assert_eq!(sol.node_count(10_000), n as usize);
        }
    }

    #[test]
    fn secondary_columns_present() {
        let sol = natural_solution(&REF, 1, 1, 32).unwrap();
        let names: Vec<_> = sol.secondary.keys().copied().collect();
        assert_eq!(names, ["G0_im", "G0_re", "H+1", "H-1"]);
        assert!(sol.secondary.values().all(|c| c.len() == 32));
        let phi = unnatural_solution(&REF.with_lambda0(0.0), 0, Sector::UnnaturalPhi, 32).unwrap();
        assert_eq!(phi.secondary.keys().copied().collect::<Vec<_>>(), ["F+1", "G+1"]);
    }

    #[test]
    fn unnatural_requires_lambda0_zero() {
        assert!(matches!(unnatural_solution(&REF, 0, Sector::UnnaturalH0, 64), Err(Error::UnsupportedRegime(_))));
    }

    #[test]
    fn rho_and_r_evaluation_agree() {
        let sol = natural_solution(&REF, 3, 2, 128).unwrap();
        let r_max = 1.0 / sqrt(REF.alpha);
        for i in 1..100 {
            let r = r_max * f64::from(i) / 100.0;
            let rho = REF.alpha * r * r;
            let (a, b) = (sol.primary_at(rho), sol.primary_at_r(r));
            assert!((a - b).abs() <= 1e-12 * a.abs().max(1e-300));
        }
        for (&rho, &v) in sol.rho_grid.iter().zip(&sol.primary) {
            assert!((sol.primary_at_r(sqrt(rho / REF.alpha)) - v).abs() < 1e-12);
        }
    }

    #[test]
    fn sign_changes() {
        assert_eq!(count_sign_changes([1.0, 0.0, -1.0, -2.0, 3.0]), 2);
        assert_eq!(count_sign_changes([0.0, 0.0]), 0);
    }
}
