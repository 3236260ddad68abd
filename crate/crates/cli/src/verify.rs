//! The `verify` suite: exact algebra, deformed commutators, quantization
//! closure and the oracle comparison.

use std::fmt;

use clap::ValueEnum;
use dkp_core::algebra::{self, ball_grid, check_deformed_commutators, monomial_basis};
use dkp_core::oracle::compare;
use dkp_core::spectrum::{self, abc, natural_energy_squared};
use dkp_core::{Branch, ModelParams, Sector};

use crate::export::{comparison_summary, sector_label};
use crate::format::fmt_num;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Part {
    Algebra,
    Commutators,
    Closure,
    Oracle,
}

impl Part {
    pub const ALL: [Part; 4] = [Part::Algebra, Part::Commutators, Part::Closure, Part::Oracle];
}

/// Deliberate corruptions used to prove the suite can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mutation {
    /// Replace `J(J+1)` by `J(J+2)` in the natural-parity energy.
    JjTerm,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    pub parts: Vec<Part>,
    pub mutation: Option<Mutation>,
    pub grid_size: usize,
    pub n_max: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { parts: Part::ALL.to_vec(), mutation: None, grid_size: 8192, n_max: 4 }
    }
}

/// Parameter sets of the natural-parity sweep.
pub fn natural_grid() -> Vec<ModelParams> {
    let mut out = Vec::new();
    for lambda0 in [0.0, 0.5] {
        for alpha in [0.05, 0.1, 0.2] {
            out.push(ModelParams { m: 1.0, alpha, lambda0, lambda_r: 1.0 });
        }
    }
    out
}

pub const NATURAL_J: [u32; 3] = [0, 1, 2];

/// Parameter sets of the unnatural-parity sweep.
pub fn unnatural_grid() -> Vec<ModelParams> {
    [0.05, 0.1].iter().map(|&alpha| ModelParams { m: 1.0, alpha, lambda0: 0.0, lambda_r: 1.0 }).collect()
}

/// Natural-parity energy, optionally corrupted.
pub fn natural_energy(p: &ModelParams, n: u32, j: u32, mutation: Option<Mutation>) -> dkp_core::Result<f64> {
    let e = spectrum::energy_natural(p, n, j, Branch::Plus)?.value;
    Ok(match mutation {
        None => e,
        Some(Mutation::JjTerm) => (natural_energy_squared(p, n, j) - p.alpha * f64::from(j)).sqrt(),
    })
}

fn params_label(p: &ModelParams) -> String {
    format!("alpha={} lambda0={}", fmt_num(p.alpha), fmt_num(p.lambda0))
}

fn algebra_checks(out: &mut Vec<Check>) {
    let set = algebra::build_matrices();
    let report = algebra::verify_algebra(&set);
    out.push(Check {
        name: "algebra".into(),
        passed: report.is_pass(),
        detail: format!("{} triples, {} violations", report.triples_checked, report.violations.len()),
    });
    let projector = algebra::build_projector(&set);
    let (passed, detail) = match &projector {
        Ok(p) => {
            let m = p.matrix();
            let diag_ok = (0..10).all(|i| {
                (0..10).all(|j| {
                    let want = i64::from(i == j && i < 4);
                    let g = m.get(i, j);
                    g.re == want && g.im == 0
                })
            });
            (diag_ok && p.is_idempotent(), "P = diag(1,1,1,1,0,0,0,0,0,0)".to_string())
        }
        Err(e) => (false, e.to_string()),
    };
    out.push(Check { name: "projector".into(), passed, detail });
}

fn commutator_checks(out: &mut Vec<Check>) {
    let basis = monomial_basis(6);
    for alpha in [0.1, 1.0] {
        let grid = ball_grid(alpha, 7, 0.9);
        let (passed, detail) = match check_deformed_commutators(alpha, &basis, &grid) {
            Ok(r) => (
                r.passes(1e-10),
                format!(
                    "{} functions x {} points, max residual {}",
                    r.functions_checked,
                    r.points_checked,
                    fmt_num(r.max_residual())
                ),
            ),
            Err(e) => (false, e.to_string()),
        };
        out.push(Check { name: format!("commutators alpha={}", fmt_num(alpha)), passed, detail });
    }
}

fn closure_checks(out: &mut Vec<Check>, opts: &VerifyOptions) {
    for p in natural_grid() {
        for j in NATURAL_J {
            let mut worst = 0.0f64;
            let mut error = None;
            for n in 0..=opts.n_max {
                match natural_energy(&p, n, j, opts.mutation).and_then(|e| abc(&p, j, e)) {
                    Ok(h) => worst = worst.max((h.big_b + f64::from(n)).abs()),
                    Err(e) => error = Some(e.to_string()),
                }
            }
            let (passed, detail) = match error {
                Some(e) => (false, e),
                None => (worst < 1e-9, format!("max |B + n| = {}", fmt_num(worst))),
            };
            out.push(Check { name: format!("closure {} J={j}", params_label(&p)), passed, detail });
        }
    }
}

fn oracle_checks(out: &mut Vec<Check>, opts: &VerifyOptions) {
    let tol = 1e-5;
    let mut cases: Vec<(ModelParams, Sector)> = Vec::new();
    for p in natural_grid() {
        cases.extend(NATURAL_J.iter().map(|&j| (p, Sector::Natural(j))));
    }
    for p in unnatural_grid() {
        cases.push((p, Sector::UnnaturalPhi));
        cases.push((p, Sector::UnnaturalH0));
    }
    for (p, sector) in cases {
        let analytic = |n: u32| match sector {
            Sector::Natural(j) => natural_energy(&p, n, j, opts.mutation),
            _ => spectrum::energy(&p, sector, n, Branch::Plus).map(|l| l.value),
        };
        let name = format!("oracle {} {}", sector_label(sector), params_label(&p));
        let (passed, detail) = match compare(&p, sector, opts.n_max, opts.grid_size, tol, analytic) {
            Ok(r) => (r.passed, comparison_summary(&r)),
            Err(e) => (false, e.to_string()),
        };
        out.push(Check { name, passed, detail });
    }
}

pub fn run(opts: &VerifyOptions) -> VerifyReport {
    let mut checks = Vec::new();
    for part in Part::ALL {
        if !opts.parts.contains(&part) {
            continue;
        }
        match part {
            Part::Algebra => algebra_checks(&mut checks),
            Part::Commutators => commutator_checks(&mut checks),
            Part::Closure => closure_checks(&mut checks, opts),
            Part::Oracle => oracle_checks(&mut checks, opts),
        }
    }
    VerifyReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_only_passes() {
        let report = run(&VerifyOptions { parts: vec![Part::Algebra], ..VerifyOptions::default() });
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks.len(), 2);
        assert!(report.to_string().starts_with("PASS algebra: 64 triples"));
    }

    #[test]
    fn mutation_breaks_closure_for_nonzero_j() {
        let opts =
            VerifyOptions { parts: vec![Part::Closure], mutation: Some(Mutation::JjTerm), ..VerifyOptions::default() };
        let report = run(&opts);
        assert!(!report.passed());
        assert!(report.failures().all(|c| !c.name.ends_with("J=0")));
        assert!(report.checks.iter().filter(|c| c.name.ends_with("J=0")).all(|c| c.passed));
    }
}
