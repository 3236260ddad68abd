//! CSV tables for spectra, spacings, eigenfunctions and oracle reports.

use dkp_core::oracle::ComparisonReport;
use dkp_core::spectrum::{self, energy};
use dkp_core::wavefunction::RadialSolution;
use dkp_core::{Branch, Sector};

use crate::config::Settings;
use crate::error::Result;
use crate::format::{fmt_num, to_csv};

fn branch_label(b: Branch) -> &'static str {
    match b {
        Branch::Plus => "plus",
        Branch::Minus => "minus",
    }
}

/// `n,J,parity,branch,E`, n-major.
pub fn spectrum_csv(settings: &Settings) -> Result<String> {
    let sector = settings.sector();
    sector.check_regime(&settings.params)?;
    let mut rows = Vec::new();
    for n in 0..=settings.n_max {
        for &b in settings.branch.branches() {
            let level = energy(&settings.params, sector, n, b)?;
            rows.push(vec![
                n.to_string(),
                sector.j().to_string(),
                sector.label().to_string(),
                branch_label(b).to_string(),
                fmt_num(level.value),
            ]);
        }
    }
    to_csv(&["n", "J", "parity", "branch", "E"], &rows)
}

/// `n,J,alpha,dE,asymptote` for natural parity, `asymptote = 2√α`.
pub fn spacing_csv(settings: &Settings) -> Result<String> {
    let p = &settings.params;
    let mut rows = Vec::new();
    for n in 0..=settings.n_max {
        let gap = spectrum::level_spacing(p, n, settings.j)?;
        rows.push(vec![
            n.to_string(),
            settings.j.to_string(),
            fmt_num(p.alpha),
            fmt_num(gap),
            fmt_num(2.0 * p.alpha.sqrt()),
        ]);
    }
    to_csv(&["n", "J", "alpha", "dE", "asymptote"], &rows)
}

/// `rho,r,<primary>,<secondary...>` on the solution grid.
pub fn wavefunction_csv(sol: &RadialSolution) -> Result<String> {
    let mut header = vec!["rho", "r", sol.primary_name];
    header.extend(sol.secondary.keys().copied());
    let r = sol.r_grid();
    let rows: Vec<Vec<String>> = (0..sol.rho_grid.len())
        .map(|i| {
            let mut row = vec![fmt_num(sol.rho_grid[i]), fmt_num(r[i]), fmt_num(sol.primary[i])];
            row.extend(sol.secondary.values().map(|col| fmt_num(col[i])));
            row
        })
        .collect();
    to_csv(&header, &rows)
}

/// `n,E_analytic,E_numeric,rel_error`.
pub fn comparison_csv(report: &ComparisonReport) -> Result<String> {
    let rows: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| vec![r.n.to_string(), fmt_num(r.analytic), fmt_num(r.numeric), fmt_num(r.rel_error)])
        .collect();
    to_csv(&["n", "E_analytic", "E_numeric", "rel_error"], &rows)
}

/// One-line summary of a comparison.
pub fn comparison_summary(report: &ComparisonReport) -> String {
    let worst = report.worst.map_or("none".to_string(), |w| format!("n={} rel_error={}", w.n, fmt_num(w.rel_error)));
    let verdict = if report.passed { "pass" } else { "fail" };
    format!(
        "{} {} grid={} tol={} worst {}",
        verdict,
        report.sector.label(),
        report.grid_size,
        fmt_num(report.tolerance),
        worst
    )
}

pub fn sector_label(sector: Sector) -> String {
    match sector {
        Sector::Natural(j) => format!("natural J={j}"),
        _ => sector.label().to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{BranchChoice, SectorChoice};
    use dkp_core::ModelParams;

    #[test]
    fn spectrum_rows_are_n_major() {
        let s = Settings { n_max: 1, branch: BranchChoice::Both, ..Settings::default() };
        let text = spectrum_csv(&s).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "n,J,parity,branch,E");
        assert!(lines[1].starts_with("0,0,natural,plus,2.2405"));
        assert!(lines[2].starts_with("0,0,natural,minus,-2.2405"));
        assert!(lines[3].starts_with("1,0,natural,plus,"));
    }

    #[test]
    fn unnatural_rejects_nonzero_lambda0() {
        let s = Settings { sector: SectorChoice::Phi, ..Settings::default() };
        let err = spectrum_csv(&s).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn wavefunction_columns() {
        let p = ModelParams::REFERENCE.with_lambda0(0.0);
        let sol = dkp_core::wavefunction::unnatural_solution(&p, 1, Sector::UnnaturalH0, 16).unwrap();
        let text = wavefunction_csv(&sol).unwrap();
        assert_eq!(text.lines().next().unwrap(), "rho,r,H0,F-1,G-1");
        assert_eq!(text.lines().count(), 17);
    }
}
