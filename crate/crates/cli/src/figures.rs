//! The four figure data sets and their SVG renderings.

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use dkp_core::spectrum::{self, energy_natural_any};
use dkp_core::{Branch, ModelParams, Sector};

use crate::error::{CliError, Result};
use crate::format::{fmt_num, to_csv};
use crate::svg;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum FigureId {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
}

impl FigureId {
    pub const ALL: [FigureId; 4] = [FigureId::Fig1, FigureId::Fig2, FigureId::Fig3, FigureId::Fig4];

    pub fn name(self) -> &'static str {
        match self {
            FigureId::Fig1 => "fig1",
            FigureId::Fig2 => "fig2",
            FigureId::Fig3 => "fig3",
            FigureId::Fig4 => "fig4",
        }
    }
}

/// What a figure sweeps and over which levels.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureSpec {
    pub id: FigureId,
    /// Fixed parameters; the swept one is overwritten per series.
    pub base: ModelParams,
    pub j: u32,
    /// `λ₀` values for Fig. 1, `α` values otherwise.
    pub sweep: Vec<f64>,
    pub n_max: u32,
}

impl FigureSpec {
    pub fn default_for(id: FigureId) -> FigureSpec {
        let reference = ModelParams::REFERENCE;
        match id {
            FigureId::Fig1 => {
                FigureSpec { id, base: reference.with_alpha(0.0), j: 0, sweep: vec![0.0, 0.5, 0.8, 1.0], n_max: 20 }
            }
            FigureId::Fig2 => FigureSpec { id, base: reference, j: 0, sweep: vec![0.0, 0.05, 0.1, 0.2], n_max: 20 },
            FigureId::Fig3 => FigureSpec { id, base: reference, j: 0, sweep: vec![0.0, 0.05, 0.1, 0.2], n_max: 200 },
            FigureId::Fig4 => {
                FigureSpec { id, base: reference.with_lambda0(0.0), j: 0, sweep: vec![0.05, 0.1], n_max: 20 }
            }
        }
    }

    pub fn title(&self) -> &'static str {
        match self.id {
            FigureId::Fig1 => "Undeformed energy levels for several lambda0",
            FigureId::Fig2 => "Energy levels for several deformation parameters",
            FigureId::Fig3 => "Level spacing versus n",
            FigureId::Fig4 => "Unnatural-parity energies, E_phi and E_H0",
        }
    }

    /// Long-format CSV; first three columns are `series`, x, y.
    pub fn csv(&self) -> Result<String> {
        let mut rows: Vec<Vec<String>> = Vec::new();
        let header: &[&str] = match self.id {
            FigureId::Fig1 => {
                for &l0 in &self.sweep {
                    let p = self.base.with_lambda0(l0);
                    for n in 0..=self.n_max {
                        let e = energy_natural_any(&p, n, self.j, Branch::Plus)?.value;
                        rows.push(vec![format!("lambda0={}", fmt_num(l0)), n.to_string(), fmt_num(e), fmt_num(l0)]);
                    }
                }
                &["series", "n", "E", "lambda0"]
            }
            FigureId::Fig2 => {
                for &alpha in &self.sweep {
                    let p = self.base.with_alpha(alpha);
                    for n in 0..=self.n_max {
                        let e = energy_natural_any(&p, n, self.j, Branch::Plus)?.value;
                        rows.push(vec![format!("alpha={}", fmt_num(alpha)), n.to_string(), fmt_num(e), fmt_num(alpha)]);
                    }
                }
                &["series", "n", "E", "alpha"]
            }
            FigureId::Fig3 => {
                for &alpha in &self.sweep {
                    let p = self.base.with_alpha(alpha);
                    let asymptote = fmt_num(2.0 * alpha.sqrt());
                    for n in 0..=self.n_max {
                        let gap = spectrum::level_spacing(&p, n, self.j)?;
                        rows.push(vec![
                            format!("alpha={}", fmt_num(alpha)),
                            n.to_string(),
                            fmt_num(gap),
                            asymptote.clone(),
                            fmt_num(alpha),
                        ]);
                    }
                }
                &["series", "n", "dE", "asymptote", "alpha"]
            }
            FigureId::Fig4 => {
                for &alpha in &self.sweep {
                    let p = self.base.with_alpha(alpha);
                    for (label, sector) in [("E_phi", Sector::UnnaturalPhi), ("E_H0", Sector::UnnaturalH0)] {
                        for n in 0..=self.n_max {
                            let e = spectrum::energy(&p, sector, n, Branch::Plus)?.value;
                            rows.push(vec![
                                format!("{label} alpha={}", fmt_num(alpha)),
                                n.to_string(),
                                fmt_num(e),
                                fmt_num(alpha),
                            ]);
                        }
                    }
                }
                &["series", "n", "E", "alpha"]
            }
        };
        to_csv(header, &rows)
    }

    /// Writes `<fig>.csv` and `<fig>.svg` into `out_dir`.
    pub fn write(&self, out_dir: &Path) -> Result<(PathBuf, PathBuf)> {
        std::fs::create_dir_all(out_dir).map_err(|e| CliError::io(out_dir, e))?;
        let csv_text = self.csv()?;
        let svg_text = svg::render_csv(self.title(), &csv_text)?;
        let csv_path = out_dir.join(format!("{}.csv", self.id.name()));
        let svg_path = out_dir.join(format!("{}.svg", self.id.name()));
        std::fs::write(&csv_path, csv_text).map_err(|e| CliError::io(&csv_path, e))?;
        std::fs::write(&svg_path, svg_text).map_err(|e| CliError::io(&svg_path, e))?;
        Ok((csv_path, svg_path))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn column(csv: &str, series: &str, col: usize) -> Vec<f64> {
        csv.lines()
            .skip(1)
            .filter(|l| l.split(',').next() == Some(series))
            .map(|l| l.split(',').nth(col).unwrap().parse().unwrap())
            .collect()
    }

    #[test]
    fn fig1_equal_couplings_are_flat() {
        let csv = FigureSpec::default_for(FigureId::Fig1).csv().unwrap();
        let flat = column(&csv, "lambda0=1", 2);
        assert_eq!(flat.len(), 21);
        assert!(flat.iter().all(|e| (e - 2f64.sqrt()).abs() < 1e-11));
    }

    #[test]
    fn fig4_phi_above_h0() {
        let csv = FigureSpec::default_for(FigureId::Fig4).csv().unwrap();
        for alpha in ["0.05", "0.1"] {
            let phi = column(&csv, &format!("E_phi alpha={alpha}"), 2);
            let h0 = column(&csv, &format!("E_H0 alpha={alpha}"), 2);
            assert!(phi.iter().zip(&h0).all(|(p, h)| p > h));
        }
    }

    #[test]
    fn fig3_has_asymptote_column() {
        let csv = FigureSpec::default_for(FigureId::Fig3).csv().unwrap();
        assert!(csv.starts_with("series,n,dE,asymptote,alpha\n"));
        let asym = column(&csv, "alpha=0.1", 3);
        assert!(asym.iter().all(|a| (a - 2.0 * 0.1f64.sqrt()).abs() < 1e-11));
    }
}
