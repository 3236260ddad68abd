//! Argument parsing and subcommand dispatch.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use dkp_core::oracle::compare;
use dkp_core::spectrum;
use dkp_core::wavefunction::solution;
use dkp_core::Branch;

use crate::config::{BranchChoice, Overrides, SectorChoice, Settings};
use crate::error::{CliError, Result};
use crate::export;
use crate::figures::{FigureId, FigureSpec};
use crate::verify::{self, Mutation, Part, VerifyOptions};

#[derive(Debug, Parser)]
#[command(name = "dkp", version, about = "Spin-1 DKP oscillator with a minimal momentum uncertainty")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    /// `key = value` file; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub m: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda0: Option<f64>,
    #[arg(long = "lambdaR", allow_negative_numbers = true)]
    pub lambda_r: Option<f64>,
    #[arg(long = "J")]
    pub j: Option<u32>,
    #[arg(long)]
    pub n_max: Option<u32>,
    #[arg(long, value_enum)]
    pub sector: Option<SectorChoice>,
    #[arg(long, value_enum)]
    pub branch: Option<BranchChoice>,
    /// Grid size for eigenfunctions and the numerical oracle.
    #[arg(long)]
    pub grid: Option<usize>,
}

impl ParamArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            m: self.m,
            alpha: self.alpha,
            lambda0: self.lambda0,
            lambda_r: self.lambda_r,
            j: self.j,
            n_max: self.n_max,
            sector: self.sector,
            branch: self.branch,
            grid: self.grid,
        }
    }

    pub fn settings(&self) -> Result<Settings> {
        let config = match &self.config {
            Some(path) => Overrides::load(path)?,
            None => Overrides::default(),
        };
        Ok(Settings::resolve(&self.overrides().over(&config)))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy levels as CSV (`n,J,parity,branch,E`).
    Spectrum(ParamArgs),
    /// Natural-parity level spacings with the `2√α` asymptote.
    Spacing(ParamArgs),
    /// Sampled eigenfunction components as CSV.
    Wavefunction {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 0)]
        n: u32,
    },
    /// Closed-form levels against the numerical eigensolver.
    Compare {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 1e-5)]
        tol: f64,
    },
    /// Runs the verification suite; exit 1 on any failure.
    Verify {
        #[arg(long, value_enum, value_delimiter = ',')]
        only: Vec<Part>,
        /// Corrupts the analytic side to prove the suite can fail.
        #[arg(long, value_enum)]
        mutate: Option<Mutation>,
        #[arg(long, default_value_t = 8192)]
        grid: usize,
        #[arg(long, default_value_t = 4)]
        n_max: u32,
    },
    /// Writes `<fig>.csv` and `<fig>.svg` for each figure.
    Figures {
        #[arg(long, default_value = "figures")]
        out_dir: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',')]
        only: Vec<FigureId>,
        /// Replaces the swept values (λ₀ for fig1, α otherwise).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        values: Vec<f64>,
        #[arg(long)]
        n_max: Option<u32>,
    },
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Spectrum(args) => {
            let s = args.settings()?;
            let text = export::spectrum_csv(&s).map_err(|e| e.at(&s.params))?;
            emit(out, &text)
        }
        Command::Spacing(args) => {
            let s = args.settings()?;
            let text = export::spacing_csv(&s).map_err(|e| e.at(&s.params))?;
            emit(out, &text)
        }
        Command::Wavefunction { params, n } => {
            let s = params.settings()?;
            let sol = solution(&s.params, s.sector(), *n, s.grid).map_err(|e| CliError::from(e).at(&s.params))?;
            emit(out, &export::wavefunction_csv(&sol)?)
        }
        Command::Compare { params, tol } => {
            let s = params.settings()?;
            let sector = s.sector();
            let report = compare(&s.params, sector, s.n_max, s.grid, *tol, |n| {
                spectrum::energy(&s.params, sector, n, Branch::Plus).map(|l| l.value)
            })
            .map_err(|e| CliError::from(e).at(&s.params))?;
            emit(out, &export::comparison_csv(&report)?)?;
            eprintln!("{}", export::comparison_summary(&report));
            if report.passed {
                Ok(())
            } else {
                Err(CliError::Verification(1))
            }
        }
        Command::Verify { only, mutate, grid, n_max } => {
            let opts = VerifyOptions {
                parts: if only.is_empty() { Part::ALL.to_vec() } else { only.clone() },
                mutation: *mutate,
                grid_size: *grid,
                n_max: *n_max,
            };
            let report = verify::run(&opts);
            emit(out, &report.to_string())?;
            match report.failures().count() {
                0 => Ok(()),
                k => Err(CliError::Verification(k)),
            }
        }
        Command::Figures { out_dir, only, values, n_max } => {
            let ids = if only.is_empty() { FigureId::ALL.to_vec() } else { only.clone() };
            if !values.is_empty() && ids.len() != 1 {
                return Err(CliError::Usage("--values needs exactly one figure in --only".into()));
            }
            for id in ids {
                let mut spec = FigureSpec::default_for(id);
                if !values.is_empty() {
                    spec.sweep = values.clone();
                }
                if let Some(n) = n_max {
                    spec.n_max = *n;
                }
                let (csv_path, svg_path) = write_figure(&spec, out_dir)?;
                emit(out, &format!("{}\n{}\n", csv_path.display(), svg_path.display()))?;
            }
            Ok(())
        }
    }
}

fn write_figure(spec: &FigureSpec, out_dir: &Path) -> Result<(PathBuf, PathBuf)> {
    spec.write(out_dir).map_err(|e| e.at(&spec.base))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<()>, String) {
        let cli = Cli::try_parse_from(std::iter::once("dkp").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let res = run(&cli, &mut buf);
        (res, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn spectrum_defaults() {
        let (res, out) = run_args(&["spectrum", "--n-max", "2"]);
        res.unwrap();
        assert_eq!(out.lines().count(), 4);
    }

    #[test]
    fn no_real_spectrum_exits_three() {
        let (res, _) = run_args(&["spectrum", "--alpha", "0", "--lambda0", "1.5", "--lambdaR", "1"]);
        let err = res.unwrap_err();
        assert_eq!(err.exit_code(), 3, "{err}");
        assert!(err.to_string().contains("lambda0=1.5"));
        let (res, _) = run_args(&["spacing", "--alpha", "0", "--lambda0", "0", "--lambdaR", "-1"]);
        assert_eq!(res.unwrap_err().exit_code(), 2);
    }

    #[test]
    fn values_need_single_figure() {
        let dir = std::env::temp_dir().join("dkp-cli-unit-values");
        let (res, _) = run_args(&["figures", "--out-dir", dir.to_str().unwrap(), "--values", "0.1"]);
        assert_eq!(res.unwrap_err().exit_code(), 2);
    }
}
