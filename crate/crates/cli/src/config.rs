//! Run settings. Precedence is flags, then the `key = value` config file,
//! then built-in defaults.

use std::path::Path;
use std::str::FromStr;

use clap::ValueEnum;
use dkp_core::{Branch, ModelParams, Sector};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SectorChoice {
    Natural,
    Phi,
    H0,
}

impl SectorChoice {
    pub fn sector(self, j: u32) -> Sector {
        match self {
            SectorChoice::Natural => Sector::Natural(j),
            SectorChoice::Phi => Sector::UnnaturalPhi,
            SectorChoice::H0 => Sector::UnnaturalH0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchChoice {
    Plus,
    Minus,
    Both,
}

impl BranchChoice {
    pub fn branches(self) -> &'static [Branch] {
        match self {
            BranchChoice::Plus => &[Branch::Plus],
            BranchChoice::Minus => &[Branch::Minus],
            BranchChoice::Both => &[Branch::Plus, Branch::Minus],
        }
    }
}

fn parse_enum<T: ValueEnum>(s: &str) -> std::result::Result<T, String> {
    T::from_str(s, true)
}

/// Every setting as optional, one layer of the precedence stack.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub m: Option<f64>,
    pub alpha: Option<f64>,
    pub lambda0: Option<f64>,
    pub lambda_r: Option<f64>,
    pub j: Option<u32>,
    pub n_max: Option<u32>,
    pub sector: Option<SectorChoice>,
    pub branch: Option<BranchChoice>,
    pub grid: Option<usize>,
}

fn parse_value<T: FromStr>(line: usize, key: &str, value: &str) -> Result<T> {
    value.parse().map_err(|_| CliError::Config { line, message: format!("bad value {value:?} for {key}") })
}

impl Overrides {
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = Overrides::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| CliError::Config { line, message: format!("expected key = value, got {content:?}") })?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "m" => out.m = Some(parse_value(line, key, value)?),
                "alpha" => out.alpha = Some(parse_value(line, key, value)?),
                "lambda0" => out.lambda0 = Some(parse_value(line, key, value)?),
                "lambdaR" | "lambda_r" => out.lambda_r = Some(parse_value(line, key, value)?),
                "J" | "j" => out.j = Some(parse_value(line, key, value)?),
                "n-max" | "n_max" => out.n_max = Some(parse_value(line, key, value)?),
                "grid" => out.grid = Some(parse_value(line, key, value)?),
                "sector" => out.sector = Some(parse_enum(value).map_err(|message| CliError::Config { line, message })?),
                "branch" => out.branch = Some(parse_enum(value).map_err(|message| CliError::Config { line, message })?),
                other => return Err(CliError::Config { line, message: format!("unknown key {other:?}") }),
            }
        }
        Ok(out)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Overrides::parse(&text)
    }

    /// Fields set in `self` win over those in `lower`.
    pub fn over(&self, lower: &Overrides) -> Overrides {
        Overrides {
            m: self.m.or(lower.m),
            alpha: self.alpha.or(lower.alpha),
            lambda0: self.lambda0.or(lower.lambda0),
            lambda_r: self.lambda_r.or(lower.lambda_r),
            j: self.j.or(lower.j),
            n_max: self.n_max.or(lower.n_max),
            sector: self.sector.or(lower.sector),
            branch: self.branch.or(lower.branch),
            grid: self.grid.or(lower.grid),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub params: ModelParams,
    pub j: u32,
    pub n_max: u32,
    pub sector: SectorChoice,
    pub branch: BranchChoice,
    pub grid: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            params: ModelParams::REFERENCE,
            j: 0,
            n_max: 10,
            sector: SectorChoice::Natural,
            branch: BranchChoice::Plus,
            grid: 2048,
        }
    }
}

impl Settings {
    pub fn resolve(layer: &Overrides) -> Settings {
        let d = Settings::default();
        Settings {
            params: ModelParams {
                m: layer.m.unwrap_or(d.params.m),
                alpha: layer.alpha.unwrap_or(d.params.alpha),
                lambda0: layer.lambda0.unwrap_or(d.params.lambda0),
                lambda_r: layer.lambda_r.unwrap_or(d.params.lambda_r),
            },
            j: layer.j.unwrap_or(d.j),
            n_max: layer.n_max.unwrap_or(d.n_max),
            sector: layer.sector.unwrap_or(d.sector),
            branch: layer.branch.unwrap_or(d.branch),
            grid: layer.grid.unwrap_or(d.grid),
        }
    }

    pub fn sector(&self) -> Sector {
        self.sector.sector(self.j)
    }
}
