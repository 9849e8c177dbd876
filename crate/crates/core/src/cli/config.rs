//! Run configuration: optional TOML file, overridden key by key by flags.
//!
//! File keys are the flag names with `_` for `-`, except `J` and `N`:
//!
//! ```toml
//! J = 1.0
//! delta_a = 1.5
//! delta_b = 0.5
//! mu = 0.0
//! N = 8
//! sites = 8
//! zeta = 0.5
//! dt = 0.001
//! horizon = 2.0
//! family = "ratio"        # or "mu"
//! values = [1.0, 2.0]     # scan parameters
//! t_max = 40.0
//! steps = 400
//! threshold = 0.5
//! branch = "minus"        # or "plus"
//! normalization = "normalized"  # or "raw"
//! out_dir = "out"
//! ```

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::dynamics::{Normalization, QuenchFamily, TimeGrid};
use crate::error::{Error, Result};
use crate::majorana::Branch;
use crate::model::ModelParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CommandName {
    Spectrum,
    GroundState,
    FixedLineDrive,
    QuenchScan,
    ZeroModes,
    LadderEnergy,
    SpinCheck,
    HeisenbergCheck,
    OracleVerify,
}

impl CommandName {
    pub fn as_str(self) -> &'static str {
        match self {
            CommandName::Spectrum => "spectrum",
            CommandName::GroundState => "ground-state",
            CommandName::FixedLineDrive => "fixed-line-drive",
            CommandName::QuenchScan => "quench-scan",
            CommandName::ZeroModes => "zero-modes",
            CommandName::LadderEnergy => "ladder-energy",
            CommandName::SpinCheck => "spin-check",
            CommandName::HeisenbergCheck => "heisenberg-check",
            CommandName::OracleVerify => "oracle-verify",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum FamilyName {
    Mu,
    Ratio,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum BranchName {
    Plus,
    Minus,
}

impl From<BranchName> for Branch {
    fn from(b: BranchName) -> Self {
        match b {
            BranchName::Plus => Branch::Plus,
            BranchName::Minus => Branch::Minus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum NormalizationName {
    Normalized,
    Raw,
}

impl From<NormalizationName> for Normalization {
    fn from(n: NormalizationName) -> Self {
        match n {
            NormalizationName::Normalized => Normalization::Normalized,
            NormalizationName::Raw => Normalization::Raw,
        }
    }
}

/// Every configurable key. Unset keys fall back to the file, then to defaults.
#[derive(Clone, Debug, Default, PartialEq, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Keys {
    #[arg(long = "J", visible_alias = "j", allow_negative_numbers = true)]
    #[serde(rename = "J", alias = "j")]
    pub j: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub delta_a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub delta_b: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub mu: Option<f64>,
    #[arg(long = "N", visible_alias = "n")]
    #[serde(rename = "N", alias = "n")]
    pub n: Option<usize>,
    /// Spin-chain length 2N for the spin checks.
    #[arg(long)]
    pub sites: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    pub zeta: Option<f64>,
    #[arg(long)]
    pub dt: Option<f64>,
    #[arg(long)]
    pub horizon: Option<f64>,
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    /// Scan parameters, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub values: Option<Vec<f64>>,
    #[arg(long)]
    pub t_max: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub threshold: Option<f64>,
    #[arg(long, value_enum)]
    pub branch: Option<BranchName>,
    #[arg(long, value_enum)]
    pub normalization: Option<NormalizationName>,
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

macro_rules! overlay {
    ($base:expr, $top:expr, $($f:ident),*) => {
        Keys { $($f: $top.$f.clone().or($base.$f.clone())),* }
    };
}

impl Keys {
    /// `self` with every unset key taken from `file`.
    pub fn over(&self, file: &Keys) -> Keys {
        overlay!(file, self, j, delta_a, delta_b, mu, n, sites, zeta, dt, horizon, family, values,
            t_max, steps, threshold, branch, normalization, out_dir)
    }
}

pub fn read_config_file(path: &Path) -> Result<Keys> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| {
        let msg = e.message().replace('\n', " ");
        Error::Config(format!("{}: {msg}", path.display()))
    })
}

/// Fully resolved and validated configuration for one command.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: CommandName,
    #[serde(rename = "J")]
    pub j: f64,
    pub delta_a: f64,
    pub delta_b: f64,
    pub mu: f64,
    #[serde(rename = "N")]
    pub n: usize,
    pub sites: usize,
    pub zeta: f64,
    pub dt: f64,
    pub horizon: f64,
    pub family: FamilyName,
    pub values: Vec<f64>,
    pub t_max: f64,
    pub steps: usize,
    pub threshold: f64,
    pub branch: BranchName,
    pub normalization: NormalizationName,
    pub out_dir: PathBuf,
}

fn config_err(e: Error) -> Error {
    match e {
        Error::Config(_) => e,
        Error::InvalidParameter(m) => Error::Config(m),
        other => Error::Config(other.to_string()),
    }
}

impl RunConfig {
    pub fn resolve(command: CommandName, k: &Keys) -> Result<Self> {
        let cfg = Self {
            command,
            j: k.j.unwrap_or(1.0),
            delta_a: k.delta_a.unwrap_or(1.0),
            delta_b: k.delta_b.unwrap_or(1.0),
            mu: k.mu.unwrap_or(0.0),
            n: k.n.unwrap_or(8),
            sites: k.sites.unwrap_or(8),
            zeta: k.zeta.unwrap_or(0.0),
            dt: k.dt.unwrap_or(1e-3),
            horizon: k.horizon.unwrap_or(2.0),
            family: k.family.unwrap_or(FamilyName::Mu),
            values: k.values.clone().unwrap_or_else(|| vec![0.0, 0.001, 0.01]),
            t_max: k.t_max.unwrap_or(20.0),
            steps: k.steps.unwrap_or(400),
            threshold: k.threshold.unwrap_or(crate::dynamics::DEFAULT_DROP_THRESHOLD),
            branch: k.branch.unwrap_or(BranchName::Minus),
            normalization: k.normalization.unwrap_or(NormalizationName::Normalized),
            out_dir: k.out_dir.clone().unwrap_or_else(|| PathBuf::from("out")),
        };
        cfg.validate().map_err(config_err)?;
        Ok(cfg)
    }

    pub fn params(&self) -> Result<ModelParams> {
        ModelParams::new(self.j, self.delta_a, self.delta_b, self.mu, self.n)
    }

    fn require_zero_mu(&self) -> Result<()> {
        if self.mu != 0.0 {
            return Err(Error::Config(format!(
                "{} needs mu = 0 (got {})",
                self.command.as_str(),
                self.mu
            )));
        }
        Ok(())
    }

    fn validate(&self) -> Result<()> {
        use CommandName::*;
        self.params()?;
        match self.command {
            Spectrum | GroundState | ZeroModes | LadderEnergy | FixedLineDrive => self.require_zero_mu()?,
            QuenchScan => {
                self.quench_family()?;
                self.time_grid()?;
                if self.values.is_empty() {
                    return Err(Error::Config("values must list at least one scan parameter".into()));
                }
                if !(self.threshold > 0.0 && self.threshold < 1.0) {
                    return Err(Error::Config(format!(
                        "threshold must lie in (0, 1) (got {})",
                        self.threshold
                    )));
                }
            }
            SpinCheck | HeisenbergCheck => {
                if self.sites < 2 || self.sites % 2 != 0 || self.sites > crate::spin::MAX_SPIN_SITES {
                    return Err(Error::Config(format!(
                        "sites must be even and between 2 and {} (got {})",
                        crate::spin::MAX_SPIN_SITES,
                        self.sites
                    )));
                }
            }
            OracleVerify => {}
        }
        if self.command == FixedLineDrive && !(self.dt > 0.0 && self.horizon >= 0.0) {
            return Err(Error::Config(format!(
                "dt must be positive and horizon non-negative (got {}, {})",
                self.dt, self.horizon
            )));
        }
        Ok(())
    }

    pub fn quench_family(&self) -> Result<QuenchFamily> {
        let p = self.params()?;
        Ok(match self.family {
            FamilyName::Mu => QuenchFamily::Mu {
                j: p.j,
                delta_a: p.delta_a,
                delta_b: p.delta_b,
                n: p.n,
            },
            FamilyName::Ratio => QuenchFamily::Ratio {
                j: p.j,
                sum: p.pair_sum(),
                mu: p.mu,
                n: p.n,
            },
        })
    }

    pub fn time_grid(&self) -> Result<TimeGrid> {
        TimeGrid::new(self.t_max, self.steps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let file: Keys = toml::from_str("N = 8\nJ = 2.0\nvalues = [0.5, 1.0]").unwrap();
        let flags = Keys {
            n: Some(16),
            ..Keys::default()
        };
        let k = flags.over(&file);
        assert_eq!(k.n, Some(16));
        assert_eq!(k.j, Some(2.0));
        assert_eq!(k.values, Some(vec![0.5, 1.0]));
    }

    #[test]
    fn unknown_key_rejected() {
        assert!(toml::from_str::<Keys>("gamma = 1.0").is_err());
        assert!(toml::from_str::<Keys>("N = \"eight\"").is_err());
    }

    #[test]
    fn odd_n_rejected() {
        let k = Keys {
            n: Some(7),
            ..Keys::default()
        };
        let e = RunConfig::resolve(CommandName::Spectrum, &k).unwrap_err();
        assert!(matches!(&e, Error::Config(m) if m.contains("N must be even")), "{e}");
    }

    #[test]
    fn mu_guard_is_per_command() {
        let k = Keys {
            mu: Some(0.1),
            ..Keys::default()
        };
        assert!(RunConfig::resolve(CommandName::GroundState, &k).is_err());
        assert!(RunConfig::resolve(CommandName::QuenchScan, &k).is_ok());
    }
}
