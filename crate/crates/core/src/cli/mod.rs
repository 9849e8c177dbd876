//! Command-line front end. Exit codes: 0 success, 2 configuration error,
//! 3 computation error or failed verification.

mod commands;
mod config;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use commands::{oracle_checks, run, Outcome};
pub use config::{read_config_file, BranchName, CommandName, FamilyName, Keys, NormalizationName, RunConfig};

use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_COMPUTE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "kitaev", version, about = "Non-Hermitian Kitaev chain with imbalanced pairing")]
struct Cli {
    /// TOML file of keys; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Closed-form band energies on the momentum grid (mu = 0).
    Spectrum(Keys),
    /// Block-resolved ground state and its energy (mu = 0).
    GroundState(Keys),
    /// Fidelity under the oscillating drive with phase offset zeta.
    FixedLineDrive(Keys),
    /// Quench fidelity over a time x parameter grid.
    QuenchScan(Keys),
    /// Resonant zero modes of the impurity ladder.
    ZeroModes(Keys),
    /// Half-filled ladder energy against the elliptic closed form.
    LadderEnergy(Keys),
    /// GHZ identities of the spin picture.
    SpinCheck(Keys),
    /// Added non-Hermitian term on the x-polarized Heisenberg ring.
    HeisenbergCheck(Keys),
    /// Every brute-force cross-check at small sizes.
    OracleVerify(Keys),
}

impl Sub {
    fn split(self) -> (CommandName, Keys) {
        match self {
            Sub::Spectrum(k) => (CommandName::Spectrum, k),
            Sub::GroundState(k) => (CommandName::GroundState, k),
            Sub::FixedLineDrive(k) => (CommandName::FixedLineDrive, k),
            Sub::QuenchScan(k) => (CommandName::QuenchScan, k),
            Sub::ZeroModes(k) => (CommandName::ZeroModes, k),
            Sub::LadderEnergy(k) => (CommandName::LadderEnergy, k),
            Sub::SpinCheck(k) => (CommandName::SpinCheck, k),
            Sub::HeisenbergCheck(k) => (CommandName::HeisenbergCheck, k),
            Sub::OracleVerify(k) => (CommandName::OracleVerify, k),
        }
    }
}

/// Parses arguments (program name first) and an optional config file.
pub fn parse_config<I, T>(args: I) -> std::result::Result<RunConfig, ParseFailure>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(ParseFailure::Clap)?;
    let (name, flags) = cli.command.split();
    let keys = match &cli.config {
        Some(path) => flags.over(&read_config_file(path).map_err(ParseFailure::Config)?),
        None => flags,
    };
    RunConfig::resolve(name, &keys).map_err(ParseFailure::Config)
}

#[derive(Debug)]
pub enum ParseFailure {
    /// Usage errors, and also `--help` / `--version` requests.
    Clap(clap::Error),
    Config(Error),
}

/// Full CLI entry point returning the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match parse_config(args) {
        Ok(c) => c,
        Err(ParseFailure::Clap(e)) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
        Err(ParseFailure::Config(e)) => {
            eprintln!("error: {e}");
            return EXIT_CONFIG;
        }
    };
    match run(&cfg) {
        Ok(out) => {
            println!("{}", out.summary);
            for f in &out.files {
                println!("wrote {}", f.display());
            }
            if out.failed {
                eprintln!("error: {} reported failing checks", cfg.command.as_str());
                EXIT_COMPUTE
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_COMPUTE
        }
    }
}
