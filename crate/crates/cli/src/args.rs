use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Inclusive grid `start:stop:count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Range {
    pub fn single(v: f64) -> Self {
        Range {
            start: v,
            stop: v,
            count: 1,
        }
    }

    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.stop
                } else {
                    self.start + step * i as f64
                }
            })
            .collect()
    }

    pub fn describe(&self) -> String {
        format!("{}:{}:{}", self.start, self.stop, self.count)
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, n] = parts.as_slice() else {
            return Err(format!("expected start:stop:count, got `{s}`"));
        };
        let num = |field: &str, v: &str| {
            v.trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| format!("{field} `{v}` is not a finite number"))
        };
        let start = num("start", a)?;
        let stop = num("stop", b)?;
        let count: usize = n.trim().parse().map_err(|_| format!("count `{n}` is not an integer"))?;
        if count < 2 {
            return Err(format!("count must be at least 2, got {count}"));
        }
        Ok(Range { start, stop, count })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhaseArg {
    Optimal,
    Fixed(f64),
}

impl FromStr for PhaseArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "optimal" {
            return Ok(PhaseArg::Optimal);
        }
        match s.strip_prefix("fixed:") {
            Some(v) => v
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .map(PhaseArg::Fixed)
                .ok_or_else(|| format!("phase `{v}` is not a finite number of radians")),
            None => Err(format!("expected `optimal` or `fixed:<radians>`, got `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PhotonTable {
    /// Band-integrated correlation against ψ₀.
    Band,
    /// Photon-number spectral density against Ω.
    Density,
}

#[derive(Debug, Parser)]
#[command(
    name = "kerrsq",
    version,
    about = "Squeezing spectra, bandwidth and photon correlations of self-modulated pulses"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Quadrature fluctuation spectra S_X, S_Y over psi0 and omega·tau_r.
    Quadspec(QuadspecArgs),
    /// Width of the sub-shot-noise band against psi0.
    Bandwidth(BandwidthArgs),
    /// Photon spectral density or band-integrated photon correlation.
    Photon(PhotonArgs),
    /// Run the oracle suite and print the tolerance ledger.
    Validate(ValidateArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PsiArgs {
    /// Single peak nonlinear phase.
    #[arg(long, conflicts_with = "psi0_range", allow_negative_numbers = true)]
    pub psi0: Option<f64>,
    /// Grid of peak phases, start:stop:count.
    #[arg(long, allow_hyphen_values = true)]
    pub psi0_range: Option<Range>,
}

impl PsiArgs {
    pub fn range(&self, default: Range) -> Range {
        match (self.psi0, self.psi0_range) {
            (Some(v), _) => Range::single(v),
            (None, Some(r)) => r,
            (None, None) => default,
        }
    }
}

#[derive(Debug, Args)]
pub struct MediumArgs {
    /// Ratio tau_p / tau_r.
    #[arg(long, default_value_t = 10.0)]
    pub nu: f64,
    /// Nonlinear coupling; n̄₀ follows from psi0 = 2·gamma·n̄₀.
    #[arg(long, default_value_t = 1e-3)]
    pub gamma: f64,
}

#[derive(Debug, Args)]
pub struct QuadspecArgs {
    #[command(flatten)]
    pub psi: PsiArgs,
    /// Frequency omega0·tau_r the optimal phase is tuned to.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub omega0: f64,
    /// Frequency grid in units of 1/tau_r.
    #[arg(long, default_value = "0:4:401", allow_hyphen_values = true)]
    pub omega_range: Range,
    /// Evaluation time in units of tau_p.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub t: f64,
    /// `optimal` or `fixed:<radians>`.
    #[arg(long, default_value = "optimal")]
    pub phase: PhaseArg,
    #[command(flatten)]
    pub medium: MediumArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BandwidthArgs {
    #[command(flatten)]
    pub psi: PsiArgs,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub t: f64,
    #[command(flatten)]
    pub medium: MediumArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PhotonArgs {
    #[arg(long, value_enum, default_value = "band")]
    pub table: PhotonTable,
    #[command(flatten)]
    pub psi: PsiArgs,
    /// Band centre omega·tau_p.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub band_center: f64,
    /// Band width in units of 1/tau_p.
    #[arg(long, default_value_t = 0.75)]
    pub band_width: f64,
    /// Frequency grid in units of 1/tau_p for the density table.
    #[arg(long, default_value = "-3:3:121", allow_hyphen_values = true)]
    pub omega_range: Range,
    #[command(flatten)]
    pub medium: MediumArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// Multiplies every tolerance.
    #[arg(long, default_value_t = 1.0)]
    pub tol_scale: f64,
    /// Run a single case by id.
    #[arg(long)]
    pub case: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        let r: Range = "0:4:5".parse().unwrap();
        assert_eq!(r.points(), vec![0.0, 1.0, 2.0, 3.0, 4.0]);
        let r: Range = "-1:1:3".parse().unwrap();
        assert_eq!(r.points(), vec![-1.0, 0.0, 1.0]);
        assert!("0:1:1".parse::<Range>().is_err());
        assert!("0:1".parse::<Range>().is_err());
        assert!("a:1:3".parse::<Range>().is_err());
        assert!("0:inf:3".parse::<Range>().is_err());
    }

    #[test]
    fn range_endpoint_exact() {
        let r: Range = "0:0.3:4".parse().unwrap();
        assert_eq!(*r.points().last().unwrap(), 0.3);
    }

    #[test]
    fn phase_parsing() {
        assert_eq!("optimal".parse::<PhaseArg>().unwrap(), PhaseArg::Optimal);
        assert_eq!("fixed:-0.5".parse::<PhaseArg>().unwrap(), PhaseArg::Fixed(-0.5));
        assert!("fixed:".parse::<PhaseArg>().is_err());
        assert!("best".parse::<PhaseArg>().is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
