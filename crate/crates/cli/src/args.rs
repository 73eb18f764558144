//! Command-line grammar.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::scenario_file::{DEFAULT_PRESSURE_HPA, DEFAULT_TEMPERATURE_C, DEFAULT_VAPOUR_DENSITY};
use crate::sweep::{Axis, Quantity};

#[derive(Debug, Parser)]
#[command(
    name = "mmwave",
    version,
    about = "Millimeter-wave link attenuation calculator"
)]
pub struct Cli {
    /// Worker threads for sweeps (defaults to one per core).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Free-space path loss.
    #[command(allow_negative_numbers = true)]
    Fspl(FsplArgs),
    /// Rain specific attenuation.
    #[command(allow_negative_numbers = true)]
    Rain(RainArgs),
    /// Fog / cloud specific attenuation.
    #[command(allow_negative_numbers = true)]
    Fog(FogArgs),
    /// Gaseous specific attenuation (oxygen and water vapour).
    #[command(allow_negative_numbers = true)]
    Gas(GasArgs),
    /// Full link budget for one scenario.
    #[command(allow_negative_numbers = true)]
    Budget(BudgetArgs),
    /// Parameter sweep written as CSV.
    #[command(allow_negative_numbers = true)]
    Sweep(SweepArgs),
    /// Classify a frequency range into window, moderate and blocked bands.
    #[command(allow_negative_numbers = true)]
    Bands(BandsArgs),
    /// Regenerate one of the stock figure data sets as CSV.
    #[command(allow_negative_numbers = true)]
    Preset(PresetArgs),
}

#[derive(Debug, Args)]
pub struct FsplArgs {
    #[arg(long)]
    pub freq_ghz: f64,
    #[arg(long)]
    pub dist_km: f64,
}

#[derive(Debug, Args)]
pub struct RainArgs {
    #[arg(long)]
    pub freq_ghz: f64,
    /// Rain rate in mm/h.
    #[arg(long)]
    pub rate: f64,
    #[arg(long, default_value_t = 0.0)]
    pub elevation_deg: f64,
    /// Polarization tilt: 0 is horizontal, 90 vertical.
    #[arg(long, default_value_t = 0.0)]
    pub tilt_deg: f64,
}

#[derive(Debug, Args)]
pub struct FogArgs {
    #[arg(long)]
    pub freq_ghz: f64,
    /// Liquid water density in g/m³.
    #[arg(long)]
    pub density: f64,
    #[arg(long, default_value_t = DEFAULT_TEMPERATURE_C)]
    pub temp_c: f64,
}

#[derive(Debug, Clone, Args)]
pub struct AtmosphereArgs {
    /// Dry-air pressure in hPa.
    #[arg(long, default_value_t = DEFAULT_PRESSURE_HPA)]
    pub pressure_hpa: f64,
    /// Air temperature in °C.
    #[arg(long = "air-temp-c", default_value_t = DEFAULT_TEMPERATURE_C)]
    pub air_temp_c: f64,
    /// Water-vapour density in g/m³.
    #[arg(long, default_value_t = DEFAULT_VAPOUR_DENSITY)]
    pub rho: f64,
}

#[derive(Debug, Args)]
pub struct GasArgs {
    #[arg(long)]
    pub freq_ghz: f64,
    #[command(flatten)]
    pub atmosphere: AtmosphereArgs,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Read the scenario from a JSON file instead of flags.
    #[arg(long, conflicts_with_all = ["freq_ghz", "dist_km"])]
    pub scenario: Option<PathBuf>,
    #[arg(long, required_unless_present = "scenario")]
    pub freq_ghz: Option<f64>,
    #[arg(long, required_unless_present = "scenario")]
    pub dist_km: Option<f64>,
    #[arg(long, default_value_t = 0.0)]
    pub rate: f64,
    /// Fog liquid water density in g/m³.
    #[arg(long, default_value_t = 0.0)]
    pub density: f64,
    /// Fog temperature in °C.
    #[arg(long, default_value_t = DEFAULT_TEMPERATURE_C)]
    pub fog_temp_c: f64,
    #[arg(long, default_value_t = 0.0)]
    pub elevation_deg: f64,
    #[arg(long, default_value_t = 0.0)]
    pub tilt_deg: f64,
    #[command(flatten)]
    pub atmosphere: AtmosphereArgs,
    #[arg(long)]
    pub no_rain: bool,
    #[arg(long)]
    pub no_fog: bool,
    #[arg(long)]
    pub no_gas: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// JSON scenario file with a "sweep" section.
    #[arg(long, conflicts_with_all = ["quantity", "range", "family"])]
    pub scenario: Option<PathBuf>,
    #[arg(long, value_enum, required_unless_present = "scenario")]
    pub quantity: Option<Quantity>,
    #[arg(long, value_enum, default_value = "frequency")]
    pub axis: Axis,
    /// Axis range as start:stop:step.
    #[arg(long, required_unless_present = "scenario")]
    pub range: Option<RangeSpec>,
    /// Comma-separated curve family values.
    #[arg(long, value_delimiter = ',', required_unless_present = "scenario")]
    pub family: Option<Vec<f64>>,
    /// Fixed frequency for distance-axis sweeps.
    #[arg(long, default_value_t = 28.0)]
    pub freq_ghz: f64,
    #[arg(long, default_value_t = 0.0)]
    pub elevation_deg: f64,
    #[arg(long, default_value_t = 0.0)]
    pub tilt_deg: f64,
    #[arg(long, default_value_t = DEFAULT_TEMPERATURE_C)]
    pub fog_temp_c: f64,
    #[command(flatten)]
    pub atmosphere: AtmosphereArgs,
    /// Output CSV path (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Gas,
    Total,
}

#[derive(Debug, Args)]
pub struct BandsArgs {
    /// Frequency range as start:stop:step in GHz.
    #[arg(long, default_value = "10:300:0.1")]
    pub freq: RangeSpec,
    /// Window/moderate boundary in dB/km.
    #[arg(long)]
    pub gamma_low: Option<f64>,
    /// Moderate/blocked boundary in dB/km.
    #[arg(long)]
    pub gamma_high: Option<f64>,
    #[arg(long, value_enum, default_value = "gas")]
    pub basis: Basis,
    /// Rain rate in mm/h, used with --basis total.
    #[arg(long, default_value_t = 0.0)]
    pub rate: f64,
    /// Fog liquid water density in g/m³, used with --basis total.
    #[arg(long, default_value_t = 0.0)]
    pub density: f64,
    #[arg(long, default_value_t = DEFAULT_TEMPERATURE_C)]
    pub fog_temp_c: f64,
    /// Shortest run kept between two runs of the same class.
    #[arg(long, default_value_t = mmwave_core::budget::DEFAULT_MIN_RUN)]
    pub min_run: usize,
    #[command(flatten)]
    pub atmosphere: AtmosphereArgs,
    /// Also write the report as CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
}

#[derive(Debug, Args)]
pub struct PresetArgs {
    #[arg(value_enum)]
    pub figure: Figure,
    /// Replace the default curve family (comma-separated).
    #[arg(long, value_delimiter = ',')]
    pub family: Option<Vec<f64>>,
    /// Replace the default axis step.
    #[arg(long)]
    pub step: Option<f64>,
    /// Output CSV path (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// `start:stop:step`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeSpec {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl FromStr for RangeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, step] = parts.as_slice() else {
            return Err(format!("expected start:stop:step, got {s:?}"));
        };
        let num = |p: &str| {
            p.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad number {p:?} in {s:?}: {e}"))
        };
        Ok(RangeSpec {
            start: num(start)?,
            stop: num(stop)?,
            step: num(step)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn grammar_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn range_parsing() {
        let r: RangeSpec = "10:300:0.1".parse().unwrap();
        assert_eq!(
            r,
            RangeSpec {
                start: 10.0,
                stop: 300.0,
                step: 0.1
            }
        );
        assert!("10:300".parse::<RangeSpec>().is_err());
        assert!("a:b:c".parse::<RangeSpec>().is_err());
    }

    #[test]
    fn global_threads_flag() {
        let cli = Cli::try_parse_from(["mmwave", "preset", "fig2", "--threads", "2"]).unwrap();
        assert_eq!(cli.threads, Some(2));
    }
}
