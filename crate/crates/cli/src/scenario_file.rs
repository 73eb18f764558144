//! JSON scenario files.
//!
//! ```json
//! {
//!   "scenario": {
//!     "frequency_ghz": 28.0,
//!     "range_km": 1.0,
//!     "elevation_deg": 0.0,
//!     "tilt_deg": 0.0,
//!     "rain_rate_mm_per_h": 25.0,
//!     "fog": { "water_density_g_per_m3": 0.05, "temperature_c": 15.0 },
//!     "atmosphere": {
//!       "dry_pressure_hpa": 1013.25,
//!       "temperature_c": 15.0,
//!       "vapour_density_g_per_m3": 7.5
//!     },
//!     "mechanisms": { "rain": true, "fog": true, "gas": true }
//!   },
//!   "sweep": {
//!     "quantity": "rain", "axis": "frequency",
//!     "start": 1.0, "stop": 300.0, "step": 0.5,
//!     "family": [0.25, 1.0, 4.0, 16.0, 50.0]
//!   }
//! }
//! ```
//!
//! Everything except `frequency_ghz` and `range_km` is optional. Unknown keys
//! are rejected at every level.

use std::fs;
use std::path::Path;

use mmwave_core::fog::FogConditions;
use mmwave_core::quantities::{
    Distance, Frequency, LinkGeometry, LiquidWaterDensity, Pressure, RainRate, Temperature,
    VapourDensity,
};
use mmwave_core::{GasAtmosphere, Mechanisms, Scenario};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::sweep::SweepSpec;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub scenario: ScenarioSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioSpec {
    pub frequency_ghz: f64,
    pub range_km: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elevation_deg: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tilt_deg: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rain_rate_mm_per_h: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fog: Option<FogSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub atmosphere: Option<AtmosphereSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mechanisms: Option<MechanismSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FogSpec {
    pub water_density_g_per_m3: f64,
    #[serde(default = "default_temperature_c")]
    pub temperature_c: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtmosphereSpec {
    #[serde(default = "default_pressure_hpa")]
    pub dry_pressure_hpa: f64,
    #[serde(default = "default_temperature_c")]
    pub temperature_c: f64,
    #[serde(default = "default_vapour_density")]
    pub vapour_density_g_per_m3: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MechanismSpec {
    #[serde(default = "yes")]
    pub rain: bool,
    #[serde(default = "yes")]
    pub fog: bool,
    #[serde(default = "yes")]
    pub gas: bool,
}

pub const DEFAULT_TEMPERATURE_C: f64 = 15.0;
pub const DEFAULT_PRESSURE_HPA: f64 = 1013.25;
pub const DEFAULT_VAPOUR_DENSITY: f64 = 7.5;

fn default_temperature_c() -> f64 {
    DEFAULT_TEMPERATURE_C
}

fn default_pressure_hpa() -> f64 {
    DEFAULT_PRESSURE_HPA
}

fn default_vapour_density() -> f64 {
    DEFAULT_VAPOUR_DENSITY
}

fn yes() -> bool {
    true
}

impl ScenarioFile {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        serde_json::from_str(&text).map_err(|source| CliError::Scenario {
            path: path.to_owned(),
            source,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario file serializes")
    }
}

impl ScenarioSpec {
    /// Validate every field and build the model scenario.
    pub fn to_scenario(&self) -> CliResult<Scenario> {
        let geometry = LinkGeometry::new(
            Distance::new(self.range_km)?,
            self.elevation_deg.unwrap_or(0.0),
            self.tilt_deg.unwrap_or(0.0),
        )?;
        let mut scenario = Scenario::new(Frequency::new(self.frequency_ghz)?, geometry)
            .with_rain(RainRate::new(self.rain_rate_mm_per_h.unwrap_or(0.0))?);
        if let Some(fog) = &self.fog {
            scenario = scenario.with_fog(FogConditions::new(
                LiquidWaterDensity::new(fog.water_density_g_per_m3)?,
                Temperature::from_celsius(fog.temperature_c)?,
            ));
        }
        if let Some(a) = &self.atmosphere {
            scenario = scenario.with_atmosphere(GasAtmosphere::new(
                Pressure::new(a.dry_pressure_hpa)?,
                Temperature::from_celsius(a.temperature_c)?,
                VapourDensity::new(a.vapour_density_g_per_m3)?,
            ));
        }
        if let Some(m) = &self.mechanisms {
            scenario = scenario.with_mechanisms(Mechanisms {
                rain: m.rain,
                fog: m.fog,
                gas: m.gas,
            });
        }
        Ok(scenario)
    }
}
