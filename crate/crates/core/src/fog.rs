//! Fog and cloud specific attenuation (ITU-R P.840).
//!
//! `γ_c = K_l(f, T)·M`, where `K_l` follows from a double-Debye model of the
//! complex permittivity of liquid water. Valid in the Rayleigh regime, with
//! droplets much smaller than the wavelength (fog droplets are < 0.1 mm).

use crate::error::{check_range, Result};
use crate::quantities::{Frequency, LiquidWaterDensity, Temperature};

const MODEL: &str = "ITU-R P.840 fog";

pub const MAX_PERMITTIVITY_FREQUENCY_GHZ: f64 = 1000.0;
/// Upper frequency limit applied to `K_l` and fog attenuation.
pub const MAX_FREQUENCY_GHZ: f64 = 200.0;
pub const MIN_TEMPERATURE_K: f64 = 233.0;
pub const MAX_TEMPERATURE_K: f64 = 313.0;

// Double-Debye parameters of liquid water.
const EPS_1: f64 = 5.48;
const EPS_2: f64 = 3.51;

/// Liquid water content and temperature of a fog or cloud layer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FogConditions {
    pub water_density: LiquidWaterDensity,
    pub temperature: Temperature,
}

impl FogConditions {
    pub fn new(water_density: LiquidWaterDensity, temperature: Temperature) -> Self {
        Self {
            water_density,
            temperature,
        }
    }

    /// No fog, at 15 °C.
    pub fn clear() -> Self {
        Self::new(
            LiquidWaterDensity::new(0.0).unwrap(),
            Temperature::from_celsius(15.0).unwrap(),
        )
    }
}

/// Complex relative permittivity `ε′ − jε″` of liquid water.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiquidWaterPermittivity {
    pub eps_prime: f64,
    pub eps_double_prime: f64,
}

pub fn water_permittivity(f: Frequency, t: Temperature) -> Result<LiquidWaterPermittivity> {
    check_range(
        MODEL,
        "frequency (GHz)",
        f.ghz(),
        0.0,
        MAX_PERMITTIVITY_FREQUENCY_GHZ,
    )?;
    check_range(
        MODEL,
        "temperature (K)",
        t.kelvin(),
        MIN_TEMPERATURE_K,
        MAX_TEMPERATURE_K,
    )?;
    let theta = 300.0 / t.kelvin();
    let u = theta - 1.0;
    let eps_0 = 77.66 + 103.3 * u;
    // principal and secondary relaxation frequencies, GHz
    let f_p = 20.09 - 142.0 * u + 294.0 * u * u;
    let f_s = 590.0 - 1500.0 * u;

    let f = f.ghz();
    let rp = 1.0 + (f / f_p).powi(2);
    let rs = 1.0 + (f / f_s).powi(2);
    Ok(LiquidWaterPermittivity {
        eps_prime: (eps_0 - EPS_1) / rp + (EPS_1 - EPS_2) / rs + EPS_2,
        eps_double_prime: f * (eps_0 - EPS_1) / (f_p * rp) + f * (EPS_1 - EPS_2) / (f_s * rs),
    })
}

/// `K_l(f, T)` in (dB/km)/(g/m³).
pub fn specific_attenuation_coefficient(f: Frequency, t: Temperature) -> Result<f64> {
    check_range(MODEL, "frequency (GHz)", f.ghz(), 0.0, MAX_FREQUENCY_GHZ)?;
    let eps = water_permittivity(f, t)?;
    let eta = (2.0 + eps.eps_prime) / eps.eps_double_prime;
    Ok(0.819 * f.ghz() / (eps.eps_double_prime * (1.0 + eta * eta)))
}

/// Fog specific attenuation in dB/km.
pub fn fog_attenuation(cond: &FogConditions, f: Frequency) -> Result<f64> {
    let kl = specific_attenuation_coefficient(f, cond.temperature)?;
    Ok(kl * cond.water_density.grams_per_m3())
}
