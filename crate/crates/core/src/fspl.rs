//! Free-space path loss between isotropic antennas.
//!
//! Both forms assume far-field propagation; no minimum-distance guard is applied
//! beyond `d > 0`.

use std::f64::consts::PI;

use crate::quantities::{Distance, Frequency};

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Constant of the GHz/km log form, `20·log10(4π·1e12 / c)` rounded to two decimals.
pub const FSPL_CONSTANT_DB: f64 = 92.45;

/// FSPL in dB: `20·log10(d_km) + 20·log10(f_GHz) + 92.45`.
pub fn fspl_db(f: Frequency, d: Distance) -> f64 {
    20.0 * d.km().log10() + 20.0 * f.ghz().log10() + FSPL_CONSTANT_DB
}

/// FSPL as a linear power ratio, `(4π·d·f / c)²` in SI units.
pub fn fspl_linear_ratio(f: Frequency, d: Distance) -> f64 {
    let x = 4.0 * PI * d.meters() * f.hz() / SPEED_OF_LIGHT;
    x * x
}
