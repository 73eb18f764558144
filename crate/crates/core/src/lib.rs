//! Millimeter-wave link attenuation models.
//!
//! Free-space path loss, rain (ITU-R P.838-3), fog and cloud (ITU-R P.840) and
//! atmospheric gases (ITU-R P.676-10, line-by-line), composed into per-link
//! budgets and band feasibility reports.

pub mod assets;
pub mod budget;
pub mod error;
pub mod fog;
pub mod fspl;
pub mod gas;
pub mod grid;
pub mod quantities;
pub mod rain;

pub use budget::{
    band_report, classify_bands, evaluate, AttenuationBreakdown, BandBasis, BandClass,
    BandInterval, BandReport, BandThresholds, Mechanisms, Scenario,
};
pub use error::{Error, ErrorKind, Mechanism, Result};
pub use fog::{fog_attenuation, FogConditions};
pub use fspl::{fspl_db, fspl_linear_ratio};
pub use gas::{absorption_spectrum, AbsorptionSpectrum, GasAtmosphere, GasAttenuation};
pub use quantities::{
    celsius_to_kelvin, classify_rain, Distance, Frequency, LinkGeometry, LiquidWaterDensity,
    Pressure, RainCategory, RainRate, Temperature, VapourDensity,
};
pub use rain::{rain_specific_attenuation, RainCoefficients, RegressionTable};
