//! Unit-carrying scalar quantities shared by the model modules.
//!
//! Internal units are fixed: GHz, km, mm/h, g/m³, K and hPa. Every constructor
//! validates its domain, so a value of one of these types is always usable by
//! the models up to their own validity windows.

use std::fmt;

use crate::error::{Error, Result};

/// Offset between the Celsius and Kelvin scales.
pub const CELSIUS_OFFSET: f64 = 273.15;

macro_rules! scalar_quantity {
    (
        $(#[$meta:meta])*
        $name:ident, $label:literal, $unit:literal, $getter:ident, $check:expr, $reason:literal
    ) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
        pub struct $name(f64);

        impl $name {
            pub fn new(value: f64) -> Result<Self> {
                let check: fn(f64) -> bool = $check;
                if value.is_finite() && check(value) {
                    Ok(Self(value))
                } else {
                    Err(Error::InvalidQuantity {
                        quantity: $label,
                        value,
                        reason: $reason,
                    })
                }
            }

            #[inline]
            pub fn $getter(self) -> f64 {
                self.0
            }
        }

        impl TryFrom<f64> for $name {
            type Error = Error;

            fn try_from(value: f64) -> Result<Self> {
                Self::new(value)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{} {}", self.0, $unit)
            }
        }
    };
}

scalar_quantity!(
    /// Carrier frequency in GHz.
    Frequency, "frequency", "GHz", ghz, |v| v > 0.0, "must be > 0 GHz"
);
scalar_quantity!(
    /// Path length in km.
    Distance, "distance", "km", km, |v| v > 0.0, "must be > 0 km"
);
scalar_quantity!(
    /// Rain rate in mm/h.
    RainRate, "rain rate", "mm/h", mm_per_hour, |v| v >= 0.0, "must be >= 0 mm/h"
);
scalar_quantity!(
    /// Fog or cloud liquid water content in g/m³.
    LiquidWaterDensity, "liquid water density", "g/m³", grams_per_m3, |v| v >= 0.0,
    "must be >= 0 g/m³"
);
scalar_quantity!(
    /// Dry-air partial pressure in hPa.
    Pressure, "dry-air pressure", "hPa", hpa, |v| v > 0.0, "must be > 0 hPa"
);
scalar_quantity!(
    /// Water-vapour density in g/m³.
    VapourDensity, "water-vapour density", "g/m³", grams_per_m3, |v| v >= 0.0,
    "must be >= 0 g/m³"
);

impl Distance {
    pub fn from_meters(meters: f64) -> Result<Self> {
        Self::new(meters / 1000.0)
    }

    pub fn meters(self) -> f64 {
        self.0 * 1000.0
    }
}

impl Frequency {
    pub fn hz(self) -> f64 {
        self.0 * 1e9
    }
}

/// Absolute temperature, stored in kelvin.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Temperature(f64);

impl Temperature {
    pub fn from_kelvin(kelvin: f64) -> Result<Self> {
        if kelvin.is_finite() && kelvin > 0.0 {
            Ok(Self(kelvin))
        } else {
            Err(Error::InvalidQuantity {
                quantity: "temperature",
                value: kelvin,
                reason: "must be above absolute zero (0 K)",
            })
        }
    }

    pub fn from_celsius(celsius: f64) -> Result<Self> {
        if celsius.is_finite() && celsius > -CELSIUS_OFFSET {
            Ok(Self(celsius + CELSIUS_OFFSET))
        } else {
            Err(Error::InvalidQuantity {
                quantity: "temperature",
                value: celsius,
                reason: "must be above absolute zero (-273.15 °C)",
            })
        }
    }

    #[inline]
    pub fn kelvin(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn celsius(self) -> f64 {
        self.0 - CELSIUS_OFFSET
    }
}

impl fmt::Display for Temperature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} K", self.0)
    }
}

/// Convert a Celsius reading into a [`Temperature`].
pub fn celsius_to_kelvin(celsius: f64) -> Result<Temperature> {
    Temperature::from_celsius(celsius)
}

/// Rain intensity classes. Boundaries are 0.25, 1, 4, 16 and 50 mm/h; a rate
/// exactly on a boundary belongs to the upper class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RainCategory {
    VeryLight,
    Light,
    Moderate,
    Heavy,
    Extreme,
    Torrential,
}

impl RainCategory {
    pub const ALL: [RainCategory; 6] = [
        RainCategory::VeryLight,
        RainCategory::Light,
        RainCategory::Moderate,
        RainCategory::Heavy,
        RainCategory::Extreme,
        RainCategory::Torrential,
    ];

    /// Half-open interval `[lo, hi)` in mm/h; `hi` is infinite for torrential rain.
    pub fn bounds(self) -> (f64, f64) {
        match self {
            RainCategory::VeryLight => (0.0, 0.25),
            RainCategory::Light => (0.25, 1.0),
            RainCategory::Moderate => (1.0, 4.0),
            RainCategory::Heavy => (4.0, 16.0),
            RainCategory::Extreme => (16.0, 50.0),
            RainCategory::Torrential => (50.0, f64::INFINITY),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RainCategory::VeryLight => "very light",
            RainCategory::Light => "light",
            RainCategory::Moderate => "moderate",
            RainCategory::Heavy => "heavy",
            RainCategory::Extreme => "extreme",
            RainCategory::Torrential => "torrential",
        }
    }
}

impl fmt::Display for RainCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn classify_rain(rate: RainRate) -> RainCategory {
    let r = rate.mm_per_hour();
    RainCategory::ALL
        .into_iter()
        .find(|c| r < c.bounds().1)
        .unwrap_or(RainCategory::Torrential)
}

/// Terrestrial link geometry: range, elevation angle and polarization tilt.
///
/// Angles are in degrees. A tilt of 0° is horizontal polarization, 90° vertical.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkGeometry {
    range: Distance,
    elevation_deg: f64,
    tilt_deg: f64,
}

impl LinkGeometry {
    pub fn new(range: Distance, elevation_deg: f64, tilt_deg: f64) -> Result<Self> {
        if !(elevation_deg.is_finite() && (-90.0..=90.0).contains(&elevation_deg)) {
            return Err(Error::InvalidQuantity {
                quantity: "elevation angle",
                value: elevation_deg,
                reason: "must lie in [-90, 90] degrees",
            });
        }
        if !(tilt_deg.is_finite() && (0.0..=90.0).contains(&tilt_deg)) {
            return Err(Error::InvalidQuantity {
                quantity: "polarization tilt angle",
                value: tilt_deg,
                reason: "must lie in [0, 90] degrees",
            });
        }
        Ok(Self {
            range,
            elevation_deg,
            tilt_deg,
        })
    }

    /// Horizontal polarization on a horizontal path (elevation and tilt both zero).
    pub fn horizontal(range: Distance) -> Self {
        Self {
            range,
            elevation_deg: 0.0,
            tilt_deg: 0.0,
        }
    }

    pub fn range(&self) -> Distance {
        self.range
    }

    pub fn elevation_deg(&self) -> f64 {
        self.elevation_deg
    }

    pub fn tilt_deg(&self) -> f64 {
        self.tilt_deg
    }
}
