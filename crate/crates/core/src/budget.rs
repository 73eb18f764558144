//! Link attenuation budgets and band feasibility classification.
//!
//! A [`Scenario`] composes free-space loss with rain, fog and gaseous
//! attenuation over the link range. [`classify_bands`] splits a swept
//! spectrum into contiguous Window / Moderate / Blocked intervals.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Mechanism, Result};
use crate::fog::{fog_attenuation, FogConditions};
use crate::fspl::fspl_db;
use crate::gas::{self, AbsorptionSpectrum, GasAtmosphere};
use crate::grid::linear_grid;
use crate::quantities::{Frequency, LinkGeometry, RainRate};
use crate::rain::{path_attenuation, rain_specific_attenuation};

/// Which attenuation mechanisms a scenario includes. Free-space loss is always included.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mechanisms {
    pub rain: bool,
    pub fog: bool,
    pub gas: bool,
}

impl Mechanisms {
    pub const ALL: Mechanisms = Mechanisms {
        rain: true,
        fog: true,
        gas: true,
    };
    pub const NONE: Mechanisms = Mechanisms {
        rain: false,
        fog: false,
        gas: false,
    };
}

impl Default for Mechanisms {
    fn default() -> Self {
        Self::ALL
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    pub frequency: Frequency,
    pub geometry: LinkGeometry,
    pub rain_rate: RainRate,
    pub fog: FogConditions,
    pub atmosphere: GasAtmosphere,
    pub mechanisms: Mechanisms,
}

impl Scenario {
    /// No rain, no fog, standard atmosphere, every mechanism enabled.
    pub fn new(frequency: Frequency, geometry: LinkGeometry) -> Self {
        Self {
            frequency,
            geometry,
            rain_rate: RainRate::new(0.0).unwrap(),
            fog: FogConditions::clear(),
            atmosphere: GasAtmosphere::standard(),
            mechanisms: Mechanisms::ALL,
        }
    }

    pub fn with_rain(mut self, rate: RainRate) -> Self {
        self.rain_rate = rate;
        self
    }

    pub fn with_fog(mut self, fog: FogConditions) -> Self {
        self.fog = fog;
        self
    }

    pub fn with_atmosphere(mut self, atmosphere: GasAtmosphere) -> Self {
        self.atmosphere = atmosphere;
        self
    }

    pub fn with_mechanisms(mut self, mechanisms: Mechanisms) -> Self {
        self.mechanisms = mechanisms;
        self
    }
}

/// Per-mechanism path attenuation in dB.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttenuationBreakdown {
    pub fspl_db: f64,
    pub rain_db: f64,
    pub fog_db: f64,
    pub gas_db: f64,
    pub total_db: f64,
}

/// Specific attenuation (dB/km) of the enabled weather and gas mechanisms.
/// A null input (zero rain rate, zero water content) contributes exactly zero
/// without consulting the model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecificAttenuation {
    pub rain: f64,
    pub fog: f64,
    pub gas: f64,
}

impl SpecificAttenuation {
    pub fn total(&self) -> f64 {
        self.rain + self.fog + self.gas
    }
}

pub fn specific_attenuation(scenario: &Scenario) -> Result<SpecificAttenuation> {
    let f = scenario.frequency;
    let m = scenario.mechanisms;
    let rain = if m.rain && scenario.rain_rate.mm_per_hour() > 0.0 {
        rain_specific_attenuation(f, scenario.rain_rate, &scenario.geometry)
            .map_err(|e| e.in_mechanism(Mechanism::Rain))?
    } else {
        0.0
    };
    let fog = if m.fog && scenario.fog.water_density.grams_per_m3() > 0.0 {
        fog_attenuation(&scenario.fog, f).map_err(|e| e.in_mechanism(Mechanism::Fog))?
    } else {
        0.0
    };
    let gas = if m.gas {
        gas::specific_attenuation(f, &scenario.atmosphere)
            .map_err(|e| e.in_mechanism(Mechanism::Gas))?
            .total
    } else {
        0.0
    };
    Ok(SpecificAttenuation { rain, fog, gas })
}

pub fn evaluate(scenario: &Scenario) -> Result<AttenuationBreakdown> {
    let d = scenario.geometry.range();
    let fspl = fspl_db(scenario.frequency, d);
    let gamma = specific_attenuation(scenario)?;
    let rain_db = path_attenuation(gamma.rain, d);
    let fog_db = path_attenuation(gamma.fog, d);
    let gas_db = path_attenuation(gamma.gas, d);
    Ok(AttenuationBreakdown {
        fspl_db: fspl,
        rain_db,
        fog_db,
        gas_db,
        total_db: fspl + rain_db + fog_db + gas_db,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BandClass {
    /// Low attenuation, suited to outdoor links.
    Window,
    /// Attenuation comparable to today's cellular bands.
    Moderate,
    /// High attenuation, viable for short indoor links.
    Blocked,
}

impl BandClass {
    pub fn name(self) -> &'static str {
        match self {
            BandClass::Window => "window",
            BandClass::Moderate => "moderate",
            BandClass::Blocked => "blocked",
        }
    }
}

impl fmt::Display for BandClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Class boundaries in dB/km: `γ < low` is Window, `low ≤ γ < high` Moderate,
/// `γ ≥ high` Blocked. `high` may be infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandThresholds {
    low: f64,
    high: f64,
}

impl BandThresholds {
    pub const DEFAULT_LOW: f64 = 3.0;
    pub const DEFAULT_HIGH: f64 = 10.0;

    pub fn new(low: f64, high: f64) -> Result<Self> {
        if !(low.is_finite() && low > 0.0 && high > low) {
            return Err(Error::InvalidInput(format!(
                "band thresholds need 0 < low < high, got low = {low}, high = {high}"
            )));
        }
        Ok(Self { low, high })
    }

    pub fn low(&self) -> f64 {
        self.low
    }

    pub fn high(&self) -> f64 {
        self.high
    }

    pub fn classify(&self, gamma: f64) -> BandClass {
        if gamma < self.low {
            BandClass::Window
        } else if gamma < self.high {
            BandClass::Moderate
        } else {
            BandClass::Blocked
        }
    }
}

impl Default for BandThresholds {
    fn default() -> Self {
        Self {
            low: Self::DEFAULT_LOW,
            high: Self::DEFAULT_HIGH,
        }
    }
}

/// Runs shorter than this many samples, sandwiched between two runs of the
/// same class, are absorbed into their neighbours.
pub const DEFAULT_MIN_RUN: usize = 3;

/// A contiguous frequency interval of one class. `end_ghz` is the first
/// frequency of the next interval, or the last swept frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandInterval {
    pub class: BandClass,
    pub start_ghz: f64,
    pub end_ghz: f64,
    pub samples: usize,
    pub min_db_per_km: f64,
    pub mean_db_per_km: f64,
    pub max_db_per_km: f64,
}

impl BandInterval {
    pub fn contains(&self, f_ghz: f64) -> bool {
        self.start_ghz <= f_ghz && f_ghz <= self.end_ghz
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BandReport {
    pub thresholds: BandThresholds,
    pub intervals: Vec<BandInterval>,
}

impl BandReport {
    /// Interval containing `f_ghz`. A shared boundary resolves to the later interval.
    pub fn interval_at(&self, f_ghz: f64) -> Option<&BandInterval> {
        self.intervals.iter().rev().find(|iv| iv.contains(f_ghz))
    }

    pub fn of_class(&self, class: BandClass) -> impl Iterator<Item = &BandInterval> + '_ {
        self.intervals.iter().filter(move |iv| iv.class == class)
    }

    /// Whether a single interval of `class` covers `[lo, hi]`.
    pub fn covers(&self, class: BandClass, lo: f64, hi: f64) -> bool {
        self.of_class(class)
            .any(|iv| iv.start_ghz <= lo && hi <= iv.end_ghz)
    }

    /// Swept range covered by intervals of `class`, GHz.
    pub fn coverage_ghz(&self, class: BandClass) -> f64 {
        self.of_class(class)
            .map(|iv| iv.end_ghz - iv.start_ghz)
            .sum()
    }
}

/// Classify a gaseous absorption spectrum on its total attenuation.
pub fn classify_bands(
    spectrum: &AbsorptionSpectrum,
    thresholds: BandThresholds,
) -> Result<BandReport> {
    let freqs: Vec<f64> = spectrum.frequencies().collect();
    let gammas: Vec<f64> = spectrum.totals().collect();
    classify_series(&freqs, &gammas, thresholds, DEFAULT_MIN_RUN)
}

/// Classify an arbitrary attenuation series sampled at increasing frequencies.
pub fn classify_series(
    freqs: &[f64],
    gammas: &[f64],
    thresholds: BandThresholds,
    min_run: usize,
) -> Result<BandReport> {
    if freqs.is_empty() {
        return Err(Error::InvalidInput(
            "cannot classify an empty spectrum".into(),
        ));
    }
    if freqs.len() != gammas.len() {
        return Err(Error::InvalidInput(format!(
            "{} frequencies but {} attenuation values",
            freqs.len(),
            gammas.len()
        )));
    }

    // (class, first sample, one past last sample)
    let mut runs: Vec<(BandClass, usize, usize)> = Vec::new();
    for (i, &g) in gammas.iter().enumerate() {
        let class = thresholds.classify(g);
        match runs.last_mut() {
            Some(last) if last.0 == class => last.2 = i + 1,
            _ => runs.push((class, i, i + 1)),
        }
    }

    let mut merged: Vec<(BandClass, usize, usize)> = Vec::with_capacity(runs.len());
    let mut top_is_short = false;
    for run in runs {
        let n = merged.len();
        if n >= 2 && top_is_short && merged[n - 2].0 == run.0 {
            merged.pop();
            merged[n - 2].2 = run.2;
            top_is_short = false;
        } else {
            top_is_short = run.2 - run.1 < min_run;
            merged.push(run);
        }
    }

    let last = freqs.len() - 1;
    let intervals = merged
        .into_iter()
        .map(|(class, a, b)| {
            let slice = &gammas[a..b];
            let min = slice.iter().copied().fold(f64::INFINITY, f64::min);
            let max = slice.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let mean = slice.iter().sum::<f64>() / slice.len() as f64;
            BandInterval {
                class,
                start_ghz: freqs[a],
                end_ghz: freqs[b.min(last)],
                samples: b - a,
                min_db_per_km: min,
                mean_db_per_km: mean,
                max_db_per_km: max,
            }
        })
        .collect();
    Ok(BandReport {
        thresholds,
        intervals,
    })
}

/// Basis for band classification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BandBasis {
    /// Gaseous attenuation only.
    Gas,
    /// Gas plus rain and fog specific attenuation.
    Total {
        rain_rate: RainRate,
        fog: FogConditions,
        geometry: LinkGeometry,
    },
}

/// Sweep `[f_start, f_stop]` and classify on the chosen basis.
pub fn band_report(
    atmosphere: &GasAtmosphere,
    basis: BandBasis,
    f_start: f64,
    f_stop: f64,
    step: f64,
    thresholds: BandThresholds,
) -> Result<BandReport> {
    let (freqs, gammas) = band_series(atmosphere, basis, f_start, f_stop, step)?;
    classify_series(&freqs, &gammas, thresholds, DEFAULT_MIN_RUN)
}

/// The frequencies and specific attenuations (dB/km) a band report is built from.
pub fn band_series(
    atmosphere: &GasAtmosphere,
    basis: BandBasis,
    f_start: f64,
    f_stop: f64,
    step: f64,
) -> Result<(Vec<f64>, Vec<f64>)> {
    match basis {
        BandBasis::Gas => {
            let spectrum = gas::absorption_spectrum(atmosphere, f_start, f_stop, step)?;
            Ok((
                spectrum.frequencies().collect(),
                spectrum.totals().collect(),
            ))
        }
        BandBasis::Total {
            rain_rate,
            fog,
            geometry,
        } => {
            let freqs = linear_grid(f_start, f_stop, step)?;
            let gammas = freqs
                .par_iter()
                .map(|&f| {
                    let scenario = Scenario::new(Frequency::new(f)?, geometry)
                        .with_rain(rain_rate)
                        .with_fog(fog)
                        .with_atmosphere(*atmosphere);
                    specific_attenuation(&scenario).map(|g| g.total())
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((freqs, gammas))
        }
    }
}
