//! Gaseous specific attenuation by the line-by-line method (ITU-R P.676-10, Annex 1).
//!
//! `γ = γ_o + γ_w = 0.1820·f·(N″_oxygen(f) + N″_water(f))` dB/km, where each
//! imaginary refractivity is a sum over spectral lines of strength × shape. The
//! oxygen part also carries the dry-air continuum (Debye spectrum of oxygen
//! below 10 GHz plus pressure-induced nitrogen absorption above 100 GHz).

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::assets::{self, Asset};
use crate::error::{check_range, Error, Result};
use crate::grid::linear_grid;
use crate::quantities::{Frequency, Pressure, Temperature, VapourDensity};

const MODEL: &str = "ITU-R P.676 gas";

pub const MIN_FREQUENCY_GHZ: f64 = 1.0;
pub const MAX_FREQUENCY_GHZ: f64 = 1000.0;

pub const OXYGEN_LINE_COUNT: usize = 44;
pub const WATER_LINE_COUNT: usize = 35;

/// Local atmospheric state at the link.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasAtmosphere {
    pub dry_pressure: Pressure,
    pub temperature: Temperature,
    pub vapour_density: VapourDensity,
}

impl GasAtmosphere {
    pub fn new(
        dry_pressure: Pressure,
        temperature: Temperature,
        vapour_density: VapourDensity,
    ) -> Self {
        Self {
            dry_pressure,
            temperature,
            vapour_density,
        }
    }

    /// 1013.25 hPa, 15 °C, 7.5 g/m³.
    pub fn standard() -> Self {
        Self::new(
            Pressure::new(1013.25).unwrap(),
            Temperature::from_celsius(15.0).unwrap(),
            VapourDensity::new(7.5).unwrap(),
        )
    }

    /// Water-vapour partial pressure `e = ρ·T / 216.7` in hPa.
    pub fn vapour_pressure_hpa(&self) -> f64 {
        self.vapour_density.grams_per_m3() * self.temperature.kelvin() / 216.7
    }

    /// Inverse temperature `θ = 300 / T`.
    pub fn theta(&self) -> f64 {
        300.0 / self.temperature.kelvin()
    }
}

impl Default for GasAtmosphere {
    fn default() -> Self {
        Self::standard()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Species {
    Oxygen,
    WaterVapour,
}

/// One absorption line: center frequency and its six spectroscopic coefficients
/// (`a1..a6` for oxygen, `b1..b6` for water vapour).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralLine {
    pub species: Species,
    pub center_ghz: f64,
    pub coefficients: [f64; 6],
}

/// Width `Δf` and interference correction `δ` of a line, GHz and dimensionless.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineWidth {
    pub width_ghz: f64,
    pub interference: f64,
}

/// Line strength `S_i`.
///
/// Oxygen: `a1·1e-7·p·θ³·exp(a2(1 − θ))`; water vapour: `b1·1e-1·e·θ^3.5·exp(b2(1 − θ))`.
pub fn line_strength(line: &SpectralLine, atm: &GasAtmosphere) -> f64 {
    let theta = atm.theta();
    let [c1, c2, ..] = line.coefficients;
    match line.species {
        Species::Oxygen => {
            c1 * 1e-7 * atm.dry_pressure.hpa() * theta.powi(3) * (c2 * (1.0 - theta)).exp()
        }
        Species::WaterVapour => {
            c1 * 1e-1 * atm.vapour_pressure_hpa() * theta.powf(3.5) * (c2 * (1.0 - theta)).exp()
        }
    }
}

/// Pressure-broadened width, including the Zeeman term for oxygen and the
/// Doppler term for water vapour.
pub fn line_width(line: &SpectralLine, atm: &GasAtmosphere) -> LineWidth {
    let theta = atm.theta();
    let p = atm.dry_pressure.hpa();
    let e = atm.vapour_pressure_hpa();
    let [_, _, c3, c4, c5, c6] = line.coefficients;
    match line.species {
        Species::Oxygen => {
            let df = c3 * 1e-4 * (p * theta.powf(0.8 - c4) + 1.1 * e * theta);
            LineWidth {
                width_ghz: (df * df + 2.25e-6).sqrt(),
                interference: (c5 + c6 * theta) * 1e-4 * (p + e) * theta.powf(0.8),
            }
        }
        Species::WaterVapour => {
            let df = c3 * 1e-4 * (p * theta.powf(c4) + c5 * e * theta.powf(c6));
            let f0 = line.center_ghz;
            LineWidth {
                width_ghz: 0.535 * df + (0.217 * df * df + 2.1316e-12 * f0 * f0 / theta).sqrt(),
                interference: 0.0,
            }
        }
    }
}

/// Line-shape factor `F_i(f)`, a Van Vleck–Weisskopf form with interference correction.
pub fn line_shape(line: &SpectralLine, f: Frequency, atm: &GasAtmosphere) -> f64 {
    shape(line.center_ghz, f.ghz(), line_width(line, atm))
}

#[inline]
fn shape(f0: f64, f: f64, w: LineWidth) -> f64 {
    let LineWidth {
        width_ghz: df,
        interference: delta,
    } = w;
    let lo = f0 - f;
    let hi = f0 + f;
    f / f0 * ((df - delta * lo) / (lo * lo + df * df) + (df - delta * hi) / (hi * hi + df * df))
}

/// Dry-air continuum `N″_D(f)`.
pub fn dry_continuum(f: Frequency, atm: &GasAtmosphere) -> f64 {
    let f = f.ghz();
    let theta = atm.theta();
    let p = atm.dry_pressure.hpa();
    let e = atm.vapour_pressure_hpa();
    let d = 5.6e-4 * (p + e) * theta.powf(0.8);
    f * p
        * theta
        * theta
        * (6.14e-5 / (d * (1.0 + (f / d).powi(2)))
            + 1.4e-12 * p * theta.powf(1.5) / (1.0 + 1.9e-5 * f.powf(1.5)))
}

/// Spectroscopic line tables for both gases.
#[derive(Debug, Clone, PartialEq)]
pub struct LineCatalog {
    pub oxygen: Vec<SpectralLine>,
    pub water: Vec<SpectralLine>,
}

const OXYGEN_HEADER: [&str; 7] = ["f0", "a1", "a2", "a3", "a4", "a5", "a6"];
const WATER_HEADER: [&str; 7] = ["f0", "b1", "b2", "b3", "b4", "b5", "b6"];

impl LineCatalog {
    /// The embedded P.676-10 tables, checksum-verified on first use.
    pub fn p676_10() -> &'static LineCatalog {
        static CATALOG: OnceLock<LineCatalog> = OnceLock::new();
        CATALOG.get_or_init(|| {
            Self::load_verified(&assets::P676_OXYGEN_LINES, &assets::P676_WATER_LINES)
                .expect("embedded P.676 line assets are corrupt")
        })
    }

    pub fn load_verified(oxygen: &Asset, water: &Asset) -> Result<Self> {
        let oxygen_lines = parse_lines(oxygen.name, oxygen.verified_text()?, Species::Oxygen)?;
        let water_lines = parse_lines(water.name, water.verified_text()?, Species::WaterVapour)?;
        Self::new(oxygen_lines, water_lines)
    }

    /// Build a catalog, requiring the full line count for each gas.
    pub fn new(oxygen: Vec<SpectralLine>, water: Vec<SpectralLine>) -> Result<Self> {
        if oxygen.len() != OXYGEN_LINE_COUNT {
            return Err(Error::asset(
                "oxygen lines",
                format!("expected {OXYGEN_LINE_COUNT} lines, found {}", oxygen.len()),
            ));
        }
        if water.len() != WATER_LINE_COUNT {
            return Err(Error::asset(
                "water-vapour lines",
                format!("expected {WATER_LINE_COUNT} lines, found {}", water.len()),
            ));
        }
        Ok(Self { oxygen, water })
    }

    /// `(γ_oxygen, γ_water)` in dB/km, without range checking.
    fn attenuation_unchecked(&self, f: Frequency, atm: &GasAtmosphere) -> (f64, f64) {
        let sum = |lines: &[SpectralLine]| -> f64 {
            lines
                .iter()
                .map(|l| line_strength(l, atm) * line_shape(l, f, atm))
                .sum()
        };
        let n_oxygen = sum(&self.oxygen) + dry_continuum(f, atm);
        let n_water = sum(&self.water);
        let scale = 0.1820 * f.ghz();
        (scale * n_oxygen, scale * n_water)
    }

    pub fn specific_attenuation(
        &self,
        f: Frequency,
        atm: &GasAtmosphere,
    ) -> Result<GasAttenuation> {
        check_range(
            MODEL,
            "frequency (GHz)",
            f.ghz(),
            MIN_FREQUENCY_GHZ,
            MAX_FREQUENCY_GHZ,
        )?;
        let (oxygen, water) = self.attenuation_unchecked(f, atm);
        Ok(GasAttenuation::new(oxygen, water))
    }
}

fn parse_lines(name: &str, text: &str, species: Species) -> Result<Vec<SpectralLine>> {
    let header = match species {
        Species::Oxygen => &OXYGEN_HEADER,
        Species::WaterVapour => &WATER_HEADER,
    };
    let mut lines = Vec::new();
    for rec in assets::read_table(name, text, header)? {
        let center_ghz = assets::field_f64(name, &rec, 0)?;
        if center_ghz <= 0.0 {
            return Err(Error::asset(
                name,
                format!("non-positive line center {center_ghz}"),
            ));
        }
        let mut coefficients = [0.0; 6];
        for (i, c) in coefficients.iter_mut().enumerate() {
            *c = assets::field_f64(name, &rec, i + 1)?;
        }
        lines.push(SpectralLine {
            species,
            center_ghz,
            coefficients,
        });
    }
    Ok(lines)
}

/// Per-gas specific attenuation at one frequency, dB/km.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasAttenuation {
    pub oxygen: f64,
    pub water: f64,
    pub total: f64,
}

impl GasAttenuation {
    fn new(oxygen: f64, water: f64) -> Self {
        Self {
            oxygen,
            water,
            total: oxygen + water,
        }
    }
}

/// Gaseous specific attenuation using the embedded line tables.
pub fn specific_attenuation(f: Frequency, atm: &GasAtmosphere) -> Result<GasAttenuation> {
    LineCatalog::p676_10().specific_attenuation(f, atm)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumSample {
    pub frequency: Frequency,
    pub attenuation: GasAttenuation,
}

/// Gaseous attenuation sampled on a strictly increasing frequency grid.
#[derive(Debug, Clone, PartialEq)]
pub struct AbsorptionSpectrum {
    samples: Vec<SpectrumSample>,
}

impl AbsorptionSpectrum {
    /// Build from samples; frequencies must be strictly increasing and values nonnegative.
    pub fn from_samples(samples: Vec<SpectrumSample>) -> Result<Self> {
        if samples
            .windows(2)
            .any(|w| w[1].frequency.ghz() <= w[0].frequency.ghz())
        {
            return Err(Error::InvalidInput(
                "spectrum frequencies must be strictly increasing".into(),
            ));
        }
        if samples.iter().any(|s| {
            let a = s.attenuation;
            !(a.oxygen >= 0.0 && a.water >= 0.0 && a.total >= 0.0)
        }) {
            return Err(Error::InvalidInput(
                "spectrum attenuation values must be nonnegative".into(),
            ));
        }
        Ok(Self { samples })
    }

    pub fn samples(&self) -> &[SpectrumSample] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn frequencies(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.frequency.ghz())
    }

    pub fn totals(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.attenuation.total)
    }
}

/// Inclusive sweep of gaseous attenuation over `[f_start, f_stop]` GHz.
///
/// Grid points are evaluated in parallel; sample order and values do not
/// depend on the number of worker threads.
pub fn absorption_spectrum(
    atm: &GasAtmosphere,
    f_start: f64,
    f_stop: f64,
    step: f64,
) -> Result<AbsorptionSpectrum> {
    absorption_spectrum_with(LineCatalog::p676_10(), atm, f_start, f_stop, step)
}

pub fn absorption_spectrum_with(
    catalog: &LineCatalog,
    atm: &GasAtmosphere,
    f_start: f64,
    f_stop: f64,
    step: f64,
) -> Result<AbsorptionSpectrum> {
    let grid = linear_grid(f_start, f_stop, step)?;
    check_range(
        MODEL,
        "start frequency (GHz)",
        f_start,
        MIN_FREQUENCY_GHZ,
        MAX_FREQUENCY_GHZ,
    )?;
    check_range(
        MODEL,
        "stop frequency (GHz)",
        f_stop,
        MIN_FREQUENCY_GHZ,
        MAX_FREQUENCY_GHZ,
    )?;
    let samples = grid
        .into_par_iter()
        .map(|f| {
            let frequency = Frequency::new(f)?;
            let attenuation = catalog.specific_attenuation(frequency, atm)?;
            Ok(SpectrumSample {
                frequency,
                attenuation,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    AbsorptionSpectrum::from_samples(samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn freq(f: f64) -> Frequency {
        Frequency::new(f).unwrap()
    }

    fn atm(p: f64, t_k: f64, rho: f64) -> GasAtmosphere {
        GasAtmosphere::new(
            Pressure::new(p).unwrap(),
            Temperature::from_kelvin(t_k).unwrap(),
            VapourDensity::new(rho).unwrap(),
        )
    }

    fn catalog() -> &'static LineCatalog {
        LineCatalog::p676_10()
    }

    #[test]
    fn catalog_line_counts() {
        let c = catalog();
        assert_eq!(c.oxygen.len(), 44);
        assert_eq!(c.water.len(), 35);
        assert_eq!(c.oxygen[0].center_ghz, 50.474214);
        assert_eq!(c.water[0].center_ghz, 22.23508);
        assert!(c.oxygen.iter().all(|l| l.species == Species::Oxygen));
    }

    #[test]
    fn truncated_catalog_rejected() {
        let c = catalog();
        assert!(LineCatalog::new(c.oxygen[..43].to_vec(), c.water.clone()).is_err());
        assert!(LineCatalog::new(c.oxygen.clone(), c.water[1..].to_vec()).is_err());
    }

    #[test]
    fn oxygen_strength_scales_with_pressure() {
        let full = atm(1013.25, 288.15, 7.5);
        let half = atm(506.625, 288.15, 7.5);
        for l in &catalog().oxygen {
            let a = line_strength(l, &full);
            let b = line_strength(l, &half);
            assert!(b < a);
            assert!((a / b - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn dry_air_has_no_water_strength() {
        let dry = atm(1013.25, 288.15, 0.0);
        assert!(catalog()
            .water
            .iter()
            .all(|l| line_strength(l, &dry) == 0.0));
    }

    #[test]
    fn sixty_ghz_complex_strengths_positive() {
        let a = GasAtmosphere::standard();
        for l in catalog()
            .oxygen
            .iter()
            .filter(|l| (50.0..70.0).contains(&l.center_ghz))
        {
            let s = line_strength(l, &a);
            assert!(s.is_finite() && s > 0.0);
        }
    }

    #[test]
    fn shape_continuous_at_center() {
        let a = GasAtmosphere::standard();
        for l in catalog().oxygen.iter().chain(&catalog().water) {
            if l.center_ghz > 1000.0 {
                continue;
            }
            let at = line_shape(l, freq(l.center_ghz), &a);
            let below = line_shape(l, freq(l.center_ghz - 1e-3), &a);
            let above = line_shape(l, freq(l.center_ghz + 1e-3), &a);
            assert!(at.is_finite() && at > 0.0);
            // The interference term gives a smooth slope through the center;
            // a jump would show up as a midpoint mismatch.
            let jump = ((below + above) / 2.0 - at) / at;
            assert!(jump.abs() < 1e-3, "line {}: {jump}", l.center_ghz);
        }
    }

    #[test]
    fn shape_decays_in_far_wing() {
        let a = GasAtmosphere::standard();
        let l = &catalog().water[0];
        let at = |offset: f64| line_shape(l, freq(l.center_ghz + offset), &a).abs();
        let near = at(0.0);
        let wing: Vec<f64> = [10.0, 50.0, 100.0, 300.0, 900.0]
            .iter()
            .map(|&o| at(o))
            .collect();
        assert!(wing.windows(2).all(|w| w[1] < w[0]), "{wing:?}");
        assert!(wing[4] < 1e-2 * near);
    }

    #[test]
    fn width_grows_with_pressure() {
        let lo = atm(500.0, 288.15, 7.5);
        let hi = atm(1100.0, 288.15, 7.5);
        for l in catalog().oxygen.iter().chain(&catalog().water) {
            assert!(line_width(l, &hi).width_ghz > line_width(l, &lo).width_ghz);
        }
    }

    #[test]
    fn components_add_up() {
        let g = specific_attenuation(freq(60.0), &GasAtmosphere::standard()).unwrap();
        assert_eq!(g.total, g.oxygen + g.water);
        assert!((10.0..20.0).contains(&g.total), "{g:?}");
    }

    #[test]
    fn dry_air_has_no_water_attenuation() {
        let dry = atm(1013.25, 288.15, 0.0);
        for f in [1.0, 22.235, 60.0, 183.31, 557.0, 1000.0] {
            assert_eq!(specific_attenuation(freq(f), &dry).unwrap().water, 0.0);
        }
    }

    #[test]
    fn low_attenuation_in_ka_band() {
        let s = absorption_spectrum(&GasAtmosphere::standard(), 28.0, 38.0, 0.1).unwrap();
        assert!(s.totals().all(|g| g < 0.3));
    }

    #[test]
    fn out_of_range_frequency() {
        let a = GasAtmosphere::standard();
        assert!(matches!(
            specific_attenuation(freq(0.5), &a),
            Err(Error::OutOfModelRange { .. })
        ));
        assert!(matches!(
            absorption_spectrum(&a, 1.0, 1200.0, 1.0),
            Err(Error::OutOfModelRange { .. })
        ));
    }

    #[test]
    fn spectrum_length_and_pointwise_agreement() {
        let a = GasAtmosphere::standard();
        let s = absorption_spectrum(&a, 1.0, 300.0, 0.5).unwrap();
        assert_eq!(s.len(), 599);
        for sample in s.samples().iter().step_by(37) {
            let direct = specific_attenuation(sample.frequency, &a).unwrap();
            assert_eq!(direct, sample.attenuation);
        }
    }

    #[test]
    fn from_samples_rejects_unsorted() {
        let a = GasAtmosphere::standard();
        let mk = |f: f64| SpectrumSample {
            frequency: freq(f),
            attenuation: specific_attenuation(freq(f), &a).unwrap(),
        };
        assert!(AbsorptionSpectrum::from_samples(vec![mk(20.0), mk(10.0)]).is_err());
        assert!(AbsorptionSpectrum::from_samples(vec![mk(10.0), mk(10.0)]).is_err());
    }

    proptest! {
        #[test]
        fn more_vapour_never_less_water_absorption(
            f in 1.0f64..1000.0, rho in 0.0f64..25.0, drho in 0.0f64..10.0,
            p in 500.0f64..1100.0, t in 240.0f64..310.0,
        ) {
            let a = specific_attenuation(freq(f), &atm(p, t, rho)).unwrap().water;
            let b = specific_attenuation(freq(f), &atm(p, t, rho + drho)).unwrap().water;
            prop_assert!(b >= a);
        }

        #[test]
        fn finite_over_full_band(f in 1.0f64..1000.0, p in 500.0f64..1100.0, rho in 0.0f64..25.0) {
            let g = specific_attenuation(freq(f), &atm(p, 288.15, rho)).unwrap();
            prop_assert!(g.total.is_finite() && g.total >= 0.0);
        }
    }
}
