//! Parameter sweeps rendered as CSV curve families.

use std::fmt;
use std::io::Write;

use mmwave_core::fog::{self, FogConditions};
use mmwave_core::gas::{self, GasAtmosphere};
use mmwave_core::grid::linear_grid;
use mmwave_core::quantities::{Distance, Frequency, LiquidWaterDensity, RainRate, VapourDensity};
use mmwave_core::{fspl_db, rain, Scenario};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::format::sig6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Fspl,
    Rain,
    Fog,
    Gas,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Frequency,
    Distance,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::Fspl => "fspl",
            Quantity::Rain => "rain",
            Quantity::Fog => "fog",
            Quantity::Gas => "gas",
        })
    }
}

impl Axis {
    fn column(self) -> &'static str {
        match self {
            Axis::Frequency => "frequency_ghz",
            Axis::Distance => "distance_km",
        }
    }
}

/// A one-dimensional sweep producing one curve per family member.
///
/// The family parameter depends on the quantity and axis:
///
/// | quantity | frequency axis           | distance axis        |
/// |----------|--------------------------|----------------------|
/// | fspl     | distance, km             | frequency, GHz       |
/// | rain     | rain rate, mm/h          | rain rate, mm/h      |
/// | fog      | water density, g/m³      | water density, g/m³  |
/// | gas      | vapour density, g/m³     | vapour density, g/m³ |
///
/// Frequency-axis weather and gas curves are specific attenuation (dB/km);
/// distance-axis curves are path attenuation (dB) at the scenario frequency.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub quantity: Quantity,
    pub axis: Axis,
    pub start: f64,
    pub stop: f64,
    pub step: f64,
    pub family: Vec<f64>,
}

impl SweepSpec {
    pub fn validate(&self) -> CliResult<()> {
        if self.step.is_nan() || self.step <= 0.0 {
            return Err(CliError::Input(format!(
                "sweep step must be > 0, got {}",
                self.step
            )));
        }
        if self.start.is_nan() || self.stop.is_nan() || self.start >= self.stop {
            return Err(CliError::Input(format!(
                "sweep start {} must be below stop {}",
                self.start, self.stop
            )));
        }
        if self.family.is_empty() {
            return Err(CliError::Input("sweep family must not be empty".into()));
        }
        if self.family.iter().any(|v| !v.is_finite()) {
            return Err(CliError::Input("sweep family values must be finite".into()));
        }
        Ok(())
    }

    fn family_label(&self, value: f64) -> String {
        let v = sig6_trim(value);
        match (self.quantity, self.axis) {
            (Quantity::Fspl, Axis::Frequency) => format!("fspl_db@{v}km"),
            (Quantity::Fspl, Axis::Distance) => format!("fspl_db@{v}GHz"),
            (Quantity::Rain, a) => format!("rain_{}@{v}mm/h", unit(a)),
            (Quantity::Fog, a) => format!("fog_{}@{v}g/m3", unit(a)),
            (Quantity::Gas, a) => format!("gas_{}@rho{v}g/m3", unit(a)),
        }
    }
}

fn unit(axis: Axis) -> &'static str {
    match axis {
        Axis::Frequency => "db_per_km",
        Axis::Distance => "db",
    }
}

/// Compact label form of a family value: six significant digits, trailing zeros dropped.
fn sig6_trim(v: f64) -> String {
    let s = sig6(v);
    if s.contains('.') && !s.contains('e') {
        s.trim_end_matches('0').trim_end_matches('.').to_owned()
    } else {
        s
    }
}

/// Rows of a sweep. `None` marks a point outside a model's frequency cap.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub comments: Vec<String>,
    pub header: Vec<String>,
    pub rows: Vec<(f64, Vec<Option<f64>>)>,
}

impl Table {
    /// `#` comment lines, header, then one line per row. Output is byte-stable
    /// for identical inputs.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for c in &self.comments {
            writeln!(out, "# {c}")?;
        }
        writeln!(out, "{}", self.header.join(","))?;
        for (x, values) in &self.rows {
            let mut line = sig6(*x);
            for v in values {
                line.push(',');
                if let Some(v) = v {
                    line.push_str(&sig6(*v));
                }
            }
            writeln!(out, "{line}")?;
        }
        out.flush()
    }

    pub fn column(&self, name: &str) -> Option<Vec<Option<f64>>> {
        let idx = self.header.iter().position(|h| h == name)?;
        if idx == 0 {
            return Some(self.rows.iter().map(|(x, _)| Some(*x)).collect());
        }
        Some(self.rows.iter().map(|(_, v)| v[idx - 1]).collect())
    }
}

pub(crate) fn describe_scenario(s: &Scenario) -> Vec<String> {
    let g = &s.geometry;
    let a = &s.atmosphere;
    vec![
        format!(
            "geometry: range {} km, elevation {} deg, tilt {} deg",
            g.range().km(),
            g.elevation_deg(),
            g.tilt_deg()
        ),
        format!(
            "atmosphere: dry pressure {} hPa, temperature {} K, vapour density {} g/m3",
            a.dry_pressure.hpa(),
            a.temperature.kelvin(),
            a.vapour_density.grams_per_m3()
        ),
        format!("fog temperature: {} K", s.fog.temperature.kelvin()),
    ]
}

pub(crate) fn model_line(q: Quantity) -> &'static str {
    match q {
        Quantity::Fspl => "model: free-space path loss, 20log10(d_km) + 20log10(f_GHz) + 92.45",
        Quantity::Rain => "model: ITU-R P.838-3 rain specific attenuation",
        Quantity::Fog => "model: ITU-R P.840 double-Debye fog attenuation (capped at 200 GHz)",
        Quantity::Gas => "model: ITU-R P.676-10 line-by-line gaseous attenuation",
    }
}

/// Evaluate a sweep against a base scenario supplying the fixed parameters.
pub fn run(spec: &SweepSpec, base: &Scenario) -> CliResult<Table> {
    spec.validate()?;
    let grid = linear_grid(spec.start, spec.stop, spec.step)?;

    let rows = grid
        .par_iter()
        .map(|&x| -> CliResult<(f64, Vec<Option<f64>>)> {
            let values = spec
                .family
                .iter()
                .map(|&member| point(spec, base, x, member))
                .collect::<CliResult<Vec<_>>>()?;
            Ok((x, values))
        })
        .collect::<CliResult<Vec<_>>>()?;

    let mut header = vec![spec.axis.column().to_owned()];
    header.extend(spec.family.iter().map(|&v| spec.family_label(v)));

    let mut comments = vec![
        format!("mmwave {} sweep", spec.quantity),
        model_line(spec.quantity).to_owned(),
        format!(
            "axis: {} from {} to {} step {}",
            spec.axis.column(),
            spec.start,
            spec.stop,
            spec.step
        ),
    ];
    if spec.axis == Axis::Distance && spec.quantity != Quantity::Fspl {
        comments.push(format!("frequency: {} GHz", base.frequency.ghz()));
    }
    comments.extend(describe_scenario(base));
    Ok(Table {
        comments,
        header,
        rows,
    })
}

fn point(spec: &SweepSpec, base: &Scenario, x: f64, member: f64) -> CliResult<Option<f64>> {
    let (frequency, distance) = match spec.axis {
        Axis::Frequency => (Frequency::new(x)?, None),
        Axis::Distance => (base.frequency, Some(Distance::new(x)?)),
    };
    let per_path = |gamma: f64| match distance {
        Some(d) => rain::path_attenuation(gamma, d),
        None => gamma,
    };
    let value = match spec.quantity {
        Quantity::Fspl => match spec.axis {
            Axis::Frequency => Some(fspl_db(frequency, Distance::new(member)?)),
            Axis::Distance => Some(fspl_db(Frequency::new(member)?, distance.unwrap())),
        },
        Quantity::Rain => {
            let rate = RainRate::new(member)?;
            let gamma = rain::rain_specific_attenuation(frequency, rate, &base.geometry)?;
            Some(per_path(gamma))
        }
        Quantity::Fog => {
            if frequency.ghz() > fog::MAX_FREQUENCY_GHZ {
                None
            } else {
                let cond =
                    FogConditions::new(LiquidWaterDensity::new(member)?, base.fog.temperature);
                Some(per_path(fog::fog_attenuation(&cond, frequency)?))
            }
        }
        Quantity::Gas => {
            let atm = GasAtmosphere {
                vapour_density: VapourDensity::new(member)?,
                ..base.atmosphere
            };
            Some(per_path(gas::specific_attenuation(frequency, &atm)?.total))
        }
    };
    Ok(value)
}
