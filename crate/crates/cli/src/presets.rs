//! Stock figure configurations.
//!
//! Every preset uses a horizontally polarized, zero-elevation 1 km link at
//! 15 °C in the standard atmosphere (1013.25 hPa dry air, 7.5 g/m³ vapour).

use mmwave_core::gas::{self, GasAtmosphere};
use mmwave_core::quantities::{Distance, Frequency, LinkGeometry};
use mmwave_core::Scenario;

use crate::args::Figure;
use crate::error::{CliError, CliResult};
use crate::sweep::{self, Axis, Quantity, SweepSpec, Table};

pub const FIG2_FREQUENCIES_GHZ: [f64; 3] = [2.4, 28.0, 100.0];
pub const FIG3_DISTANCES_KM: [f64; 3] = [0.1, 1.0, 10.0];
pub const FIG4_RAIN_RATES: [f64; 6] = [0.25, 1.0, 4.0, 16.0, 50.0, 100.0];
pub const FIG5_WATER_DENSITIES: [f64; 4] = [0.05, 0.1, 0.25, 0.5];

pub fn base_scenario() -> Scenario {
    Scenario::new(
        Frequency::new(28.0).expect("valid frequency"),
        LinkGeometry::horizontal(Distance::new(1.0).expect("valid distance")),
    )
}

/// The sweep behind a family-based figure. `Fig6` has no family and returns `None`.
pub fn spec(figure: Figure) -> Option<SweepSpec> {
    let (quantity, axis, start, stop, step, family): (_, _, _, _, _, &[f64]) = match figure {
        Figure::Fig2 => (
            Quantity::Fspl,
            Axis::Distance,
            0.01,
            10.0,
            0.01,
            &FIG2_FREQUENCIES_GHZ,
        ),
        Figure::Fig3 => (
            Quantity::Fspl,
            Axis::Frequency,
            1.0,
            300.0,
            0.5,
            &FIG3_DISTANCES_KM,
        ),
        Figure::Fig4 => (
            Quantity::Rain,
            Axis::Frequency,
            1.0,
            300.0,
            0.5,
            &FIG4_RAIN_RATES,
        ),
        Figure::Fig5 => (
            Quantity::Fog,
            Axis::Frequency,
            1.0,
            300.0,
            0.5,
            &FIG5_WATER_DENSITIES,
        ),
        Figure::Fig6 => return None,
    };
    Some(SweepSpec {
        quantity,
        axis,
        start,
        stop,
        step,
        family: family.to_vec(),
    })
}

pub const FIG6_START_GHZ: f64 = 1.0;
pub const FIG6_STOP_GHZ: f64 = 300.0;
pub const FIG6_STEP_GHZ: f64 = 0.1;

pub fn run(figure: Figure, family: Option<Vec<f64>>, step: Option<f64>) -> CliResult<Table> {
    let base = base_scenario();
    let Some(mut spec) = spec(figure) else {
        if family.is_some() {
            return Err(CliError::Input(
                "fig6 has no curve family to override".into(),
            ));
        }
        return gas_spectrum(&base.atmosphere, step.unwrap_or(FIG6_STEP_GHZ));
    };
    if let Some(family) = family {
        spec.family = family;
    }
    if let Some(step) = step {
        spec.step = step;
    }
    sweep::run(&spec, &base)
}

fn gas_spectrum(atm: &GasAtmosphere, step: f64) -> CliResult<Table> {
    if step.is_nan() || step <= 0.0 {
        return Err(CliError::Input(format!(
            "sweep step must be > 0, got {step}"
        )));
    }
    let spectrum = gas::absorption_spectrum(atm, FIG6_START_GHZ, FIG6_STOP_GHZ, step)?;
    let rows = spectrum
        .samples()
        .iter()
        .map(|s| {
            let a = s.attenuation;
            (
                s.frequency.ghz(),
                vec![Some(a.oxygen), Some(a.water), Some(a.total)],
            )
        })
        .collect();
    let mut comments = vec![
        "mmwave gas spectrum".to_owned(),
        sweep::model_line(Quantity::Gas).to_owned(),
        format!("axis: frequency_ghz from {FIG6_START_GHZ} to {FIG6_STOP_GHZ} step {step}"),
    ];
    comments.extend(sweep::describe_scenario(&base_scenario()));
    Ok(Table {
        comments,
        header: [
            "frequency_ghz",
            "oxygen_db_per_km",
            "water_db_per_km",
            "total_db_per_km",
        ]
        .map(String::from)
        .to_vec(),
        rows,
    })
}
