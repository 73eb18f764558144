use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use mmwave_core::budget::{band_series, classify_series};
use mmwave_core::fog::{self, FogConditions};
use mmwave_core::gas::{self, GasAtmosphere};
use mmwave_core::quantities::{
    Distance, Frequency, LinkGeometry, LiquidWaterDensity, Pressure, RainRate, Temperature,
    VapourDensity,
};
use mmwave_core::{evaluate, fspl_db, rain, BandBasis, Mechanisms, Scenario};

use crate::args::{
    AtmosphereArgs, BandsArgs, Basis, BudgetArgs, Command, FogArgs, FsplArgs, GasArgs, PresetArgs,
    RainArgs, SweepArgs,
};
use crate::bands;
use crate::error::{CliError, CliResult};
use crate::presets;
use crate::scenario_file::ScenarioFile;
use crate::sweep::{self, SweepSpec, Table};

/// Execute one subcommand, writing human-readable output to `out`.
pub fn dispatch(command: Command, out: &mut dyn Write) -> CliResult<()> {
    match command {
        Command::Fspl(a) => fspl(a, out),
        Command::Rain(a) => rain(a, out),
        Command::Fog(a) => fog(a, out),
        Command::Gas(a) => gas(a, out),
        Command::Budget(a) => budget(a, out),
        Command::Sweep(a) => sweep(a, out),
        Command::Bands(a) => bands(a, out),
        Command::Preset(a) => preset(a, out),
    }
}

fn stdout_err(e: std::io::Error) -> CliError {
    CliError::io("<stdout>", e)
}

fn fspl(a: FsplArgs, out: &mut dyn Write) -> CliResult<()> {
    let loss = fspl_db(Frequency::new(a.freq_ghz)?, Distance::new(a.dist_km)?);
    writeln!(out, "{loss:.2} dB").map_err(stdout_err)
}

fn rain(a: RainArgs, out: &mut dyn Write) -> CliResult<()> {
    let geom = LinkGeometry::new(Distance::new(1.0)?, a.elevation_deg, a.tilt_deg)?;
    let gamma = rain::rain_specific_attenuation(
        Frequency::new(a.freq_ghz)?,
        RainRate::new(a.rate)?,
        &geom,
    )?;
    writeln!(out, "{gamma:.4} dB/km").map_err(stdout_err)
}

fn fog(a: FogArgs, out: &mut dyn Write) -> CliResult<()> {
    let cond = FogConditions::new(
        LiquidWaterDensity::new(a.density)?,
        Temperature::from_celsius(a.temp_c)?,
    );
    let gamma = fog::fog_attenuation(&cond, Frequency::new(a.freq_ghz)?)?;
    writeln!(out, "{gamma:.4} dB/km").map_err(stdout_err)
}

fn atmosphere(a: &AtmosphereArgs) -> CliResult<GasAtmosphere> {
    Ok(GasAtmosphere::new(
        Pressure::new(a.pressure_hpa)?,
        Temperature::from_celsius(a.air_temp_c)?,
        VapourDensity::new(a.rho)?,
    ))
}

fn gas(a: GasArgs, out: &mut dyn Write) -> CliResult<()> {
    let g = gas::specific_attenuation(Frequency::new(a.freq_ghz)?, &atmosphere(&a.atmosphere)?)?;
    writeln!(
        out,
        "{:.4} dB/km (oxygen {:.4} dB/km, water vapour {:.4} dB/km)",
        g.total, g.oxygen, g.water
    )
    .map_err(stdout_err)
}

fn budget(a: BudgetArgs, out: &mut dyn Write) -> CliResult<()> {
    let scenario = match &a.scenario {
        Some(path) => ScenarioFile::load(path)?.scenario.to_scenario()?,
        None => {
            let (Some(f), Some(d)) = (a.freq_ghz, a.dist_km) else {
                return Err(CliError::Input(
                    "--freq-ghz and --dist-km are required".into(),
                ));
            };
            let geometry = LinkGeometry::new(Distance::new(d)?, a.elevation_deg, a.tilt_deg)?;
            Scenario::new(Frequency::new(f)?, geometry)
                .with_rain(RainRate::new(a.rate)?)
                .with_fog(FogConditions::new(
                    LiquidWaterDensity::new(a.density)?,
                    Temperature::from_celsius(a.fog_temp_c)?,
                ))
                .with_atmosphere(atmosphere(&a.atmosphere)?)
                .with_mechanisms(Mechanisms {
                    rain: !a.no_rain,
                    fog: !a.no_fog,
                    gas: !a.no_gas,
                })
        }
    };
    let b = evaluate(&scenario)?;
    let on = |enabled: bool| if enabled { "" } else { " (disabled)" };
    let m = scenario.mechanisms;
    let text = format!(
        "frequency   {} GHz\nrange       {} km\nfree space  {:.2} dB\nrain        {:.2} dB{}\nfog         {:.2} dB{}\ngas         {:.2} dB{}\ntotal       {:.2} dB\n",
        scenario.frequency.ghz(),
        scenario.geometry.range().km(),
        b.fspl_db,
        b.rain_db,
        on(m.rain),
        b.fog_db,
        on(m.fog),
        b.gas_db,
        on(m.gas),
        b.total_db,
    );
    out.write_all(text.as_bytes()).map_err(stdout_err)
}

fn sweep(a: SweepArgs, out: &mut dyn Write) -> CliResult<()> {
    let (spec, base) = match &a.scenario {
        Some(path) => {
            let file = ScenarioFile::load(path)?;
            let spec = file.sweep.ok_or_else(|| {
                CliError::Input(format!("{} has no \"sweep\" section", path.display()))
            })?;
            (spec, file.scenario.to_scenario()?)
        }
        None => {
            let (Some(quantity), Some(range), Some(family)) = (a.quantity, a.range, a.family)
            else {
                return Err(CliError::Input(
                    "--quantity, --range and --family are required".into(),
                ));
            };
            let spec = SweepSpec {
                quantity,
                axis: a.axis,
                start: range.start,
                stop: range.stop,
                step: range.step,
                family,
            };
            let geometry = LinkGeometry::new(Distance::new(1.0)?, a.elevation_deg, a.tilt_deg)?;
            let base = Scenario::new(Frequency::new(a.freq_ghz)?, geometry)
                .with_fog(FogConditions::new(
                    LiquidWaterDensity::new(0.0)?,
                    Temperature::from_celsius(a.fog_temp_c)?,
                ))
                .with_atmosphere(atmosphere(&a.atmosphere)?);
            (spec, base)
        }
    };
    let table = sweep::run(&spec, &base)?;
    emit_table(&table, a.out.as_deref(), out)
}

fn bands(a: BandsArgs, out: &mut dyn Write) -> CliResult<()> {
    let thresholds = bands::thresholds(a.gamma_low, a.gamma_high)?;
    let atm = atmosphere(&a.atmosphere)?;
    let (basis, label) = match a.basis {
        Basis::Gas => (BandBasis::Gas, "gas".to_owned()),
        Basis::Total => (
            BandBasis::Total {
                rain_rate: RainRate::new(a.rate)?,
                fog: FogConditions::new(
                    LiquidWaterDensity::new(a.density)?,
                    Temperature::from_celsius(a.fog_temp_c)?,
                ),
                geometry: LinkGeometry::horizontal(Distance::new(1.0)?),
            },
            format!(
                "total (gas + rain {} mm/h + fog {} g/m3)",
                a.rate, a.density
            ),
        ),
    };
    let (freqs, gammas) = band_series(&atm, basis, a.freq.start, a.freq.stop, a.freq.step)?;
    let report = classify_series(&freqs, &gammas, thresholds, a.min_run)?;
    bands::write_table(&report, &label, a.min_run, &mut *out).map_err(stdout_err)?;
    if let Some(path) = &a.csv {
        write_file(path, |w| bands::write_csv(&report, &label, w))?;
    }
    Ok(())
}

fn preset(a: PresetArgs, out: &mut dyn Write) -> CliResult<()> {
    let table = presets::run(a.figure, a.family, a.step)?;
    emit_table(&table, a.out.as_deref(), out)
}

fn emit_table(table: &Table, path: Option<&Path>, out: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(path) => write_file(path, |w| table.write_csv(w)),
        None => table.write_csv(out).map_err(stdout_err),
    }
}

fn write_file(
    path: &Path,
    body: impl FnOnce(&mut BufWriter<File>) -> std::io::Result<()>,
) -> CliResult<()> {
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut w = BufWriter::new(file);
    body(&mut w).map_err(|e| CliError::io(path, e))
}
