//! Band report rendering.

use std::io::Write;

use mmwave_core::budget::DEFAULT_MIN_RUN;
use mmwave_core::{BandReport, BandThresholds};

use crate::format::sig6;

/// Resolve the threshold pair from optional flags. A lone `--gamma-low` at or
/// above the default upper boundary leaves no room for a moderate class, so
/// the upper boundary is lifted to infinity.
pub fn thresholds(low: Option<f64>, high: Option<f64>) -> mmwave_core::Result<BandThresholds> {
    let low = low.unwrap_or(BandThresholds::DEFAULT_LOW);
    let high = match high {
        Some(h) => h,
        None if low >= BandThresholds::DEFAULT_HIGH => f64::INFINITY,
        None => BandThresholds::DEFAULT_HIGH,
    };
    BandThresholds::new(low, high)
}

pub fn write_table<W: Write>(
    report: &BandReport,
    basis: &str,
    min_run: usize,
    mut out: W,
) -> std::io::Result<()> {
    let t = report.thresholds;
    writeln!(
        out,
        "basis: {basis}; window < {} dB/km <= moderate < {} dB/km <= blocked",
        t.low(),
        t.high()
    )?;
    if min_run != DEFAULT_MIN_RUN {
        writeln!(out, "minimum run: {min_run} samples")?;
    }
    writeln!(
        out,
        "{:<9} {:>10} {:>10} {:>12} {:>12} {:>12}",
        "class", "start_ghz", "end_ghz", "min_db/km", "mean_db/km", "max_db/km"
    )?;
    for i in &report.intervals {
        writeln!(
            out,
            "{:<9} {:>10.1} {:>10.1} {:>12.4} {:>12.4} {:>12.4}",
            i.class.name(),
            i.start_ghz,
            i.end_ghz,
            i.min_db_per_km,
            i.mean_db_per_km,
            i.max_db_per_km
        )?;
    }
    out.flush()
}

pub fn write_csv<W: Write>(report: &BandReport, basis: &str, mut out: W) -> std::io::Result<()> {
    let t = report.thresholds;
    writeln!(out, "# mmwave band report")?;
    writeln!(out, "# basis: {basis}")?;
    writeln!(
        out,
        "# thresholds: low {} dB/km, high {} dB/km",
        t.low(),
        t.high()
    )?;
    writeln!(
        out,
        "class,start_ghz,end_ghz,samples,min_db_per_km,mean_db_per_km,max_db_per_km"
    )?;
    for i in &report.intervals {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            i.class.name(),
            sig6(i.start_ghz),
            sig6(i.end_ghz),
            i.samples,
            sig6(i.min_db_per_km),
            sig6(i.mean_db_per_km),
            sig6(i.max_db_per_km)
        )?;
    }
    out.flush()
}
