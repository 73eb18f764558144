//! Acceptance criteria, one test per criterion.
//!
//! Each test prints a single `criterion N: PASS|FAIL ...` line on stderr
//! before asserting, so `cargo test --test acceptance -- --nocapture` gives a
//! compact summary.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use mmwave_core::budget::{classify_series, BandClass, BandThresholds, DEFAULT_MIN_RUN};
use mmwave_core::fog::{fog_attenuation, FogConditions, MAX_FREQUENCY_GHZ};
use mmwave_core::gas::{absorption_spectrum, specific_attenuation, GasAtmosphere};
use mmwave_core::quantities::{
    Distance, Frequency, LinkGeometry, LiquidWaterDensity, Pressure, RainRate, Temperature,
    VapourDensity,
};
use mmwave_core::rain::{coefficients_hv, rain_specific_attenuation, RegressionTable};
use mmwave_core::{band_report, fspl_db, BandBasis};
use rand::{rngs::StdRng, Rng, SeedableRng};

fn report(n: u32, title: &str, failures: &[String]) {
    if failures.is_empty() {
        eprintln!("criterion {n}: PASS {title}");
    } else {
        eprintln!("criterion {n}: FAIL {title}");
        for f in failures {
            eprintln!("    {f}");
        }
        panic!("criterion {n} failed: {}", failures.join("; "));
    }
}

fn check(failures: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok {
        failures.push(msg());
    }
}

fn ghz(f: f64) -> Frequency {
    Frequency::new(f).unwrap()
}

fn km(d: f64) -> Distance {
    Distance::new(d).unwrap()
}

fn horizontal_1km() -> LinkGeometry {
    LinkGeometry::horizontal(km(1.0))
}

fn grid(start: f64, stop: f64, step: f64) -> Vec<f64> {
    mmwave_core::grid::linear_grid(start, stop, step).unwrap()
}

#[test]
fn criterion_1_fspl_constants() {
    let mut fails = Vec::new();
    let base = fspl_db(ghz(1.0), km(1.0));
    check(&mut fails, (base - 92.45).abs() <= 1e-9, || {
        format!("FSPL(1 GHz, 1 km) = {base}")
    });
    for x in [0.01, 0.1, 1.0, 2.4, 28.0, 100.0] {
        let per_decade_d = fspl_db(ghz(x), km(10.0)) - fspl_db(ghz(x), km(1.0));
        let per_decade_f = fspl_db(ghz(10.0 * x), km(1.0)) - fspl_db(ghz(x), km(1.0));
        check(&mut fails, (per_decade_d - 20.0).abs() <= 1e-9, || {
            format!("distance decade at {x} GHz: {per_decade_d}")
        });
        check(&mut fails, (per_decade_f - 20.0).abs() <= 1e-9, || {
            format!("frequency decade from {x} GHz: {per_decade_f}")
        });
    }
    let hundred_m_to_1km = fspl_db(ghz(28.0), km(1.0)) - fspl_db(ghz(28.0), km(0.1));
    check(&mut fails, (hundred_m_to_1km - 20.0).abs() <= 1e-9, || {
        format!("100 m -> 1 km: {hundred_m_to_1km}")
    });
    report(1, "FSPL 92.45 dB at 1 GHz/1 km, +20 dB per decade", &fails);
}

#[test]
fn criterion_2_fspl_frequency_deltas() {
    let mut fails = Vec::new();
    for d in [0.01, 0.1, 1.0, 10.0] {
        let d28 = fspl_db(ghz(28.0), km(d)) - fspl_db(ghz(2.4), km(d));
        let d100 = fspl_db(ghz(100.0), km(d)) - fspl_db(ghz(2.4), km(d));
        check(&mut fails, (d28 - 21.34).abs() <= 0.05, || {
            format!("28 vs 2.4 GHz at {d} km: {d28}")
        });
        check(&mut fails, (d100 - 32.39).abs() <= 0.05, || {
            format!("100 vs 2.4 GHz at {d} km: {d100}")
        });
    }
    let span = fspl_db(ghz(28.0), km(10.0)) - fspl_db(ghz(28.0), km(0.1));
    check(&mut fails, (span - 40.0).abs() <= 1e-9, || {
        format!("100 m -> 10 km: {span}")
    });
    report(
        2,
        "FSPL deltas 21.34 / 32.39 dB vs 2.4 GHz, 40.00 dB for 100 m -> 10 km",
        &fails,
    );
}

#[test]
fn criterion_3_rain_checkpoint_and_table() {
    let mut fails = Vec::new();
    let rates: Vec<f64> = grid(16.0, 30.0, 0.5);
    let hits: Vec<(f64, f64)> = rates
        .iter()
        .map(|&r| {
            let g =
                rain_specific_attenuation(ghz(28.0), RainRate::new(r).unwrap(), &horizontal_1km())
                    .unwrap();
            (r, g)
        })
        .filter(|(_, g)| (4.0..=6.0).contains(g))
        .collect();
    check(&mut fails, !hits.is_empty(), || {
        "no rate in [16, 30] mm/h gives 4-6 dB/km".into()
    });
    if let Some((r, g)) = hits.first() {
        eprintln!(
            "    28 GHz H: {g:.3} dB/km at {r} mm/h ({} rates in band)",
            hits.len()
        );
    }

    let printed: [(f64, [f64; 4], [usize; 4]); 5] = [
        (10.0, [0.01217, 1.2571, 0.01129, 1.2156], [5, 4, 5, 4]),
        (20.0, [0.09164, 1.0568, 0.09611, 0.9847], [5, 4, 5, 4]),
        (28.0, [0.2051, 0.9679, 0.1964, 0.9277], [4, 4, 4, 4]),
        (30.0, [0.2403, 0.9485, 0.2291, 0.9129], [4, 4, 4, 4]),
        (100.0, [1.3671, 0.6815, 1.3680, 0.6765], [4, 4, 4, 4]),
    ];
    let table = RegressionTable::p838_3();
    for (f, want, decimals) in printed {
        let c = coefficients_hv(ghz(f), table).unwrap();
        let got = [c.k_h, c.alpha_h, c.k_v, c.alpha_v];
        for i in 0..4 {
            let tol = 0.5 * 10f64.powi(-(decimals[i] as i32)) * (1.0 + 1e-9);
            check(&mut fails, (got[i] - want[i]).abs() <= tol, || {
                format!(
                    "coefficient {i} at {f} GHz: {} vs printed {}",
                    got[i], want[i]
                )
            });
        }
    }
    report(
        3,
        "rain 4-6 dB/km at 28 GHz for a rate in [16, 30] mm/h; regression matches printed table",
        &fails,
    );
}

#[test]
fn criterion_4_rain_curve_ordering() {
    let started = Instant::now();
    let mut fails = Vec::new();
    let rates = [0.25, 1.0, 4.0, 16.0, 50.0];
    let freqs = grid(10.0, 100.0, 0.1);
    let curves: Vec<Vec<f64>> = rates
        .iter()
        .map(|&r| {
            freqs
                .iter()
                .map(|&f| {
                    rain_specific_attenuation(ghz(f), RainRate::new(r).unwrap(), &horizontal_1km())
                        .unwrap()
                })
                .collect()
        })
        .collect();
    for (i, &f) in freqs.iter().enumerate() {
        for w in 0..rates.len() - 1 {
            let (lo, hi) = (curves[w][i], curves[w + 1][i]);
            check(&mut fails, hi > lo, || {
                format!(
                    "{f} GHz: {} mm/h gives {hi} <= {lo} at {} mm/h",
                    rates[w + 1],
                    rates[w]
                )
            });
        }
    }
    for (c, r) in curves.iter().zip(rates) {
        for i in 1..freqs.len() {
            check(&mut fails, c[i] > c[i - 1], || {
                format!("{r} mm/h not increasing at {} GHz", freqs[i])
            });
        }
    }
    let elapsed = started.elapsed();
    check(&mut fails, elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    });
    report(
        4,
        "rain curves strictly ordered by rate and increasing over 10-100 GHz",
        &fails,
    );
}

#[test]
fn criterion_5_fog_linearity() {
    let mut fails = Vec::new();
    let mut rng = StdRng::seed_from_u64(0x0f09);
    for _ in 0..20 {
        let f = rng.gen_range(1.0..=MAX_FREQUENCY_GHZ);
        let t = Temperature::from_kelvin(rng.gen_range(233.0..=313.0)).unwrap();
        let at = |m: f64| {
            fog_attenuation(
                &FogConditions::new(LiquidWaterDensity::new(m).unwrap(), t),
                ghz(f),
            )
            .unwrap()
        };
        let ratio = at(0.5) / at(0.05);
        check(&mut fails, (ratio - 10.0).abs() <= 1e-9, || {
            format!("ratio {ratio} at {f} GHz, {} K", t.kelvin())
        });
    }
    let t15 = Temperature::from_celsius(15.0).unwrap();
    let densities = [0.05, 0.1, 0.25, 0.5];
    for f in grid(1.0, 200.0, 0.5) {
        let values: Vec<f64> = densities
            .iter()
            .map(|&m| {
                fog_attenuation(
                    &FogConditions::new(LiquidWaterDensity::new(m).unwrap(), t15),
                    ghz(f),
                )
                .unwrap()
            })
            .collect();
        check(&mut fails, values.windows(2).all(|w| w[1] > w[0]), || {
            format!("density curves not ordered at {f} GHz: {values:?}")
        });
    }
    report(
        5,
        "fog gamma(0.5)/gamma(0.05) = 10 at 20 random points; denser fog dominates",
        &fails,
    );
}

fn is_local_min(g: &[f64], i: usize) -> bool {
    i > 0 && i + 1 < g.len() && g[i] < g[i - 1] && g[i] < g[i + 1]
}

#[test]
fn criterion_6_gas_spectrum_structure() {
    let mut fails = Vec::new();
    let atm = GasAtmosphere::standard();

    let started = Instant::now();
    let full = absorption_spectrum(&atm, 1.0, 300.0, 0.1).unwrap();
    let elapsed = started.elapsed();
    check(&mut fails, elapsed < Duration::from_secs(5), || {
        format!("full sweep took {elapsed:?}")
    });
    check(&mut fails, full.len() == 2991, || {
        format!("{} samples", full.len())
    });

    let freqs: Vec<f64> = full.frequencies().collect();
    let totals: Vec<f64> = full.totals().collect();
    let window = |lo: f64, hi: f64| -> Vec<usize> {
        (0..freqs.len())
            .filter(|&i| freqs[i] >= lo - 1e-9 && freqs[i] <= hi + 1e-9)
            .collect()
    };

    let oxygen = window(50.0, 70.0);
    let peak = *oxygen
        .iter()
        .max_by(|&&a, &&b| totals[a].total_cmp(&totals[b]))
        .unwrap();
    eprintln!(
        "    oxygen peak {:.3} dB/km at {:.1} GHz",
        totals[peak], freqs[peak]
    );
    check(&mut fails, (58.0..=62.0).contains(&freqs[peak]), || {
        format!("argmax at {} GHz", freqs[peak])
    });
    check(&mut fails, totals[peak] >= 10.0, || {
        format!("peak only {} dB/km", totals[peak])
    });

    for i in window(28.0, 38.0) {
        check(&mut fails, totals[i] < 0.3, || {
            format!("{} dB/km at {} GHz", totals[i], freqs[i])
        });
    }

    for (lo, hi) in [(70.0, 90.0), (120.0, 170.0), (200.0, 280.0)] {
        let minima: Vec<f64> = window(lo, hi)
            .into_iter()
            .filter(|&i| is_local_min(&totals, i) && freqs[i] > lo && freqs[i] < hi)
            .map(|i| freqs[i])
            .collect();
        check(&mut fails, !minima.is_empty(), || {
            format!("no local minimum inside {lo}-{hi} GHz")
        });
    }

    let water_line_visible = |rho: f64| {
        let a = GasAtmosphere::new(
            Pressure::new(1013.25).unwrap(),
            Temperature::from_celsius(15.0).unwrap(),
            VapourDensity::new(rho).unwrap(),
        );
        let s = absorption_spectrum(&a, 18.0, 26.0, 0.05).unwrap();
        let g: Vec<f64> = s.totals().collect();
        let f: Vec<f64> = s.frequencies().collect();
        (1..g.len() - 1).any(|i| g[i] > g[i - 1] && g[i] > g[i + 1] && (f[i] - 22.235).abs() < 1.0)
    };
    check(&mut fails, water_line_visible(7.5), || {
        "22.235 GHz line missing at 7.5 g/m3".into()
    });
    check(&mut fails, water_line_visible(1.0), || {
        "22.235 GHz line missing at 1 g/m3".into()
    });
    check(&mut fails, !water_line_visible(0.0), || {
        "22.235 GHz line present in dry air".into()
    });
    let dry = GasAtmosphere::new(
        Pressure::new(1013.25).unwrap(),
        Temperature::from_celsius(15.0).unwrap(),
        VapourDensity::new(0.0).unwrap(),
    );
    let w = specific_attenuation(ghz(22.235), &dry).unwrap().water;
    check(&mut fails, w == 0.0, || format!("dry-air water term {w}"));

    report(6, "gas spectrum: 60 GHz peak, quiet 28-38 GHz, minima in three windows, 22.235 GHz line iff rho > 0", &fails);
}

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden/oracle_points.csv")
}

#[test]
fn criterion_7_oracle_equivalence() {
    let mut fails = Vec::new();
    let mut reader = csv::Reader::from_path(golden_path()).unwrap();
    let (mut n_gas, mut n_fog) = (0, 0);
    let mut worst = 0.0_f64;
    for rec in reader.records() {
        let r = rec.unwrap();
        let num = |i: usize| r[i].parse::<f64>().unwrap();
        let (f, p1, p2, p3, want) = (num(1), num(2), num(3), num(4), num(5));
        let got = match &r[0] {
            kind @ ("gas_oxygen" | "gas_water") => {
                n_gas += 1;
                let atm = GasAtmosphere::new(
                    Pressure::new(p1).unwrap(),
                    Temperature::from_kelvin(p2).unwrap(),
                    VapourDensity::new(p3).unwrap(),
                );
                let g = specific_attenuation(ghz(f), &atm).unwrap();
                if kind == "gas_oxygen" {
                    g.oxygen
                } else {
                    g.water
                }
            }
            "fog" => {
                n_fog += 1;
                let cond = FogConditions::new(
                    LiquidWaterDensity::new(p2).unwrap(),
                    Temperature::from_kelvin(p1).unwrap(),
                );
                fog_attenuation(&cond, ghz(f)).unwrap()
            }
            _ => continue,
        };
        let rel = ((got - want) / want).abs();
        worst = worst.max(rel);
        check(&mut fails, rel <= 1e-4, || {
            format!("{} at {f} GHz: {got} vs {want}", &r[0])
        });
    }
    check(&mut fails, n_gas / 2 >= 20, || {
        format!("only {} gas points", n_gas / 2)
    });
    check(&mut fails, n_fog >= 20, || {
        format!("only {n_fog} fog points")
    });
    eprintln!(
        "    {} gas and {n_fog} fog points, worst relative deviation {worst:.2e}",
        n_gas / 2
    );
    report(
        7,
        "gas and fog agree with the independent oracle to 1e-4",
        &fails,
    );
}

#[test]
fn criterion_8_band_report() {
    let mut fails = Vec::new();
    let atm = GasAtmosphere::standard();
    let thresholds = BandThresholds::default();
    let report_ = band_report(&atm, BandBasis::Gas, 10.0, 300.0, 0.1, thresholds).unwrap();

    check(
        &mut fails,
        report_.covers(BandClass::Window, 28.0, 38.0),
        || "no Window interval covering 28-38 GHz".into(),
    );
    for f in [60.0, 183.0] {
        let hit = report_.interval_at(f).map(|i| i.class);
        check(&mut fails, hit == Some(BandClass::Blocked), || {
            format!("{f} GHz classified {hit:?}")
        });
    }

    let iv = &report_.intervals;
    check(&mut fails, (iv[0].start_ghz - 10.0).abs() < 1e-9, || {
        format!("starts at {}", iv[0].start_ghz)
    });
    let last = iv.last().unwrap();
    check(&mut fails, (last.end_ghz - 300.0).abs() < 1e-9, || {
        format!("ends at {}", last.end_ghz)
    });
    for w in iv.windows(2) {
        check(&mut fails, w[0].end_ghz == w[1].start_ghz, || {
            format!(
                "gap or overlap between {} and {} GHz",
                w[0].end_ghz, w[1].start_ghz
            )
        });
        check(&mut fails, w[0].class != w[1].class, || {
            format!("adjacent {} intervals", w[0].class)
        });
    }
    let samples: usize = iv.iter().map(|i| i.samples).sum();
    check(&mut fails, samples == 2901, || {
        format!("{samples} samples in report")
    });

    let freqs = grid(10.0, 300.0, 0.1);
    let gammas: Vec<f64> = freqs
        .iter()
        .map(|&f| specific_attenuation(ghz(f), &atm).unwrap().total)
        .collect();
    let rebuilt = classify_series(&freqs, &gammas, thresholds, DEFAULT_MIN_RUN).unwrap();
    check(&mut fails, rebuilt == report_, || {
        "report differs from classifying the raw series".into()
    });

    let out = Command::new(env!("CARGO_BIN_EXE_mmwave"))
        .arg("bands")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    check(&mut fails, out.status.success(), || {
        format!("bands exited {:?}", out.status.code())
    });
    let rows: Vec<(String, f64, f64)> = text
        .lines()
        .filter_map(|l| {
            let mut it = l.split_whitespace();
            let class = it.next()?.to_owned();
            let a = it.next()?.parse().ok()?;
            let b = it.next()?.parse().ok()?;
            Some((class, a, b))
        })
        .collect();
    let cli_has = |class: &str, f: f64| {
        rows.iter()
            .any(|(c, a, b)| c == class && *a <= f && f <= *b)
    };
    check(
        &mut fails,
        cli_has("window", 28.0) && cli_has("window", 38.0),
        || "CLI table lacks 28-38 GHz window".into(),
    );
    check(
        &mut fails,
        cli_has("blocked", 60.0) && cli_has("blocked", 183.0),
        || "CLI table lacks blocked rows".into(),
    );

    report(8, "band report: Window covers 28-38 GHz, Blocked at 60 and 183 GHz, intervals partition 10-300 GHz", &fails);
}

fn preset_csv(figure: &str, threads: Option<usize>) -> (Vec<u8>, Duration) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mmwave"));
    if let Some(n) = threads {
        cmd.args(["--threads", &n.to_string()]);
    }
    cmd.args(["preset", figure]);
    let started = Instant::now();
    let out = cmd.output().unwrap();
    let elapsed = started.elapsed();
    assert!(
        out.status.success(),
        "preset {figure}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    (out.stdout, elapsed)
}

#[test]
fn criterion_9_determinism() {
    let mut fails = Vec::new();
    for figure in ["fig2", "fig3", "fig4", "fig5", "fig6"] {
        let (first, t) = preset_csv(figure, None);
        let (second, _) = preset_csv(figure, None);
        let (one, _) = preset_csv(figure, Some(1));
        let (four, _) = preset_csv(figure, Some(4));
        check(&mut fails, !first.is_empty(), || {
            format!("{figure}: empty output")
        });
        check(&mut fails, first == second, || {
            format!("{figure}: two runs differ")
        });
        check(&mut fails, one == four, || {
            format!("{figure}: 1 vs 4 threads differ")
        });
        check(&mut fails, first == one, || {
            format!("{figure}: default vs 1 thread differ")
        });
        check(&mut fails, t < Duration::from_secs(5), || {
            format!("{figure}: took {t:?}")
        });
    }
    report(
        9,
        "every preset emits byte-identical CSV across runs and thread counts",
        &fails,
    );
}
