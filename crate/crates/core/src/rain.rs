//! Rain specific attenuation, `γ_R = k·R^α` (ITU-R P.838-3).
//!
//! The power-law coefficients come from the recommendation's log-Gaussian
//! regression in frequency, evaluated analytically rather than interpolated
//! from the printed table.

use std::sync::OnceLock;

use crate::assets::{self, Asset};
use crate::error::{check_range, Error, Result};
use crate::quantities::{Distance, Frequency, LinkGeometry, RainRate};

/// Frequency validity of the regression, GHz.
pub const MIN_FREQUENCY_GHZ: f64 = 1.0;
pub const MAX_FREQUENCY_GHZ: f64 = 1000.0;

const K_TERMS: usize = 4;
const ALPHA_TERMS: usize = 5;

/// One term `a·exp(−((x − b)/c)²)` of a regression sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianTerm {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// `Σ a_j·exp(−((x − b_j)/c_j)²) + m·x + c` with `x = log10(f_GHz)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegressionSeries {
    pub terms: Vec<GaussianTerm>,
    pub slope: f64,
    pub intercept: f64,
}

impl RegressionSeries {
    pub fn eval(&self, log10_f: f64) -> f64 {
        let sum: f64 = self
            .terms
            .iter()
            .map(|t| {
                let z = (log10_f - t.b) / t.c;
                t.a * (-z * z).exp()
            })
            .sum();
        sum + self.slope * log10_f + self.intercept
    }
}

/// Regression coefficients for `k_H`, `k_V`, `α_H` and `α_V`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegressionTable {
    pub version: String,
    pub k_h: RegressionSeries,
    pub k_v: RegressionSeries,
    pub alpha_h: RegressionSeries,
    pub alpha_v: RegressionSeries,
}

const HEADER: [&str; 7] = ["target", "term", "a_j", "b_j", "c_j", "m", "c"];

/// Indexed Gaussian terms plus the optional (m, c) tail, as read so far.
type PartialSeries = (Vec<(usize, GaussianTerm)>, Option<(f64, f64)>);

impl RegressionTable {
    /// The embedded P.838-3 table. Its checksum is verified on first use.
    pub fn p838_3() -> &'static RegressionTable {
        static TABLE: OnceLock<RegressionTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            Self::load_verified(&assets::P838_COEFFICIENTS)
                .expect("embedded P.838 coefficient asset is corrupt")
        })
    }

    pub fn load_verified(asset: &Asset) -> Result<Self> {
        Self::parse(asset.name, asset.verified_text()?)
    }

    /// Parse a coefficient table without checksum verification.
    pub fn parse(name: &str, text: &str) -> Result<Self> {
        let records = assets::read_table(name, text, &HEADER)?;
        let mut series: [PartialSeries; 4] = Default::default();
        for rec in &records {
            let slot = match rec.get(0).unwrap_or("") {
                "kH" => 0,
                "kV" => 1,
                "aH" => 2,
                "aV" => 3,
                other => {
                    return Err(Error::asset(name, format!("unknown target {other:?}")));
                }
            };
            let term = rec
                .get(1)
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or_else(|| Error::asset(name, "term index must be a positive integer"))?;
            let f = |i| assets::field_f64(name, rec, i);
            let gt = GaussianTerm {
                a: f(2)?,
                b: f(3)?,
                c: f(4)?,
            };
            if gt.c == 0.0 {
                return Err(Error::asset(name, "c_j must be non-zero"));
            }
            let tail = (f(5)?, f(6)?);
            let (terms, shared) = &mut series[slot];
            match shared {
                Some(prev) if *prev != tail => {
                    return Err(Error::asset(
                        name,
                        format!("inconsistent affine tail for {}", &rec[0]),
                    ));
                }
                _ => *shared = Some(tail),
            }
            terms.push((term, gt));
        }

        let names = ["kH", "kV", "aH", "aV"];
        let expected = [K_TERMS, K_TERMS, ALPHA_TERMS, ALPHA_TERMS];
        let mut built = Vec::with_capacity(4);
        for ((mut terms, tail), (label, count)) in
            series.into_iter().zip(names.into_iter().zip(expected))
        {
            terms.sort_by_key(|(i, _)| *i);
            let indices_ok = terms.iter().enumerate().all(|(pos, (i, _))| *i == pos + 1);
            if terms.len() != count || !indices_ok {
                return Err(Error::asset(
                    name,
                    format!("{label}: expected terms 1..={count}, found {}", terms.len()),
                ));
            }
            let (slope, intercept) = tail.expect("non-empty series has a tail");
            built.push(RegressionSeries {
                terms: terms.into_iter().map(|(_, t)| t).collect(),
                slope,
                intercept,
            });
        }
        let mut it = built.into_iter();
        Ok(RegressionTable {
            version: assets::version_header(text).unwrap_or("").to_owned(),
            k_h: it.next().unwrap(),
            k_v: it.next().unwrap(),
            alpha_h: it.next().unwrap(),
            alpha_v: it.next().unwrap(),
        })
    }
}

/// Horizontal and vertical power-law coefficients at one frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HvCoefficients {
    pub k_h: f64,
    pub alpha_h: f64,
    pub k_v: f64,
    pub alpha_v: f64,
}

/// Power-law pair `(k, α)` for one frequency and polarization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RainCoefficients {
    k: f64,
    alpha: f64,
}

impl RainCoefficients {
    pub fn new(k: f64, alpha: f64) -> Result<Self> {
        if !(k.is_finite() && k > 0.0) {
            return Err(Error::InvalidQuantity {
                quantity: "rain coefficient k",
                value: k,
                reason: "must be > 0",
            });
        }
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(Error::InvalidQuantity {
                quantity: "rain coefficient alpha",
                value: alpha,
                reason: "must be > 0",
            });
        }
        Ok(Self { k, alpha })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

pub fn coefficients_hv(f: Frequency, table: &RegressionTable) -> Result<HvCoefficients> {
    check_range(
        "ITU-R P.838 rain",
        "frequency (GHz)",
        f.ghz(),
        MIN_FREQUENCY_GHZ,
        MAX_FREQUENCY_GHZ,
    )?;
    let x = f.ghz().log10();
    Ok(HvCoefficients {
        k_h: 10f64.powf(table.k_h.eval(x)),
        alpha_h: table.alpha_h.eval(x),
        k_v: 10f64.powf(table.k_v.eval(x)),
        alpha_v: table.alpha_v.eval(x),
    })
}

/// Cosine of an angle in degrees, exact at multiples of 90°.
fn cos_deg(deg: f64) -> f64 {
    let r = deg.rem_euclid(360.0);
    if r == 0.0 {
        1.0
    } else if r == 90.0 || r == 270.0 {
        0.0
    } else if r == 180.0 {
        -1.0
    } else {
        deg.to_radians().cos()
    }
}

/// Combine H/V coefficients for an arbitrary elevation and tilt:
///
/// `k = [k_H + k_V + (k_H − k_V)·cos²θ·cos 2τ] / 2`
/// `α = [k_H·α_H + k_V·α_V + (k_H·α_H − k_V·α_V)·cos²θ·cos 2τ] / 2k`
pub fn combine_polarization(hv: &HvCoefficients, geom: &LinkGeometry) -> Result<RainCoefficients> {
    let cos_el = cos_deg(geom.elevation_deg());
    let g = cos_el * cos_el * cos_deg(2.0 * geom.tilt_deg());
    if g == 1.0 {
        return RainCoefficients::new(hv.k_h, hv.alpha_h);
    }
    if g == -1.0 {
        return RainCoefficients::new(hv.k_v, hv.alpha_v);
    }
    let k = (hv.k_h + hv.k_v + (hv.k_h - hv.k_v) * g) / 2.0;
    let ka_h = hv.k_h * hv.alpha_h;
    let ka_v = hv.k_v * hv.alpha_v;
    let alpha = (ka_h + ka_v + (ka_h - ka_v) * g) / (2.0 * k);
    RainCoefficients::new(k, alpha)
}

/// `γ_R = k·R^α` in dB/km.
pub fn specific_attenuation(coeff: &RainCoefficients, rate: RainRate) -> f64 {
    let r = rate.mm_per_hour();
    if r == 0.0 {
        0.0
    } else {
        coeff.k * r.powf(coeff.alpha)
    }
}

/// Attenuation over a uniform path, `γ·d`. No effective path-length reduction.
pub fn path_attenuation(gamma_db_per_km: f64, d: Distance) -> f64 {
    gamma_db_per_km * d.km()
}

/// Specific attenuation for a frequency, rate and geometry using the embedded table.
pub fn rain_specific_attenuation(f: Frequency, rate: RainRate, geom: &LinkGeometry) -> Result<f64> {
    let hv = coefficients_hv(f, RegressionTable::p838_3())?;
    let coeff = combine_polarization(&hv, geom)?;
    Ok(specific_attenuation(&coeff, rate))
}
