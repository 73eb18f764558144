//! Embedded coefficient tables and their load-time integrity checks.

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// A plain-text data table compiled into the library.
#[derive(Debug, Clone, Copy)]
pub struct Asset {
    pub name: &'static str,
    pub text: &'static str,
    /// Lower-case hex SHA-256 of `text`.
    pub sha256: &'static str,
}

pub const P838_COEFFICIENTS: Asset = Asset {
    name: "p838_coefficients.csv",
    text: include_str!("../data/p838_coefficients.csv"),
    sha256: "7da86f711c17126b714e2c037914f94f97c455a6be823f926746d95c688a80ce",
};

pub const P676_OXYGEN_LINES: Asset = Asset {
    name: "p676_oxygen_lines.csv",
    text: include_str!("../data/p676_oxygen_lines.csv"),
    sha256: "48ae26c0454a1ca71b3b840638e1667c430612d7c6d18ba28573268aa8de1806",
};

pub const P676_WATER_LINES: Asset = Asset {
    name: "p676_water_lines.csv",
    text: include_str!("../data/p676_water_lines.csv"),
    sha256: "b46eda4db2abf199d80401afe63dd6c9b57f4b0746ea9129dadc5f8381c2ec72",
};

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

pub fn verify_checksum(name: &str, text: &str, expected: &str) -> Result<()> {
    let actual = sha256_hex(text);
    if actual.eq_ignore_ascii_case(expected) {
        Ok(())
    } else {
        Err(Error::asset(
            name,
            format!("checksum mismatch: expected {expected}, got {actual}"),
        ))
    }
}

impl Asset {
    pub fn verified_text(&self) -> Result<&'static str> {
        verify_checksum(self.name, self.text, self.sha256)?;
        Ok(self.text)
    }

    /// First `#` comment line, which names the source recommendation and version.
    pub fn version_header(&self) -> &'static str {
        version_header(self.text).unwrap_or("")
    }
}

pub(crate) fn version_header(text: &str) -> Option<&str> {
    text.lines()
        .find_map(|l| l.strip_prefix('#'))
        .map(str::trim)
}

/// Parse a `#`-commented CSV table, checking the header row.
pub(crate) fn read_table(
    name: &str,
    text: &str,
    expected_header: &[&str],
) -> Result<Vec<csv::StringRecord>> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| Error::asset(name, e.to_string()))?
        .clone();
    if header.iter().ne(expected_header.iter().copied()) {
        return Err(Error::asset(
            name,
            format!(
                "unexpected header {:?}, expected {:?}",
                header, expected_header
            ),
        ));
    }
    reader
        .records()
        .map(|r| r.map_err(|e| Error::asset(name, e.to_string())))
        .collect()
}

pub(crate) fn field_f64(name: &str, record: &csv::StringRecord, idx: usize) -> Result<f64> {
    let raw = record.get(idx).unwrap_or("");
    raw.parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| {
            let line = record.position().map_or(0, |p| p.line());
            Error::asset(
                name,
                format!("line {line}: bad number {raw:?} in column {idx}"),
            )
        })
}
