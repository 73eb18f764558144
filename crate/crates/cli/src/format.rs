//! Fixed numeric formatting for CSV output.

/// Significant digits written to CSV files.
pub const SIG_DIGITS: usize = 6;

/// Format with six significant digits in plain decimal notation, falling back
/// to scientific notation for very small or very large magnitudes.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    // Let the formatter do the rounding, then read back the decimal exponent.
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .unwrap_or(0);
    if (-5..SIG_DIGITS as i32).contains(&exp) {
        let decimals = (SIG_DIGITS as i32 - 1 - exp).max(0) as usize;
        format!("{:.*}", decimals, x)
    } else {
        sci
    }
}
