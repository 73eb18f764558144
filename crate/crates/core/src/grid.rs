use crate::error::{Error, Result};

// Absorbs representation error in (stop - start) / step, e.g. (300 - 1) / 0.1.
const COUNT_SLACK: f64 = 1e-9;

/// Inclusive linear grid `start, start + step, …` not exceeding `stop`.
///
/// Points are computed as `start + i·step` so no error accumulates along the
/// sweep. The length is `floor((stop − start)/step) + 1`.
pub fn linear_grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
        return Err(Error::InvalidInput("grid bounds must be finite".into()));
    }
    if step <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "grid step must be > 0, got {step}"
        )));
    }
    if start >= stop {
        return Err(Error::InvalidInput(format!(
            "grid start {start} must be below stop {stop}"
        )));
    }
    let n = ((stop - start) / step + COUNT_SLACK).floor() as usize + 1;
    Ok((0..n)
        .map(|i| (start + i as f64 * step).min(stop))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(linear_grid(1.0, 300.0, 0.5).unwrap().len(), 599);
        assert_eq!(linear_grid(1.0, 300.0, 0.1).unwrap().len(), 2991);
        assert_eq!(linear_grid(10.0, 300.0, 0.1).unwrap().len(), 2901);
        assert_eq!(linear_grid(0.0, 1.0, 0.3).unwrap().len(), 4);
    }

    #[test]
    fn endpoints_and_order() {
        let g = linear_grid(1.0, 300.0, 0.1).unwrap();
        assert_eq!(g[0], 1.0);
        assert!((g[g.len() - 1] - 300.0).abs() < 1e-9);
        assert!(g.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(linear_grid(1.0, 1.0, 0.1).is_err());
        assert!(linear_grid(2.0, 1.0, 0.1).is_err());
        assert!(linear_grid(1.0, 2.0, 0.0).is_err());
        assert!(linear_grid(1.0, f64::NAN, 0.1).is_err());
    }
}
