//! Richardson extrapolation to zero step.

use serde::Serialize;

use crate::error::{Error, Result};

/// Result of extrapolating a sequence `f(h_i)` to `h → 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Extrapolation {
    pub value: f64,
    /// Best estimate after each elimination stage; `estimates[0]` is the raw
    /// value at the finest step.
    pub estimates: Vec<f64>,
    /// `|estimates[k] - estimates[k - 1]|`.
    pub residuals: Vec<f64>,
}

/// Extrapolates samples taken at strictly decreasing positive `steps`,
/// assuming an error expansion in powers of `h^order`.
///
/// Uses Neville's scheme in the variable `x = h^order`, so the step ratios
/// need not be constant.
pub fn richardson_to_zero(steps: &[f64], values: &[f64], order: u32) -> Result<Extrapolation> {
    if steps.is_empty() {
        return Err(Error::config("empty step sequence"));
    }
    if steps.len() != values.len() {
        return Err(Error::config("steps and values differ in length"));
    }
    if order == 0 {
        return Err(Error::config("extrapolation order must be at least 1"));
    }
    if steps.iter().any(|h| !(h.is_finite() && *h > 0.0)) {
        return Err(Error::config("steps must be positive"));
    }
    if steps.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::config("steps must be strictly decreasing"));
    }

    let x: Vec<f64> = steps.iter().map(|h| h.powi(order as i32)).collect();
    let n = values.len();
    let mut table = values.to_vec();
    let mut estimates = vec![values[n - 1]];
    for k in 1..n {
        for i in 0..n - k {
            table[i] = (x[i + k] * table[i] - x[i] * table[i + 1]) / (x[i + k] - x[i]);
        }
        estimates.push(table[n - 1 - k]);
    }
    let residuals = estimates.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    Ok(Extrapolation { value: table[0], estimates, residuals })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_in_h_squared_is_exact() {
        let f = |h: f64| 3.0 - 2.0 * h * h + 0.5 * h.powi(4);
        let steps = [0.4, 0.2, 0.1];
        let values: Vec<f64> = steps.iter().map(|&h| f(h)).collect();
        let ex = richardson_to_zero(&steps, &values, 2).unwrap();
        assert!((ex.value - 3.0).abs() < 1e-14);
        assert_eq!(ex.estimates.len(), 3);
    }

    #[test]
    fn single_sample_passes_through() {
        let ex = richardson_to_zero(&[0.2], &[1.5], 2).unwrap();
        assert_eq!(ex.value, 1.5);
        assert!(ex.residuals.is_empty());
    }

    #[test]
    fn rejects_bad_ladders() {
        assert!(richardson_to_zero(&[], &[], 2).is_err());
        assert!(richardson_to_zero(&[0.1, 0.2], &[1.0, 1.0], 2).is_err());
        assert!(richardson_to_zero(&[0.2, 0.1], &[1.0], 2).is_err());
        assert!(richardson_to_zero(&[0.2, 0.1], &[1.0, 1.0], 0).is_err());
    }

    #[test]
    fn first_order_extrapolation() {
        let steps = [0.5, 0.25, 0.125];
        let values: Vec<f64> = steps.iter().map(|h| 1.0 + h + h * h).collect();
        let ex = richardson_to_zero(&steps, &values, 1).unwrap();
        assert!((ex.value - 1.0).abs() < 1e-14);
    }
}
