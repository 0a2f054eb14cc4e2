//! Closed forms for the zero-point energy, angular momentum and moment of
//! inertia of the cut ring, neutral and charged.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::units::UnitScales;

/// Relative tolerance used to flag winding arguments sitting on an integer.
pub const DEFAULT_JUMP_TOL: f64 = 1e-12;

fn check_subluminal(nu: f64) -> Result<()> {
    if nu.abs() < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("|nu| = {} must be subluminal", nu.abs())))
    }
}

/// `1 - ν²`, factored to keep precision near the light cone.
fn lorentz_factor(nu: f64) -> f64 {
    (1.0 - nu) * (1.0 + nu)
}

/// `E = -(1 + ν²)/48`.
pub fn zp_energy_neutral(nu: f64) -> Result<f64> {
    check_subluminal(nu)?;
    Ok(-(1.0 + nu * nu) / 48.0)
}

/// `L = ∂E/∂ν = -ν/24` for the neutral field.
pub fn zp_angmom_neutral(nu: f64) -> Result<f64> {
    check_subluminal(nu)?;
    Ok(-nu / 24.0)
}

/// Zero-point moment of inertia, in units of `ħR/c`.
pub fn zp_moment_of_inertia() -> f64 {
    -1.0 / 24.0
}

/// Zero-point moment of inertia in kg·m², `-ħR/(24c)`.
pub fn zp_moment_of_inertia_si(scales: &UnitScales) -> f64 {
    scales.to_si_inertia(zp_moment_of_inertia())
}

/// The integer `M = ⌊βν/(1 - ν²)⌋` and where it sits relative to a jump.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WindingNumber {
    pub m_wind: i64,
    pub arg: f64,
    pub at_jump: bool,
}

impl WindingNumber {
    pub fn enhancement(&self) -> EnhancementCoefficient {
        EnhancementCoefficient::for_winding(self.m_wind)
    }
}

/// `C = 1 + 6M(M + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnhancementCoefficient {
    pub c_factor: i128,
}

impl EnhancementCoefficient {
    pub fn for_winding(m: i64) -> Self {
        let m = i128::from(m);
        Self { c_factor: 1 + 6 * m * (m + 1) }
    }

    pub fn as_f64(&self) -> f64 {
        self.c_factor as f64
    }
}

/// Floor of the winding argument. `at_jump` is set when the argument is
/// within `jump_tol·max(1, |arg|)` of an integer; with `beta = 0` the
/// argument is identically zero and no jump exists.
pub fn winding(nu: f64, beta: f64, jump_tol: f64) -> Result<WindingNumber> {
    check_subluminal(nu)?;
    let arg = beta * nu / lorentz_factor(nu);
    let floor = arg.floor();
    let nearest = arg.round();
    let at_jump = beta != 0.0 && (arg - nearest).abs() <= jump_tol * arg.abs().max(1.0);
    Ok(WindingNumber { m_wind: floor as i64, arg, at_jump })
}

/// `E = -C(1 + ν²)/24` for the charged field.
pub fn zp_energy_charged(nu: f64, beta: f64) -> Result<f64> {
    let w = winding(nu, beta, DEFAULT_JUMP_TOL)?;
    let c = w.enhancement().as_f64();
    Ok(-(c * (1.0 + nu * nu)) / 24.0)
}

/// `L = -Cν/12` for the charged field.
pub fn zp_angmom_charged(nu: f64, beta: f64) -> Result<f64> {
    let w = winding(nu, beta, DEFAULT_JUMP_TOL)?;
    let c = w.enhancement().as_f64();
    Ok(-(c * nu) / 12.0)
}

/// Positive root of `βν/(1 - ν²) = n`, the `n`-th jump of the winding number.
///
/// Evaluated as `2n/(β + √(β² + 4n²))` to avoid cancellation at large `β`;
/// for `β ≫ n` it approaches `n/β`.
pub fn characteristic_nu(beta: f64, n: u64) -> Result<f64> {
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::domain(format!("beta = {beta} must be positive")));
    }
    if n < 1 {
        return Err(Error::domain("jump index starts at n = 1"));
    }
    let n = n as f64;
    Ok(2.0 * n / (beta + beta.hypot(2.0 * n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn neutral_energy() {
        assert_eq!(zp_energy_neutral(0.0).unwrap(), -1.0 / 48.0);
        assert_relative_eq!(zp_energy_neutral(0.5).unwrap(), -1.25 / 48.0, max_relative = 1e-15);
        assert!(zp_energy_neutral(1.0).is_err());
    }

    #[test]
    fn moment_of_inertia_from_second_difference() {
        let h = 1e-4;
        let e = |nu| zp_energy_neutral(nu).unwrap();
        let d2 = (e(h) - 2.0 * e(0.0) + e(-h)) / (h * h);
        assert!((d2 - zp_moment_of_inertia()).abs() < 1e-9);
        let scales = UnitScales::for_radius(1.0).unwrap();
        assert_relative_eq!(
            zp_moment_of_inertia_si(&scales),
            -1.465_697_058_162_817_4e-44,
            max_relative = 1e-12
        );
    }

    #[test]
    fn winding_examples() {
        let w = winding(0.02, 100.0, DEFAULT_JUMP_TOL).unwrap();
        assert_eq!(w.m_wind, 2);
        assert!((w.arg - 2.000_800_320_128_051).abs() < 1e-12);
        assert!(!w.at_jump);
        assert_eq!(winding(0.3, 0.0, DEFAULT_JUMP_TOL).unwrap().m_wind, 0);
        assert!(!winding(0.3, 0.0, DEFAULT_JUMP_TOL).unwrap().at_jump);
        assert_eq!(winding(0.0, 100.0, DEFAULT_JUMP_TOL).unwrap().m_wind, 0);
        assert_eq!(winding(-0.02, 100.0, DEFAULT_JUMP_TOL).unwrap().m_wind, -3);
    }

    #[test]
    fn enhancement_factor() {
        assert_eq!(EnhancementCoefficient::for_winding(0).c_factor, 1);
        assert_eq!(EnhancementCoefficient::for_winding(-1).c_factor, 1);
        assert_eq!(EnhancementCoefficient::for_winding(2).c_factor, 37);
        assert_eq!(EnhancementCoefficient::for_winding(-3).c_factor, 37);
        assert_eq!(EnhancementCoefficient::for_winding(1000).c_factor, 6_006_001);
    }

    #[test]
    fn charged_energy_and_momentum() {
        for nu in [0.0, 0.1, -0.4, 0.9] {
            let charged = zp_energy_charged(nu, 0.0).unwrap();
            assert_eq!(charged, 2.0 * zp_energy_neutral(nu).unwrap());
        }
        let e = zp_energy_charged(0.02, 100.0).unwrap();
        assert!((e - (-1.542_283_333_333_333_3)).abs() < 1e-12);
        assert_eq!(zp_energy_charged(-0.02, 100.0).unwrap(), e);
        assert_eq!(zp_angmom_charged(0.0, 100.0).unwrap(), 0.0);
        let l = zp_angmom_charged(0.02, 100.0).unwrap();
        assert!((l - (-37.0 * 0.02 / 12.0)).abs() < 1e-15);
    }

    #[test]
    fn characteristic_frequencies() {
        let nu1 = characteristic_nu(100.0, 1).unwrap();
        assert!((nu1 - 0.009_999_000_199_950_014).abs() < 1e-17);
        let rel = (0.01 - nu1) / 0.01;
        assert!((rel - 9.998e-5).abs() < 1e-8);
        for n in 1..6 {
            let nu_n = characteristic_nu(100.0, n).unwrap();
            assert_eq!(winding(nu_n + 1e-12, 100.0, DEFAULT_JUMP_TOL).unwrap().m_wind, n as i64);
            assert_eq!(winding(nu_n - 1e-12, 100.0, DEFAULT_JUMP_TOL).unwrap().m_wind, n as i64 - 1);
        }
        assert!(characteristic_nu(0.0, 1).is_err());
        assert!(characteristic_nu(-1.0, 1).is_err());
        assert!(characteristic_nu(1.0, 0).is_err());
    }

    #[test]
    fn jump_flag() {
        let nu1 = characteristic_nu(100.0, 1).unwrap();
        assert!(winding(nu1, 100.0, DEFAULT_JUMP_TOL).unwrap().at_jump);
    }
}
