//! Unit conventions and the dimensionless reduction.
//!
//! All physics in this crate runs in natural units `ħ = c = 1` with lengths
//! measured in ring radii. A configuration is then fully described by
//!
//! * `nu = ΩR/c`, the dimensionless angular velocity,
//! * `beta = eBR²/ħ`, the flux parameter, so that the winding argument
//!   `eBΩR³/(ħc(1 − Ω²R²/c²))` becomes `beta·nu/(1 − nu²)`,
//! * `i_cl_hat = I_cl·c/(ħR)`, the classical moment of inertia.
//!
//! SI quantities only appear at this boundary.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reduced Planck constant, J·s (CODATA 2018, exact).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Speed of light, m/s (exact).
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e8;
/// Elementary charge, C (exact).
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;

/// Default exclusive bound on `|nu|`.
pub const DEFAULT_NU_MAX: f64 = 0.99;

/// The reduced parameter set every core formula operates on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionlessState {
    pub nu: f64,
    pub beta: f64,
    pub i_cl_hat: f64,
    pub nu_max: f64,
}

impl DimensionlessState {
    pub fn new(nu: f64, beta: f64, i_cl_hat: f64, nu_max: f64) -> Result<Self> {
        if !(nu_max > 0.0 && nu_max < 1.0) {
            return Err(Error::domain(format!("nu_max = {nu_max} must lie in (0, 1)")));
        }
        if !nu.is_finite() || nu.abs() >= nu_max {
            return Err(Error::domain(format!("|nu| = {} must be below nu_max = {nu_max}", nu.abs())));
        }
        if !beta.is_finite() {
            return Err(Error::domain("beta must be finite"));
        }
        if !i_cl_hat.is_finite() || i_cl_hat < 0.0 {
            return Err(Error::domain(format!("i_cl_hat = {i_cl_hat} must be finite and non-negative")));
        }
        Ok(Self { nu, beta, i_cl_hat, nu_max })
    }

    pub fn with_nu(self, nu: f64) -> Result<Self> {
        Self::new(nu, self.beta, self.i_cl_hat, self.nu_max)
    }
}

/// How the classical inertia of the ring is specified.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassicalInertia {
    /// Moment of inertia about the symmetry axis, kg·m².
    MomentOfInertia(f64),
    /// Linear mass density of a thin ring, kg/m; `I_cl = 2πR·μ·R²`.
    MassPerLength(f64),
}

/// A ring described in SI units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalRing {
    /// Radius, m.
    pub radius_si: f64,
    /// Magnetic field through the ring, T.
    pub b_field_si: f64,
    pub inertia: ClassicalInertia,
    /// Charge of the excitation in units of the elementary charge.
    pub charge_quanta: i32,
}

impl PhysicalRing {
    pub fn i_cl_si(&self) -> f64 {
        match self.inertia {
            ClassicalInertia::MomentOfInertia(i) => i,
            ClassicalInertia::MassPerLength(mu) => {
                std::f64::consts::TAU * self.radius_si * mu * self.radius_si * self.radius_si
            }
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.radius_si.is_finite() && self.radius_si > 0.0) {
            return Err(Error::domain(format!("radius_si = {} must be positive", self.radius_si)));
        }
        if !self.b_field_si.is_finite() {
            return Err(Error::domain("b_field_si must be finite"));
        }
        let i_cl = self.i_cl_si();
        if !i_cl.is_finite() || i_cl < 0.0 {
            return Err(Error::domain(format!("classical moment of inertia {i_cl} must be non-negative")));
        }
        Ok(())
    }
}

/// Conversion factors between natural (R = 1) and SI units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitScales {
    /// ħc/R, J.
    pub energy_scale: f64,
    /// c/R, rad/s.
    pub frequency_scale: f64,
    /// ħ, J·s.
    pub angmom_scale: f64,
}

impl UnitScales {
    pub fn for_radius(radius_si: f64) -> Result<Self> {
        if !(radius_si.is_finite() && radius_si > 0.0) {
            return Err(Error::domain(format!("radius_si = {radius_si} must be positive")));
        }
        Ok(Self {
            energy_scale: HBAR * SPEED_OF_LIGHT / radius_si,
            frequency_scale: SPEED_OF_LIGHT / radius_si,
            angmom_scale: HBAR,
        })
    }

    pub fn radius_si(&self) -> f64 {
        SPEED_OF_LIGHT / self.frequency_scale
    }

    /// ħR/c, kg·m².
    pub fn inertia_scale(&self) -> f64 {
        self.angmom_scale / self.frequency_scale
    }

    pub fn to_si_energy(&self, e_hat: f64) -> f64 {
        e_hat * self.energy_scale
    }

    pub fn from_si_energy(&self, joules: f64) -> f64 {
        joules / self.energy_scale
    }

    pub fn to_si_frequency(&self, nu: f64) -> f64 {
        nu * self.frequency_scale
    }

    pub fn from_si_frequency(&self, omega: f64) -> f64 {
        omega / self.frequency_scale
    }

    pub fn to_si_angmom(&self, l_hat: f64) -> f64 {
        l_hat * self.angmom_scale
    }

    pub fn to_si_inertia(&self, i_hat: f64) -> f64 {
        i_hat * self.inertia_scale()
    }

    pub fn from_si_inertia(&self, i_si: f64) -> f64 {
        i_si / self.inertia_scale()
    }

    /// Field strength that produces flux parameter `beta` for the given charge.
    pub fn b_field_for_beta(&self, beta: f64, charge_quanta: i32) -> f64 {
        let r = self.radius_si();
        beta * self.angmom_scale / (f64::from(charge_quanta) * ELEMENTARY_CHARGE * r * r)
    }
}

/// Reduces an SI ring to the dimensionless state (at `nu = 0`, default
/// `nu_max`) together with the scales needed to convert back.
pub fn reduce(ring: &PhysicalRing) -> Result<(DimensionlessState, UnitScales)> {
    ring.validate()?;
    let scales = UnitScales::for_radius(ring.radius_si)?;
    let charge = f64::from(ring.charge_quanta) * ELEMENTARY_CHARGE;
    let beta = charge * ring.b_field_si * ring.radius_si * ring.radius_si / HBAR;
    let i_cl_hat = scales.from_si_inertia(ring.i_cl_si());
    let state = DimensionlessState::new(0.0, beta, i_cl_hat, DEFAULT_NU_MAX)?;
    Ok((state, scales))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn ring(radius: f64, b: f64) -> PhysicalRing {
        PhysicalRing {
            radius_si: radius,
            b_field_si: b,
            inertia: ClassicalInertia::MomentOfInertia(1e-30),
            charge_quanta: 1,
        }
    }

    #[test]
    fn micron_ring_in_ten_tesla() {
        let (state, scales) = reduce(&ring(1e-6, 10.0)).unwrap();
        // eBR²/ħ evaluated in extended precision
        assert_relative_eq!(state.beta, 15_192.674_488_095_105, max_relative = 1e-12);
        let omega_ch = scales.to_si_frequency(1.0 / state.beta);
        assert_relative_eq!(omega_ch, 1.973_269_803_383_964e10, max_relative = 1e-12);
    }

    #[test]
    fn zero_field_gives_zero_beta() {
        let (state, _) = reduce(&ring(1e-6, 0.0)).unwrap();
        assert_eq!(state.beta, 0.0);
    }

    #[test]
    fn unit_radius_scales() {
        let scales = UnitScales::for_radius(1.0).unwrap();
        assert_eq!(scales.frequency_scale, 2.997_924_58e8);
        assert_eq!(scales.to_si_frequency(0.0), 0.0);
        assert_relative_eq!(
            scales.to_si_energy(-1.0 / 48.0),
            -6.586_514_107_415_754e-28,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            scales.energy_scale,
            scales.angmom_scale * scales.frequency_scale,
            max_relative = 1e-15
        );
    }

    #[test]
    fn non_positive_radius_rejected() {
        assert!(matches!(reduce(&ring(0.0, 1.0)), Err(Error::Domain(_))));
        assert!(matches!(reduce(&ring(-1.0, 1.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn mass_per_length_inertia() {
        let r = PhysicalRing {
            radius_si: 2.0,
            b_field_si: 0.0,
            inertia: ClassicalInertia::MassPerLength(0.5),
            charge_quanta: 1,
        };
        assert_relative_eq!(r.i_cl_si(), std::f64::consts::TAU * 2.0 * 0.5 * 4.0);
    }

    #[test]
    fn state_invariants() {
        assert!(DimensionlessState::new(0.5, 1.0, 1.0, 0.99).is_ok());
        assert!(DimensionlessState::new(0.99, 1.0, 1.0, 0.99).is_err());
        assert!(DimensionlessState::new(0.1, 1.0, 1.0, 1.0).is_err());
        assert!(DimensionlessState::new(0.1, 1.0, -1.0, 0.5).is_err());
        assert!(DimensionlessState::new(0.1, f64::NAN, 1.0, 0.5).is_err());
    }
}
