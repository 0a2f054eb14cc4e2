//! Mode eigensystem of the cut ring and regularized Casimir mode sums.
//!
//! With `R = 1` the Dirichlet cut admits the modes `sin(mφ/2)/√π`,
//! `m = 1, 2, ...`, with on-shell frequencies `m/2` at rest and
//! `(1 - ν²)·m/2` in the co-rotating description. The divergent sum
//! `½ Σ ω_m` is regularized two independent ways:
//!
//! * finite part: `Σ m → ζ(-1) = -1/12`;
//! * exponential cutoff: `½ Σ ω_m e^{-ε ω_m}` summed in closed form, minus
//!   its exact `1/ε²` pole, then extrapolated to `ε → 0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extrapolate::richardson_to_zero;
use crate::zeropoint;

/// Analytic continuation of `Σ_{m≥1} m`.
const ZETA_MINUS_ONE: f64 = -1.0 / 12.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Mode {
    pub m: u32,
    pub omega_hat: f64,
}

impl Mode {
    pub fn at_rest(m: u32) -> Result<Self> {
        Ok(Self { m, omega_hat: static_mode_frequency(m)? })
    }

    pub fn rotating(m: u32, nu: f64) -> Result<Self> {
        Ok(Self { m, omega_hat: rotating_mode_frequency(m, nu)? })
    }

    /// Spatial profile of the mode at angle `phi`.
    pub fn profile(&self, phi: f64) -> f64 {
        eigenfunction_sample(self.m, phi)
    }
}

pub fn static_mode_frequency(m: u32) -> Result<f64> {
    if m < 1 {
        return Err(Error::domain("mode index starts at m = 1"));
    }
    Ok(f64::from(m) / 2.0)
}

pub fn rotating_mode_frequency(m: u32, nu: f64) -> Result<f64> {
    if !(nu.abs() < 1.0) {
        return Err(Error::domain(format!("|nu| = {} must be subluminal", nu.abs())));
    }
    let base = static_mode_frequency(m)?;
    Ok((1.0 - nu) * (1.0 + nu) * base)
}

/// `sin(mφ/2)/√π`; vanishes at the cut `φ = 0`.
pub fn eigenfunction_sample(m: u32, phi: f64) -> f64 {
    (f64::from(m) * phi / 2.0).sin() / std::f64::consts::PI.sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegulatorKind {
    FinitePart,
    ExpCutoff,
}

/// Divergence-subtraction scheme for the zero-point mode sum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Regulator {
    pub kind: RegulatorKind,
    /// Cutoff values, strictly decreasing in `(0, 1]` (cutoff kind only).
    pub epsilons: Vec<f64>,
    /// Leading power of the cutoff residual eliminated by extrapolation.
    pub richardson_order: u32,
}

impl Regulator {
    pub fn finite_part() -> Self {
        Self { kind: RegulatorKind::FinitePart, epsilons: Vec::new(), richardson_order: 2 }
    }

    pub fn exp_cutoff(epsilons: Vec<f64>, richardson_order: u32) -> Self {
        Self { kind: RegulatorKind::ExpCutoff, epsilons, richardson_order }
    }

    pub fn validate(&self) -> Result<()> {
        if self.richardson_order < 1 {
            return Err(Error::config("richardson_order must be at least 1"));
        }
        if self.kind == RegulatorKind::FinitePart {
            return Ok(());
        }
        if self.epsilons.is_empty() {
            return Err(Error::config("exp-cutoff regulator needs at least one epsilon"));
        }
        if self.epsilons.iter().any(|e| !(*e > 0.0 && *e <= 1.0)) {
            return Err(Error::config("epsilons must lie in (0, 1]"));
        }
        if self.epsilons.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::config("epsilons must be strictly decreasing"));
        }
        Ok(())
    }
}

impl Default for Regulator {
    fn default() -> Self {
        Self::exp_cutoff(vec![0.2, 0.1, 0.05], 2)
    }
}

/// `½ Σ_m ω_m e^{-ε ω_m}` with the `1/ε²` pole removed, before extrapolation.
///
/// With `ω_m = k·m`, `k = (1 - ν²)/2` and `a = εk`, the sum is
/// `(k/2)·e^{-a}/(1 - e^{-a})²`, whose pole is `(k/2)/a²`.
pub fn cutoff_sum(nu: f64, epsilon: f64) -> Result<f64> {
    if !(nu.abs() < 1.0) {
        return Err(Error::domain(format!("|nu| = {} must be subluminal", nu.abs())));
    }
    if !(epsilon > 0.0) {
        return Err(Error::config("cutoff epsilon must be positive"));
    }
    let k = (1.0 - nu) * (1.0 + nu) / 2.0;
    let a = epsilon * k;
    let denom = (-a).exp_m1();
    let geometric = (-a).exp() / (denom * denom);
    Ok(0.5 * k * (geometric - 1.0 / (a * a)))
}

/// Regularized zero-point energy `½ Σ ω_m` of the rotating-frame modes.
///
/// This is `-(1 - ν²)/48` for either scheme. It coincides with the closed
/// form `-(1 + ν²)/48` only at rest; see [`compare_with_closed_form`].
pub fn casimir_energy_mode_sum(nu: f64, regulator: &Regulator) -> Result<f64> {
    regulator.validate()?;
    if !(nu.abs() < 1.0) {
        return Err(Error::domain(format!("|nu| = {} must be subluminal", nu.abs())));
    }
    match regulator.kind {
        RegulatorKind::FinitePart => {
            let k = (1.0 - nu) * (1.0 + nu) / 2.0;
            Ok(0.5 * k * ZETA_MINUS_ONE)
        }
        RegulatorKind::ExpCutoff => {
            let values = regulator
                .epsilons
                .iter()
                .map(|&eps| cutoff_sum(nu, eps))
                .collect::<Result<Vec<_>>>()?;
            let ex = richardson_to_zero(&regulator.epsilons, &values, regulator.richardson_order)?;
            Ok(ex.value)
        }
    }
}

/// Mode sum next to the lab-frame closed form at the same `ν`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrameComparison {
    pub nu: f64,
    pub mode_sum: f64,
    pub closed_form: f64,
    pub discrepancy: f64,
}

pub fn compare_with_closed_form(nu: f64, regulator: &Regulator) -> Result<FrameComparison> {
    let mode_sum = casimir_energy_mode_sum(nu, regulator)?;
    let closed_form = zeropoint::zp_energy_neutral(nu)?;
    Ok(FrameComparison { nu, mode_sum, closed_form, discrepancy: mode_sum - closed_form })
}
