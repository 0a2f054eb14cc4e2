//! The structure function `𝒢(x, y, z) = Σ sin(mx) sin(my) e^{-imz}/m` and
//! the Green functions of the static and rotating cut ring built from it.
//!
//! The Feynman prescription is realized as `z → z - iδ`, which multiplies
//! every term by `e^{-mδ}`. In closed form
//!
//! ```text
//! 𝒢 = ¼ [ln(1 - q₁) + ln(1 - q₂) - ln(1 - q₃) - ln(1 - q₄)],
//! q₁ = e^{i(x+y-z)}, q₂ = e^{-i(x+y+z)}, q₃ = e^{i(x-y-z)}, q₄ = e^{i(-x+y-z)},
//! ```
//!
//! each `q` carrying the extra factor `e^{-δ}`. Every log is taken on its own
//! principal branch: `1 - q` has non-negative real part whenever `|q| ≤ 1`,
//! so no factor ever crosses the cut of the logarithm.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extrapolate::richardson_to_zero;

/// Factors with `|1 - q|` below this are reported as singular.
pub const SINGULAR_TOL: f64 = 1e-13;

/// Default damping ladder for the `δ → 0` extrapolation hook.
pub const DEFAULT_DELTA_LADDER: [f64; 3] = [1e-3, 1e-4, 1e-5];

/// Arguments of the structure function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    /// Damping; `z` is replaced by `z - iδ`.
    pub delta: f64,
}

impl GPoint {
    pub fn new(x: f64, y: f64, z: f64, delta: f64) -> Self {
        Self { x, y, z, delta }
    }
}

/// `1 - e^{iα - δ}` without cancellation for small `α` and `δ`.
fn one_minus_exp(alpha: f64, delta: f64) -> Complex64 {
    let half = (alpha / 2.0).sin();
    let re = (-delta).exp_m1() * alpha.cos() - 2.0 * half * half;
    let im = (-delta).exp() * alpha.sin();
    -Complex64::new(re, im)
}

pub fn calg_closed(p: &GPoint) -> Result<Complex64> {
    if !(p.delta >= 0.0) {
        return Err(Error::domain(format!("damping delta = {} must be non-negative", p.delta)));
    }
    let sum = p.x + p.y;
    // Differences first: keeps the small arguments exact when x ≈ y.
    let alphas = [sum - p.z, -(sum + p.z), (p.x - p.y) - p.z, (p.y - p.x) - p.z];
    let mut logs = [Complex64::new(0.0, 0.0); 4];
    for (k, (&alpha, log)) in alphas.iter().zip(logs.iter_mut()).enumerate() {
        let factor = one_minus_exp(alpha, p.delta);
        let modulus = factor.norm();
        if modulus < SINGULAR_TOL {
            return Err(Error::Singular { factor: k + 1, modulus });
        }
        *log = factor.ln();
    }
    Ok((logs[0] + logs[1] - logs[2] - logs[3]) / 4.0)
}

/// Damped partial sum together with a bound on the discarded tail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: Complex64,
    pub terms: u64,
    /// `Σ_{m > M} e^{-δm}/m ≤ e^{-δ(M+1)} / ((M+1)(1 - e^{-δ}))`.
    pub tail_bound: f64,
}

/// Abel-damped partial sum of `𝒢` up to `m_max` terms.
///
/// The undamped series converges only conditionally, so `δ = 0` is refused.
pub fn calg_series(p: &GPoint, m_max: u64) -> Result<SeriesValue> {
    if !(p.delta > 0.0) {
        return Err(Error::domain("series evaluation needs a positive damping delta"));
    }
    if m_max < 1 {
        return Err(Error::domain("m_max must be at least 1"));
    }
    let mut value = Complex64::new(0.0, 0.0);
    for m in 1..=m_max {
        let mf = m as f64;
        let amplitude = (mf * p.x).sin() * (mf * p.y).sin() * (-mf * p.delta).exp() / mf;
        let (s, c) = (mf * p.z).sin_cos();
        value += Complex64::new(amplitude * c, -amplitude * s);
    }
    let next = (m_max + 1) as f64;
    let tail_bound = (-p.delta * next).exp() / (next * -(-p.delta).exp_m1());
    Ok(SeriesValue { value, terms: m_max, tail_bound })
}

/// Extrapolates the closed form to `δ → 0` along a decreasing damping ladder
/// (linear in `δ`).
pub fn calg_delta_limit(x: f64, y: f64, z: f64, ladder: &[f64]) -> Result<Complex64> {
    let values = ladder
        .iter()
        .map(|&d| calg_closed(&GPoint::new(x, y, z, d)))
        .collect::<Result<Vec<_>>>()?;
    let re: Vec<f64> = values.iter().map(|v| v.re).collect();
    let im: Vec<f64> = values.iter().map(|v| v.im).collect();
    let re = richardson_to_zero(ladder, &re, 1)?;
    let im = richardson_to_zero(ladder, &im, 1)?;
    Ok(Complex64::new(re.value, im.value))
}

/// `[x]_{2π}`, the representative in `[0, 2π)`.
pub fn wrap_angle(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    // rem_euclid can round up to exactly 2π for tiny negative inputs
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Angle measured from the co-rotating cut, `θ(t, φ) = [φ - νt]_{2π}`.
pub fn cut_angle(t: f64, phi: f64, nu: f64) -> f64 {
    wrap_angle(phi - nu * t)
}

/// Green function of the static ring, `(i/π) 𝒢(φ/2, φ'/2, |t - t'|/2)`.
pub fn green_static(t: f64, t_prime: f64, phi: f64, phi_prime: f64, delta: f64) -> Result<Complex64> {
    let x = wrap_angle(phi) / 2.0;
    let y = wrap_angle(phi_prime) / 2.0;
    let z = (t - t_prime).abs() / 2.0;
    Ok(Complex64::i() / PI * calg_closed(&GPoint::new(x, y, z, delta))?)
}

/// Green function of the ring rotating at `ν`, with the cut at `φ = [νt]_{2π}`:
/// `(i/π) 𝒢(θ/2, θ'/2, |(1 - ν²)(t - t') - ν(θ - θ')|/2)`.
pub fn green_rotating(
    t: f64,
    t_prime: f64,
    phi: f64,
    phi_prime: f64,
    nu: f64,
    delta: f64,
) -> Result<Complex64> {
    let p = rotating_point(t, t_prime, phi, phi_prime, nu, delta)?;
    Ok(Complex64::i() / PI * calg_closed(&p)?)
}

/// Structure-function arguments of [`green_rotating`].
pub fn rotating_point(t: f64, t_prime: f64, phi: f64, phi_prime: f64, nu: f64, delta: f64) -> Result<GPoint> {
    if !(nu.abs() < 1.0) {
        return Err(Error::domain(format!("|nu| = {} must be subluminal", nu.abs())));
    }
    let theta = cut_angle(t, phi, nu);
    let theta_prime = cut_angle(t_prime, phi_prime, nu);
    let z = ((1.0 - nu) * (1.0 + nu) * (t - t_prime) - nu * (theta - theta_prime)).abs() / 2.0;
    Ok(GPoint::new(theta / 2.0, theta_prime / 2.0, z, delta))
}
