//! Brute-force reference computations used to cross-check the fast paths.
//!
//! Nothing here calls the branch formulas, the quadratic jump roots or the
//! logarithmic closed form; each routine reaches its answer by a different
//! route (dense scanning, bisection on the floor function, direct mode sums,
//! quadrature).

use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::landscape::{Landscape, ENDPOINT_EPS};
use crate::spectrum;

/// Result of scanning the total energy on a uniform grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridScan {
    pub step: f64,
    pub points: usize,
    /// Grid point with the lowest energy.
    pub grid_argmin: f64,
    pub grid_min: f64,
    /// Lowest energy once each winding jump between neighbours has been
    /// located by bisection and its one-sided values included.
    pub refined_argmin: f64,
    pub refined_min: f64,
}

/// Scans `[0, nu_max)` at spacing `step`, plus the open-end sample
/// `nu_max - ENDPOINT_EPS`.
pub fn grid_scan_minimum(landscape: &Landscape, step: f64) -> Result<GridScan> {
    let count = (landscape.nu_max / step).ceil() as usize;
    let mut grid: Vec<f64> = (0..count).map(|k| k as f64 * step).filter(|&nu| nu < landscape.nu_max).collect();
    let open_end = landscape.nu_max - ENDPOINT_EPS;
    if grid.last().is_none_or(|&last| last < open_end) {
        grid.push(open_end);
    }

    let mut energies = Vec::with_capacity(grid.len());
    let mut windings = Vec::with_capacity(grid.len());
    for &nu in &grid {
        energies.push(landscape.total_energy(nu)?);
        windings.push(landscape.winding(nu)?.m_wind);
    }

    let (mut grid_argmin, mut grid_min) = (grid[0], energies[0]);
    for (&nu, &e) in grid.iter().zip(&energies) {
        if e < grid_min {
            grid_argmin = nu;
            grid_min = e;
        }
    }

    let (mut refined_argmin, mut refined_min) = (grid_argmin, grid_min);
    for k in 0..grid.len() - 1 {
        if windings[k] == windings[k + 1] {
            continue;
        }
        let (mut lo, mut hi) = (grid[k], grid[k + 1]);
        loop {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if landscape.winding(mid)?.m_wind == windings[k] {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        for nu in [lo, hi] {
            let e = landscape.total_energy(nu)?;
            if e < refined_min || (e == refined_min && nu < refined_argmin) {
                refined_min = e;
                refined_argmin = nu;
            }
        }
    }

    Ok(GridScan { step, points: grid.len(), grid_argmin, grid_min, refined_argmin, refined_min })
}

/// Composite Simpson rule with `intervals` (rounded up to even) panels.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, intervals: usize) -> f64 {
    let n = intervals + intervals % 2;
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for k in 1..n {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + k as f64 * h);
    }
    acc * h / 3.0
}

/// Gram matrix `∫₀^{2π} χ_m χ_n dφ` of the first `size` eigenfunctions.
pub fn eigenfunction_gram(size: u32, intervals: usize) -> Vec<Vec<f64>> {
    (1..=size)
        .map(|m| {
            (1..=size)
                .map(|n| {
                    simpson(
                        |phi| spectrum::eigenfunction_sample(m, phi) * spectrum::eigenfunction_sample(n, phi),
                        0.0,
                        std::f64::consts::TAU,
                        intervals,
                    )
                })
                .collect()
        })
        .collect()
}

/// Rotating-ring Green function summed directly over the lab-frame modes
/// `sin(mθ/2) e^{-iω_m(t - νθ/(1-ν²))}`, damped by `e^{-mδ}`.
///
/// The time-ordered combination of the two mode phases is the absolute value
/// of the retarded argument, exactly as for the static ring.
pub fn green_rotating_modes(
    t: f64,
    t_prime: f64,
    phi: f64,
    phi_prime: f64,
    nu: f64,
    delta: f64,
    m_max: u32,
) -> Result<Complex64> {
    let tau = std::f64::consts::TAU;
    let theta = (phi - nu * t).rem_euclid(tau);
    let theta_prime = (phi_prime - nu * t_prime).rem_euclid(tau);
    let lorentz = 1.0 - nu * nu;
    let pi = std::f64::consts::PI;
    let mut sum = Complex64::new(0.0, 0.0);
    for m in 1..=m_max {
        let omega = spectrum::rotating_mode_frequency(m, nu)?;
        let phase_here = omega * (t - nu * theta / lorentz);
        let phase_there = omega * (t_prime - nu * theta_prime / lorentz);
        let elapsed = (phase_here - phase_there).abs();
        // eigenfunction_sample carries 1/√π per factor; the Green function
        // normalization is (i/π)·Σ sin·sin/m, so undo one π here.
        let profile = spectrum::eigenfunction_sample(m, theta) * spectrum::eigenfunction_sample(m, theta_prime) * pi;
        let weight = profile * (-(m as f64) * delta).exp() / f64::from(m);
        sum += Complex64::from_polar(weight, -elapsed);
    }
    Ok(Complex64::i() / pi * sum)
}
