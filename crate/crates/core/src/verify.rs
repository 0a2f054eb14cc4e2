//! Cross-module consistency checks behind `ringvac verify`.
//!
//! Each check compares a fast path against an independent route and records
//! the measured discrepancy next to its tolerance. A check that errors out
//! is reported as failed with the error text rather than aborting the run.

use std::f64::consts::PI;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cli::{self, RunConfig};
use crate::error::Result;
use crate::greens::{calg_closed, calg_series, GPoint};
use crate::landscape::{FieldKind, Landscape, SINGLE_VALUED_TOL};
use crate::oracles;
use crate::pointsplit::{t00_point_split, SplitConfig};
use crate::spectrum::{casimir_energy_mode_sum, Regulator};
use crate::zeropoint::{self, DEFAULT_JUMP_TOL};

/// Settings of the reference device used by the landscape checks.
pub const DEVICE_BETA: f64 = 100.0;
pub const DEVICE_I_CL_HAT: f64 = 9000.0;
pub const DEVICE_NU_MAX: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub seconds: f64,
    pub detail: Option<String>,
}

impl Check {
    fn within(name: &str, measured: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_owned(),
            measured,
            tolerance,
            passed: measured <= tolerance,
            seconds: 0.0,
            detail: None,
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    fn failed(name: &str, tolerance: f64, detail: String) -> Self {
        Self { name: name.to_owned(), measured: f64::NAN, tolerance, passed: false, seconds: 0.0, detail: Some(detail) }
    }

    /// One-line `PASS`/`FAIL` summary.
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("{verdict}  {}  measured={:.3e} tol={:.1e}", self.name, self.measured, self.tolerance);
        if let Some(d) = &self.detail {
            s.push_str("  (");
            s.push_str(d);
            s.push(')');
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub series_points: usize,
    pub series_terms: u64,
    pub series_delta: f64,
    pub derivative_points: usize,
    pub grid_step: f64,
    pub regulator: Regulator,
    pub split: SplitConfig,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 20_240_601,
            series_points: 50,
            series_terms: 1_000_000,
            series_delta: 1e-4,
            derivative_points: 100,
            grid_step: 1e-6,
            regulator: Regulator::default(),
            split: SplitConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

type Suite = fn(&VerifyConfig) -> Result<Vec<Check>>;

const SUITES: [(&str, Suite); 8] = [
    ("static Casimir", casimir_checks),
    ("structure function", series_checks),
    ("point splitting", point_split_checks),
    ("moment of inertia", inertia_checks),
    ("charged field", charged_checks),
    ("landscape", landscape_checks),
    ("E(L)", thermodynamic_checks),
    ("sweep determinism", determinism_checks),
];

/// Runs every suite, in parallel, and reports in a fixed order.
pub fn run_all(cfg: &VerifyConfig) -> VerifyReport {
    let checks = SUITES
        .par_iter()
        .map(|(label, suite)| {
            let start = Instant::now();
            let mut checks = match suite(cfg) {
                Ok(c) => c,
                Err(e) => vec![Check::failed(label, 0.0, e.to_string())],
            };
            let seconds = start.elapsed().as_secs_f64();
            for c in &mut checks {
                c.seconds = seconds;
            }
            checks
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    VerifyReport { seed: cfg.seed, checks }
}

pub fn casimir_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let exact = -1.0 / 48.0;
    let cutoff = casimir_energy_mode_sum(0.0, &cfg.regulator)?;
    let finite = casimir_energy_mode_sum(0.0, &Regulator::finite_part())?;
    let mut spread = 0.0f64;
    for nu in [0.0, 0.3, 0.6, 0.9] {
        let a = casimir_energy_mode_sum(nu, &cfg.regulator)?;
        let b = casimir_energy_mode_sum(nu, &Regulator::finite_part())?;
        spread = spread.max((a - b).abs());
    }
    Ok(vec![
        Check::within("static Casimir -1/48", (cutoff - exact).abs(), 1e-8)
            .with_detail(format!("exp cutoff, eps={:?}", cfg.regulator.epsilons)),
        Check::within("static Casimir -1/48 (finite part)", (finite - exact).abs(), 1e-10),
        Check::within("regulator independence", spread, 1e-8),
    ])
}

/// Uniform points in `(0, π)³` kept away from the log singularities.
pub fn generic_points(seed: u64, count: usize, delta: f64) -> Vec<GPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (x, y, z) = (rng.gen_range(0.0..PI), rng.gen_range(0.0..PI), rng.gen_range(0.0..PI));
        let alphas = [x + y - z, x + y + z, x - y - z, y - x - z];
        if alphas.iter().all(|a| (a / 2.0).sin().abs() > 0.01) {
            out.push(GPoint::new(x, y, z, delta));
        }
    }
    out
}

pub fn series_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let points = generic_points(cfg.seed, cfg.series_points, cfg.series_delta);
    let errors = points
        .par_iter()
        .map(|p| {
            let closed = calg_closed(p)?;
            let series = calg_series(p, cfg.series_terms)?;
            Ok((closed - series.value).norm())
        })
        .collect::<Result<Vec<f64>>>()?;
    let worst = errors.iter().copied().fold(0.0, f64::max);
    Ok(vec![Check::within("G series vs closed form", worst, 1e-6).with_detail(format!(
        "{} points, m_max={}, delta={:e}",
        points.len(),
        cfg.series_terms,
        cfg.series_delta
    ))])
}

pub fn point_split_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut spread = 0.0f64;
    for (nu, name) in [(0.0, "t00 nu=0 -> -1/(96pi)"), (0.5, "t00 nu=0.5 -> -1.25/(96pi)")] {
        let target = -(1.0 + nu * nu) / (96.0 * PI);
        let densities = [0.5, 2.0, 5.0]
            .iter()
            .map(|&phi| Ok(t00_point_split(nu, phi, &cfg.split)?.density))
            .collect::<Result<Vec<f64>>>()?;
        let rel = (densities[1] - target).abs() / target.abs();
        checks.push(Check::within(name, rel, 1e-4).with_detail("relative, phi=2"));
        let lo = densities.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = densities.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        spread = spread.max(hi - lo);
    }
    checks.push(Check::within("t00 phi-independence", spread, 1e-5).with_detail("phi in {0.5, 2, 5}"));
    Ok(checks)
}

pub fn inertia_checks(_: &VerifyConfig) -> Result<Vec<Check>> {
    let h = 1e-3;
    let second = (zeropoint::zp_energy_neutral(h)? - 2.0 * zeropoint::zp_energy_neutral(0.0)?
        + zeropoint::zp_energy_neutral(-h)?)
        / (h * h);
    Ok(vec![Check::within("zero-point moment of inertia -1/24", (second - zeropoint::zp_moment_of_inertia()).abs(), 1e-9)])
}

/// A seeded `(ν, β)` away from every jump, with a step `h` such that
/// `ν ± h` stay on the same branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchPoint {
    pub nu: f64,
    pub beta: f64,
    pub h: f64,
}

pub fn branch_points(seed: u64, count: usize) -> Result<Vec<BranchPoint>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_cafe);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let beta = rng.gen_range(1.0..200.0);
        let nu = rng.gen_range(0.01..0.9) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let w = zeropoint::winding(nu, beta, DEFAULT_JUMP_TOL)?;
        if w.at_jump {
            continue;
        }
        let mut h = 1e-3;
        while h >= 1e-7 {
            let below = zeropoint::winding(nu - h, beta, DEFAULT_JUMP_TOL)?.m_wind;
            let above = zeropoint::winding(nu + h, beta, DEFAULT_JUMP_TOL)?.m_wind;
            if below == w.m_wind && above == w.m_wind {
                out.push(BranchPoint { nu, beta, h });
                break;
            }
            h /= 2.0;
        }
    }
    Ok(out)
}

pub fn charged_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut doubling = 0.0f64;
    for k in 0..=98 {
        let nu = -0.98 + 0.02 * f64::from(k);
        let diff = zeropoint::zp_energy_charged(nu, 0.0)? - 2.0 * zeropoint::zp_energy_neutral(nu)?;
        doubling = doubling.max(diff.abs());
    }

    let points = branch_points(cfg.seed, cfg.derivative_points)?;
    let mut derivative = 0.0f64;
    let mut parity = 0.0f64;
    for p in &points {
        let e = |nu: f64| zeropoint::zp_energy_charged(nu, p.beta);
        let fd = (e(p.nu + p.h)? - e(p.nu - p.h)?) / (2.0 * p.h);
        let l = zeropoint::zp_angmom_charged(p.nu, p.beta)?;
        derivative = derivative.max((fd - l).abs() / l.abs());

        let e0 = e(p.nu)?;
        parity = parity
            .max((e(-p.nu)? - e0).abs())
            .max((zeropoint::zp_energy_charged(p.nu, -p.beta)? - e0).abs())
            .max((zeropoint::zp_angmom_charged(-p.nu, p.beta)? + l).abs());
    }
    let n = format!("{} seeded points", points.len());
    Ok(vec![
        Check::within("charged beta=0 equals twice neutral", doubling, 0.0),
        Check::within("L=dE/dnu on branch", derivative, 1e-6).with_detail(format!("relative, {n}")),
        Check::within("charged evenness and oddness", parity, 0.0).with_detail(n),
    ])
}

pub fn device() -> Result<Landscape> {
    Landscape::new(DEVICE_BETA, DEVICE_I_CL_HAT, DEVICE_NU_MAX, FieldKind::Charged)
}

pub fn landscape_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let l = device()?;
    let report = l.global_minimum()?;
    let scan = oracles::grid_scan_minimum(&l, cfg.grid_step)?;
    let nu1 = zeropoint::characteristic_nu(DEVICE_BETA, 1)?;
    let heavy = Landscape::new(DEVICE_BETA, 1e6, DEVICE_NU_MAX, FieldKind::Charged)?.global_minimum()?;

    Ok(vec![
        Check::within("minimizer at nu_1", (report.nu_star - nu1).abs(), 1e-15)
            .with_detail(format!("nu*={:.10}, E*={:.10}", report.nu_star, report.e_star)),
        Check::within("minimizer argmin vs grid oracle", (report.nu_star - scan.grid_argmin).abs(), cfg.grid_step)
            .with_detail(format!("{} grid points", scan.points)),
        Check::within("minimizer value vs grid oracle", (report.e_star - scan.refined_min).abs(), 1e-9),
        Check::within("rotating ground state E* < E(0)", (report.e_star - report.e_zero).max(0.0), 0.0)
            .with_detail(format!("E(0)={:.10}", report.e_zero)),
        Check::within("heavy ring nu*=0", heavy.nu_star.abs(), 0.0).with_detail("I=1e6"),
    ])
}

pub fn thermodynamic_checks(_: &VerifyConfig) -> Result<Vec<Check>> {
    let l = device()?;
    let jumps = l.jumps();

    let uniform: Vec<f64> = (0..500).map(|k| f64::from(k) * 1e-4).collect();
    let mut grid = uniform.clone();
    grid.extend(jumps.iter().map(|j| j.nu));
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    let table = l.e_of_l_table(&grid, SINGLE_VALUED_TOL)?;

    // Locate every change of branch label along the table rows and bisect
    // it down to adjacent floats.
    let mut located = 0usize;
    let mut position = 0.0f64;
    let mut jump_size = 0.0f64;
    for w in table.rows.windows(2) {
        if w[0].branch_n == w[1].branch_n {
            continue;
        }
        let (mut lo, mut hi) = (w[0].nu, w[1].nu);
        loop {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if l.winding(mid)?.m_wind == w[0].branch_n {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let Some(j) = jumps.get(located) else { break };
        located += 1;
        position = position.max(hi.to_bits().abs_diff(j.nu.to_bits()) as f64);
        let de = l.total_energy(hi)? - l.total_energy(lo)?;
        let dl = l.total_angmom(hi)? - l.total_angmom(lo)?;
        jump_size = jump_size.max((de - j.delta_e).abs()).max((dl - j.delta_l).abs());
        if !(de < 0.0 && dl < 0.0) {
            jump_size = f64::INFINITY;
        }
    }

    // Centred differences need the evenly spaced rows only.
    let mut slope = 0.0f64;
    for w in l.e_of_l_table(&uniform, SINGLE_VALUED_TOL)?.rows.windows(3) {
        if w[0].branch_n != w[2].branch_n || w[1].at_jump {
            continue;
        }
        let ratio = (w[2].e_total - w[0].e_total) / (w[2].l_total - w[0].l_total);
        slope = slope.max((ratio - w[1].nu).abs());
    }

    let count_ok = located == jumps.len()
        && table.rows.windows(2).filter(|w| w[0].branch_n != w[1].branch_n).count() == jumps.len();
    Ok(vec![
        Check::within("E(L) single-valued", table.violations.len() as f64, 0.0)
            .with_detail(format!("{} rows, L increasing: {}", table.rows.len(), table.l_increasing)),
        Check::within("E(L) jumps at each nu_n", if count_ok { position } else { f64::INFINITY }, 2.0)
            .with_detail(format!("{} jumps, distance in ulps", jumps.len())),
        Check::within("E(L) jump sizes", jump_size, 1e-12),
        Check::within("dE/dL = nu on branch", slope, 1e-4),
    ])
}

pub fn determinism_checks(_: &VerifyConfig) -> Result<Vec<Check>> {
    let cfg = RunConfig {
        beta: Some(DEVICE_BETA),
        i_cl_hat: Some(DEVICE_I_CL_HAT),
        nu_max: Some(DEVICE_NU_MAX),
        nu_step: Some(1e-4),
        ..RunConfig::default()
    };
    let a = cli::render_sweep(&cfg)?;
    let b = cli::render_sweep(&cfg)?;
    let differing = a.iter().zip(&b).filter(|(x, y)| x != y).count() + a.len().abs_diff(b.len());
    Ok(vec![Check::within("sweep output byte-identical", differing as f64, 0.0)
        .with_detail(format!("{} bytes", a.len()))])
}
