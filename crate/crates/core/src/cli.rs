//! Command-line front end.
//!
//! Every subcommand reads the same [`RunConfig`]. Values come from an
//! optional `key = value` file (`--config`), overridden by flags. Output is
//! written to `--output` or stdout; CSV floats use 17 significant digits and
//! JSON documents carry a `provenance` block.

use std::f64::consts::PI;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::greens::{self, calg_closed, calg_series, SeriesValue};
use crate::landscape::{Branch, FieldKind, Landscape, MinimumReport, ENDPOINT_EPS, SINGLE_VALUED_TOL};
use crate::pointsplit::{t00_point_split_at, PointSplit, SplitConfig};
use crate::spectrum::{Regulator, RegulatorKind};
use crate::units::{
    self, ClassicalInertia, PhysicalRing, UnitScales, DEFAULT_NU_MAX, ELEMENTARY_CHARGE, HBAR, SPEED_OF_LIGHT,
};
use crate::verify::{self, VerifyConfig, VerifyReport};
use crate::zeropoint::{self, EnhancementCoefficient, WindingNumber, DEFAULT_JUMP_TOL};

pub const SWEEP_HEADER: [&str; 8] = ["nu", "M", "C", "e_zp", "e_cl", "e_total", "l_total", "at_jump"];

#[derive(Debug, Parser)]
#[command(name = "ringvac", version, about = "Zero-point rotational energy of a cut ring")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Tabulate energy and angular momentum over a ν grid.
    Sweep,
    /// Exact global minimum of the total energy.
    Minimize,
    /// Branches of constant winding number.
    Branches,
    /// Green function and structure function at one point pair.
    Greens,
    /// Point-split energy density.
    T00,
    /// Run the consistency checks; exit code 1 if any fails.
    Verify,
    /// Dimensionless parameters and verdict for a ring given in SI units.
    Estimate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

fn parse_regulator(s: &str) -> std::result::Result<RegulatorKind, String> {
    match s {
        "finite-part" => Ok(RegulatorKind::FinitePart),
        "exp-cutoff" => Ok(RegulatorKind::ExpCutoff),
        other => Err(format!("unknown regulator {other:?}; expected finite-part or exp-cutoff")),
    }
}

/// All settings, each optional; unset values take the documented defaults.
#[derive(Debug, Clone, Default, PartialEq, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Settings file of `key = value` lines; flags take precedence.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,

    /// Flux parameter eBR²/ħ [default: 0].
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    /// Classical moment of inertia in units of ħR/c [default: 0].
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i_cl_hat: Option<f64>,
    /// Exclusive bound on |ν| [default: 0.99].
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu_max: Option<f64>,
    #[arg(long, global = true, value_parser = clap::value_parser!(FieldKind))]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldKind>,

    /// First sweep point [default: 0].
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu_start: Option<f64>,
    /// Last sweep point, inclusive [default: up to but excluding nu_max].
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu_end: Option<f64>,
    /// Sweep spacing [default: 1e-3].
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu_step: Option<f64>,

    /// Angular velocity for single-point commands [default: 0].
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<f64>,
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_prime: Option<f64>,
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<f64>,
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_prime: Option<f64>,
    /// Feynman damping for `greens` [default: 0].
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    /// Also sum the damped mode series up to this many terms (`greens`).
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_max: Option<u64>,

    #[arg(long, global = true, value_parser = parse_regulator)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regulator: Option<RegulatorKind>,
    #[arg(long, global = true, value_delimiter = ',')]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilons: Option<Vec<f64>>,

    /// Ring radius in metres.
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius_si: Option<f64>,
    /// Magnetic field in tesla [default: 0].
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_field_si: Option<f64>,
    /// Classical moment of inertia in kg·m².
    #[arg(long, global = true, conflicts_with = "mass_per_length")]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i_cl_si: Option<f64>,
    /// Linear mass density in kg/m.
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mass_per_length: Option<f64>,
    /// Carrier charge in units of e [default: 1].
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub charge_quanta: Option<i32>,
    /// Report the enhancement coefficient for this winding number (`estimate`).
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub winding: Option<i64>,

    /// Seed for the sampled verification points.
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl RunConfig {
    /// Parses a settings file.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_owned(), source })?;
        toml::from_str(&text).map_err(|e| Error::config(format!("{}: {}", path.display(), e.message())))
    }

    /// `self` with every value set in `over` replaced.
    pub fn overridden_by(&self, over: &RunConfig) -> Result<Self> {
        let mut base = serde_json::to_value(self).map_err(|e| Error::config(e.to_string()))?;
        let over_value = serde_json::to_value(over).map_err(|e| Error::config(e.to_string()))?;
        if let (Some(b), Some(o)) = (base.as_object_mut(), over_value.as_object()) {
            for (k, v) in o {
                b.insert(k.clone(), v.clone());
            }
        }
        let mut merged: RunConfig = serde_json::from_value(base).map_err(|e| Error::config(e.to_string()))?;
        merged.config = over.config.clone().or_else(|| self.config.clone());
        Ok(merged)
    }

    /// Applies the file named by `--config`, if any, under the flags.
    pub fn resolve(flags: &RunConfig) -> Result<Self> {
        match &flags.config {
            Some(path) => Self::from_file(path)?.overridden_by(flags),
            None => Ok(flags.clone()),
        }
    }

    pub fn beta(&self) -> f64 {
        self.beta.unwrap_or(0.0)
    }

    pub fn i_cl_hat(&self) -> f64 {
        self.i_cl_hat.unwrap_or(0.0)
    }

    pub fn nu_max(&self) -> f64 {
        self.nu_max.unwrap_or(DEFAULT_NU_MAX)
    }

    pub fn field(&self) -> FieldKind {
        self.field.unwrap_or_default()
    }

    pub fn landscape(&self) -> Result<Landscape> {
        Landscape::new(self.beta(), self.i_cl_hat(), self.nu_max(), self.field())
    }

    pub fn regulator(&self) -> Result<Regulator> {
        let default = Regulator::default();
        let r = match self.regulator.unwrap_or(default.kind) {
            RegulatorKind::FinitePart => Regulator::finite_part(),
            RegulatorKind::ExpCutoff => {
                Regulator::exp_cutoff(self.epsilons.clone().unwrap_or(default.epsilons), default.richardson_order)
            }
        };
        r.validate()?;
        Ok(r)
    }

    /// Ascending sweep grid `ν_k = start + k·step`.
    pub fn sweep_grid(&self) -> Result<Vec<f64>> {
        let step = self.nu_step.unwrap_or(1e-3);
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::config(format!("nu_step = {step} must be positive")));
        }
        let start = self.nu_start.unwrap_or(0.0);
        let nu_max = self.nu_max();
        let (end, inclusive) = match self.nu_end {
            Some(end) => (end, true),
            None => (nu_max, false),
        };
        if !(start.is_finite() && end.is_finite()) || end < start || (!inclusive && end <= start) {
            return Err(Error::config(format!("empty sweep range [{start}, {end}]")));
        }
        // Absorb the rounding of (end - start)/step so that an end that is
        // a whole number of steps away is always reached.
        let span = (end - start) / step;
        let mut count = (span + 1e-9 * span.max(1.0)).floor() as usize + 1;
        if !inclusive && start + (count - 1) as f64 * step >= end {
            count -= 1;
        }
        let grid: Vec<f64> = (0..count).map(|k| start + k as f64 * step).collect();
        if let Some(bad) = grid.iter().find(|nu| nu.abs() >= nu_max) {
            return Err(Error::domain(format!("sweep point {bad} is outside |nu| < nu_max = {nu_max}")));
        }
        if grid.is_empty() {
            return Err(Error::config("empty sweep range"));
        }
        Ok(grid)
    }

    fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    fn json_only(&self, command: &str) -> Result<()> {
        match self.format {
            Some(Format::Csv) => Err(Error::config(format!("{command} writes JSON only"))),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Constants {
    pub hbar: f64,
    pub speed_of_light: f64,
    pub elementary_charge: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub jump_tol: f64,
    pub endpoint_eps: f64,
    pub singular_tol: f64,
    pub single_valued_tol: f64,
}

/// Metadata that makes every number in a JSON document traceable.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Provenance {
    pub tool: &'static str,
    pub version: &'static str,
    pub constants: Constants,
    pub tolerances: Tolerances,
    pub regulator: Regulator,
    pub point_split: SplitConfig,
    pub config: RunConfig,
}

impl Provenance {
    pub fn new(cfg: &RunConfig) -> Result<Self> {
        let mut config = cfg.clone();
        config.config = None;
        config.output = None;
        Ok(Self {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            constants: Constants { hbar: HBAR, speed_of_light: SPEED_OF_LIGHT, elementary_charge: ELEMENTARY_CHARGE },
            tolerances: Tolerances {
                jump_tol: DEFAULT_JUMP_TOL,
                endpoint_eps: ENDPOINT_EPS,
                singular_tol: greens::SINGULAR_TOL,
                single_valued_tol: SINGLE_VALUED_TOL,
            },
            regulator: cfg.regulator()?,
            point_split: SplitConfig::default(),
            config,
        })
    }
}

#[derive(Serialize)]
struct Document<'a, T: Serialize> {
    provenance: Provenance,
    #[serde(flatten)]
    body: &'a T,
}

fn json<T: Serialize>(cfg: &RunConfig, body: &T) -> Result<Vec<u8>> {
    let doc = Document { provenance: Provenance::new(cfg)?, body };
    let mut out = serde_json::to_vec_pretty(&doc).map_err(|e| Error::config(e.to_string()))?;
    out.push(b'\n');
    Ok(out)
}

fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_bytes(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let to_err = |e: csv::Error| Error::config(format!("csv: {e}"));
    w.write_record(header).map_err(to_err)?;
    for row in rows {
        w.write_record(&row).map_err(to_err)?;
    }
    w.into_inner().map_err(|e| Error::config(format!("csv: {e}")))
}

/// Writes to `--output`, or to stdout when none is given.
pub fn emit(cfg: &RunConfig, bytes: &[u8]) -> Result<()> {
    match &cfg.output {
        Some(path) => std::fs::write(path, bytes).map_err(|source| Error::Io { path: path.clone(), source }),
        None => std::io::stdout()
            .lock()
            .write_all(bytes)
            .map_err(|source| Error::Io { path: PathBuf::from("<stdout>"), source }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub nu: f64,
    #[serde(rename = "M")]
    pub m_wind: i64,
    #[serde(rename = "C")]
    pub c_factor: i128,
    pub e_zp: f64,
    pub e_cl: f64,
    pub e_total: f64,
    pub l_total: f64,
    pub at_jump: bool,
}

impl SweepRow {
    fn csv_record(&self) -> Vec<String> {
        vec![
            fmt_float(self.nu),
            self.m_wind.to_string(),
            self.c_factor.to_string(),
            fmt_float(self.e_zp),
            fmt_float(self.e_cl),
            fmt_float(self.e_total),
            fmt_float(self.l_total),
            self.at_jump.to_string(),
        ]
    }
}

/// Rows are evaluated in parallel and returned in grid order.
pub fn sweep_rows(cfg: &RunConfig) -> Result<Vec<SweepRow>> {
    let landscape = cfg.landscape()?;
    let grid = cfg.sweep_grid()?;
    grid.par_iter()
        .map(|&nu| {
            let w = landscape.winding(nu)?;
            let e_zp = landscape.zero_point_energy(nu)?;
            let e_cl = landscape.classical_energy(nu);
            Ok(SweepRow {
                nu,
                m_wind: w.m_wind,
                c_factor: match landscape.field {
                    FieldKind::Neutral => 1,
                    FieldKind::Charged => w.enhancement().c_factor,
                },
                e_zp,
                e_cl,
                e_total: e_cl + e_zp,
                l_total: landscape.total_angmom(nu)?,
                at_jump: w.at_jump,
            })
        })
        .collect()
}

#[derive(Serialize)]
struct SweepDoc<'a> {
    landscape: Landscape,
    rows: &'a [SweepRow],
}

pub fn render_sweep(cfg: &RunConfig) -> Result<Vec<u8>> {
    let rows = sweep_rows(cfg)?;
    match cfg.format_or(Format::Csv) {
        Format::Csv => csv_bytes(&SWEEP_HEADER, rows.iter().map(SweepRow::csv_record)),
        Format::Json => json(cfg, &SweepDoc { landscape: cfg.landscape()?, rows: &rows }),
    }
}

/// The minimum converted to SI for a ring of the given radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MinimumSi {
    pub radius_si: f64,
    pub omega_star: f64,
    pub e_star: f64,
    pub e_zero: f64,
    pub stopping_work: f64,
}

impl MinimumSi {
    pub fn new(report: &MinimumReport, scales: &UnitScales) -> Self {
        Self {
            radius_si: scales.radius_si(),
            omega_star: scales.to_si_frequency(report.nu_star),
            e_star: scales.to_si_energy(report.e_star),
            e_zero: scales.to_si_energy(report.e_zero),
            stopping_work: scales.to_si_energy(report.stopping_work()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinimizeOutput {
    pub landscape: Landscape,
    pub report: MinimumReport,
    pub si: Option<MinimumSi>,
}

pub fn minimize(cfg: &RunConfig) -> Result<MinimizeOutput> {
    let landscape = cfg.landscape()?;
    let report = landscape.global_minimum()?;
    let si = cfg.radius_si.map(UnitScales::for_radius).transpose()?.map(|s| MinimumSi::new(&report, &s));
    Ok(MinimizeOutput { landscape, report, si })
}

pub fn render_minimize(cfg: &RunConfig) -> Result<Vec<u8>> {
    cfg.json_only("minimize")?;
    json(cfg, &minimize(cfg)?)
}

#[derive(Serialize)]
struct BranchesDoc {
    landscape: Landscape,
    branches: Vec<Branch>,
}

pub fn render_branches(cfg: &RunConfig) -> Result<Vec<u8>> {
    let landscape = cfg.landscape()?;
    let branches = landscape.enumerate_branches();
    match cfg.format_or(Format::Csv) {
        Format::Csv => csv_bytes(
            &["n", "nu_lo", "nu_hi", "C", "curvature", "offset"],
            branches.iter().map(|b| {
                vec![
                    b.n.to_string(),
                    fmt_float(b.nu_lo),
                    fmt_float(b.nu_hi),
                    b.c_factor.to_string(),
                    fmt_float(b.curvature),
                    fmt_float(b.offset),
                ]
            }),
        ),
        Format::Json => json(cfg, &BranchesDoc { landscape, branches }),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GreensOutput {
    pub nu: f64,
    pub t: f64,
    pub t_prime: f64,
    pub phi: f64,
    pub phi_prime: f64,
    pub point: greens::GPoint,
    pub structure_function: Complex64,
    pub green: Complex64,
    pub series: Option<SeriesValue>,
}

pub fn greens_at(cfg: &RunConfig) -> Result<GreensOutput> {
    let nu = cfg.nu.unwrap_or(0.0);
    let (t, t_prime) = (cfg.t.unwrap_or(0.0), cfg.t_prime.unwrap_or(0.5));
    let (phi, phi_prime) = (cfg.phi.unwrap_or(1.0), cfg.phi_prime.unwrap_or(2.0));
    let point = greens::rotating_point(t, t_prime, phi, phi_prime, nu, cfg.delta.unwrap_or(0.0))?;
    let structure_function = calg_closed(&point)?;
    let series = cfg.m_max.map(|m| calg_series(&point, m)).transpose()?;
    Ok(GreensOutput {
        nu,
        t,
        t_prime,
        phi,
        phi_prime,
        point,
        structure_function,
        green: Complex64::i() / PI * structure_function,
        series,
    })
}

pub fn render_greens(cfg: &RunConfig) -> Result<Vec<u8>> {
    cfg.json_only("greens")?;
    json(cfg, &greens_at(cfg)?)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct T00Output {
    pub point_split: PointSplit,
    /// `-(1 + ν²)/(96π)`.
    pub closed_form: f64,
    pub relative_error: f64,
}

pub fn t00(cfg: &RunConfig) -> Result<T00Output> {
    let nu = cfg.nu.unwrap_or(0.0);
    let point_split = t00_point_split_at(nu, cfg.t.unwrap_or(0.0), cfg.phi.unwrap_or(2.0), &SplitConfig::default())?;
    let closed_form = -(1.0 + nu * nu) / (96.0 * PI);
    let relative_error = ((point_split.density - closed_form) / closed_form).abs();
    Ok(T00Output { point_split, closed_form, relative_error })
}

pub fn render_t00(cfg: &RunConfig) -> Result<Vec<u8>> {
    cfg.json_only("t00")?;
    json(cfg, &t00(cfg)?)
}

pub fn verify_config(cfg: &RunConfig) -> Result<VerifyConfig> {
    let mut v = VerifyConfig { regulator: cfg.regulator()?, ..VerifyConfig::default() };
    if let Some(seed) = cfg.seed {
        v.seed = seed;
    }
    Ok(v)
}

/// Runs the checks and renders them as text lines, CSV or JSON.
pub fn render_verify(cfg: &RunConfig) -> Result<(Vec<u8>, VerifyReport)> {
    let report = verify::run_all(&verify_config(cfg)?);
    let bytes = match cfg.format {
        None => {
            let mut text = String::new();
            for c in &report.checks {
                text.push_str(&c.line());
                text.push('\n');
            }
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            text.push_str(&format!("{} checks, {} failed, seed {}\n", report.checks.len(), failed, report.seed));
            text.into_bytes()
        }
        Some(Format::Csv) => csv_bytes(
            &["name", "measured", "tolerance", "passed"],
            report.checks.iter().map(|c| {
                vec![c.name.clone(), fmt_float(c.measured), fmt_float(c.tolerance), c.passed.to_string()]
            }),
        )?,
        Some(Format::Json) => json(cfg, &report)?,
    };
    Ok((bytes, report))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MinimumSummary {
    pub nu_star: f64,
    pub e_star: f64,
    pub branch_n: i64,
    pub rotating_ground_state: bool,
    pub boundary_hit: bool,
    pub si: MinimumSi,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EstimateOutput {
    pub ring: PhysicalRing,
    pub scales: UnitScales,
    pub beta: f64,
    pub i_cl_hat: f64,
    /// First jump `ν₁`; absent without a field.
    pub nu_ch: Option<f64>,
    /// `1/β`, the slow-rotation limit of `ν₁`.
    pub nu_ch_nonrelativistic: Option<f64>,
    /// `Ω_ch = ν₁ c/R`, rad/s.
    pub omega_ch_si: Option<f64>,
    /// `ħc/(qBR³) = c/(βR)`, rad/s.
    pub omega_ch_nonrelativistic_si: Option<f64>,
    pub nu: f64,
    pub winding: WindingNumber,
    pub c_factor: i128,
    /// Charged zero-point energy at `nu`, J.
    pub e_zp_si: f64,
    /// Zero-point moment of inertia without enhancement, kg·m².
    pub i_zp_si: f64,
    pub requested_winding: Option<EnhancementCoefficient>,
    pub minimum: MinimumSummary,
}

pub fn estimate(cfg: &RunConfig) -> Result<EstimateOutput> {
    let radius_si = cfg.radius_si.ok_or_else(|| Error::config("estimate needs --radius-si"))?;
    let scales = UnitScales::for_radius(radius_si)?;
    let inertia = match (cfg.i_cl_si, cfg.mass_per_length, cfg.i_cl_hat) {
        (Some(i), _, _) => ClassicalInertia::MomentOfInertia(i),
        (None, Some(lambda), _) => ClassicalInertia::MassPerLength(lambda),
        (None, None, i_hat) => ClassicalInertia::MomentOfInertia(scales.to_si_inertia(i_hat.unwrap_or(0.0))),
    };
    let ring = PhysicalRing {
        radius_si,
        b_field_si: cfg.b_field_si.unwrap_or(0.0),
        inertia,
        charge_quanta: cfg.charge_quanta.unwrap_or(1),
    };
    let (state, scales) = units::reduce(&ring)?;
    let beta = state.beta.abs();
    let nu_ch = (beta > 0.0).then(|| zeropoint::characteristic_nu(beta, 1)).transpose()?;
    let nu = cfg.nu.unwrap_or(0.0);
    let winding = zeropoint::winding(nu, beta, DEFAULT_JUMP_TOL)?;
    let landscape = Landscape::new(beta, state.i_cl_hat, cfg.nu_max(), FieldKind::Charged)?;
    let report = landscape.global_minimum()?;
    Ok(EstimateOutput {
        ring,
        scales,
        beta,
        i_cl_hat: state.i_cl_hat,
        nu_ch,
        nu_ch_nonrelativistic: (beta > 0.0).then(|| 1.0 / beta),
        omega_ch_si: nu_ch.map(|v| scales.to_si_frequency(v)),
        omega_ch_nonrelativistic_si: (beta > 0.0).then(|| scales.to_si_frequency(1.0 / beta)),
        nu,
        winding,
        c_factor: winding.enhancement().c_factor,
        e_zp_si: scales.to_si_energy(zeropoint::zp_energy_charged(nu, beta)?),
        i_zp_si: zeropoint::zp_moment_of_inertia_si(&scales),
        requested_winding: cfg.winding.map(EnhancementCoefficient::for_winding),
        minimum: MinimumSummary {
            nu_star: report.nu_star,
            e_star: report.e_star,
            branch_n: report.branch_n,
            rotating_ground_state: report.rotating_ground_state,
            boundary_hit: report.boundary_hit,
            si: MinimumSi::new(&report, &scales),
        },
    })
}

pub fn render_estimate(cfg: &RunConfig) -> Result<Vec<u8>> {
    cfg.json_only("estimate")?;
    json(cfg, &estimate(cfg)?)
}

pub fn cmd_sweep(cfg: &RunConfig) -> Result<()> {
    emit(cfg, &render_sweep(cfg)?)
}

pub fn cmd_minimize(cfg: &RunConfig) -> Result<()> {
    emit(cfg, &render_minimize(cfg)?)
}

pub fn cmd_branches(cfg: &RunConfig) -> Result<()> {
    emit(cfg, &render_branches(cfg)?)
}

pub fn cmd_greens(cfg: &RunConfig) -> Result<()> {
    emit(cfg, &render_greens(cfg)?)
}

pub fn cmd_t00(cfg: &RunConfig) -> Result<()> {
    emit(cfg, &render_t00(cfg)?)
}

/// Returns whether every check passed.
pub fn cmd_verify(cfg: &RunConfig) -> Result<bool> {
    let (bytes, report) = render_verify(cfg)?;
    emit(cfg, &bytes)?;
    Ok(report.all_passed())
}

pub fn cmd_estimate(cfg: &RunConfig) -> Result<()> {
    emit(cfg, &render_estimate(cfg)?)
}

/// Runs a parsed command line; the value is the process exit code.
pub fn run(cli: &Cli) -> Result<i32> {
    let cfg = RunConfig::resolve(&cli.config)?;
    match cli.command {
        Command::Sweep => cmd_sweep(&cfg)?,
        Command::Minimize => cmd_minimize(&cfg)?,
        Command::Branches => cmd_branches(&cfg)?,
        Command::Greens => cmd_greens(&cfg)?,
        Command::T00 => cmd_t00(&cfg)?,
        Command::Verify => return Ok(if cmd_verify(&cfg)? { 0 } else { 1 }),
        Command::Estimate => cmd_estimate(&cfg)?,
    }
    Ok(0)
}
