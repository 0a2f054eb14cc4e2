//! Total (classical plus zero-point) rotational energy as a function of `ν`,
//! its branch structure and its exact global minimum.
//!
//! On a branch of constant winding number `n` the charged-field energy is
//! `(Î/2 - C/24)ν² - C/24` and the angular momentum `(Î - C/12)ν`, with
//! `C = 1 + 6n(n + 1)`. Both are smooth inside the branch and jump together
//! at every `ν_n`. Branches are half-open, `[ν_n, ν_{n+1})`, following the
//! floor convention of the winding number.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::DimensionlessState;
use crate::zeropoint::{self, EnhancementCoefficient, DEFAULT_JUMP_TOL};

/// Offset used to evaluate the open right end of a branch from inside.
pub const ENDPOINT_EPS: f64 = 1e-9;

/// Default tolerance for the single-valuedness scan of the `E(L)` table.
pub const SINGLE_VALUED_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    /// Real scalar; insensitive to the magnetic field.
    Neutral,
    /// Complex scalar with two degrees of freedom, coupled to the flux.
    #[default]
    Charged,
}

impl std::str::FromStr for FieldKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "neutral" => Ok(FieldKind::Neutral),
            "charged" => Ok(FieldKind::Charged),
            other => Err(Error::config(format!("unknown field kind {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Branch {
    pub n: i64,
    pub nu_lo: f64,
    pub nu_hi: f64,
    pub c_factor: i128,
    /// Coefficient of `ν²` in the total energy.
    pub curvature: f64,
    /// Total energy at `ν = 0` continued along this branch.
    pub offset: f64,
}

impl Branch {
    pub fn energy(&self, nu: f64) -> f64 {
        self.curvature * nu * nu + self.offset
    }

    pub fn angmom(&self, nu: f64) -> f64 {
        2.0 * self.curvature * nu
    }

    pub fn contains(&self, nu: f64) -> bool {
        self.nu_lo <= nu && nu < self.nu_hi
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EndpointKind {
    /// Attained value.
    Closed,
    /// Limit approached from inside the branch, sampled `ENDPOINT_EPS` away.
    Open,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Candidate {
    pub nu: f64,
    pub energy: f64,
    pub branch_n: i64,
    pub endpoint: EndpointKind,
}

/// Energy and angular-momentum discontinuity at `ν_n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Jump {
    pub n: i64,
    pub nu: f64,
    pub delta_e: f64,
    pub delta_l: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinimumReport {
    pub nu_star: f64,
    pub e_star: f64,
    pub branch_n: i64,
    /// Energy of the device at rest.
    pub e_zero: f64,
    pub rotating_ground_state: bool,
    pub boundary_hit: bool,
    /// `ν* - n/β` for a minimizer at the start of branch `n ≥ 1`.
    pub offset_from_nonrelativistic: Option<f64>,
    pub candidates: Vec<Candidate>,
    pub jumps: Vec<Jump>,
}

impl MinimumReport {
    /// Work needed to bring the device from its ground state to rest.
    pub fn stopping_work(&self) -> f64 {
        self.e_zero - self.e_star
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ElTableRow {
    pub nu: f64,
    pub l_total: f64,
    pub e_total: f64,
    pub branch_n: i64,
    pub at_jump: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ElTable {
    pub rows: Vec<ElTableRow>,
    /// Row index pairs with (nearly) equal `L` but different `E`.
    pub violations: Vec<(usize, usize)>,
    /// `L` strictly increases along the rows.
    pub l_increasing: bool,
}

impl ElTable {
    pub fn single_valued(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Energy landscape of one ring configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Landscape {
    pub beta: f64,
    pub i_cl_hat: f64,
    pub nu_max: f64,
    pub field: FieldKind,
}

impl Landscape {
    pub fn new(beta: f64, i_cl_hat: f64, nu_max: f64, field: FieldKind) -> Result<Self> {
        DimensionlessState::new(0.0, beta, i_cl_hat, nu_max)?;
        if beta < 0.0 {
            return Err(Error::domain("beta must be non-negative; negative flux mirrors positive flux"));
        }
        if field == FieldKind::Neutral && beta != 0.0 {
            return Err(Error::domain("the neutral field does not couple to the flux; use beta = 0"));
        }
        Ok(Self { beta, i_cl_hat, nu_max, field })
    }

    pub fn from_state(state: &DimensionlessState, field: FieldKind) -> Result<Self> {
        Self::new(state.beta, state.i_cl_hat, state.nu_max, field)
    }

    fn check(&self, nu: f64) -> Result<()> {
        if nu.is_finite() && nu.abs() < self.nu_max {
            Ok(())
        } else {
            Err(Error::domain(format!("|nu| = {} must be below nu_max = {}", nu.abs(), self.nu_max)))
        }
    }

    pub fn zero_point_energy(&self, nu: f64) -> Result<f64> {
        self.check(nu)?;
        match self.field {
            FieldKind::Neutral => zeropoint::zp_energy_neutral(nu),
            FieldKind::Charged => zeropoint::zp_energy_charged(nu, self.beta),
        }
    }

    pub fn zero_point_angmom(&self, nu: f64) -> Result<f64> {
        self.check(nu)?;
        match self.field {
            FieldKind::Neutral => zeropoint::zp_angmom_neutral(nu),
            FieldKind::Charged => zeropoint::zp_angmom_charged(nu, self.beta),
        }
    }

    pub fn classical_energy(&self, nu: f64) -> f64 {
        self.i_cl_hat * nu * nu / 2.0
    }

    pub fn total_energy(&self, nu: f64) -> Result<f64> {
        Ok(self.classical_energy(nu) + self.zero_point_energy(nu)?)
    }

    pub fn total_angmom(&self, nu: f64) -> Result<f64> {
        Ok(self.i_cl_hat * nu + self.zero_point_angmom(nu)?)
    }

    pub fn winding(&self, nu: f64) -> Result<zeropoint::WindingNumber> {
        self.check(nu)?;
        match self.field {
            FieldKind::Neutral => zeropoint::winding(nu, 0.0, DEFAULT_JUMP_TOL),
            FieldKind::Charged => zeropoint::winding(nu, self.beta, DEFAULT_JUMP_TOL),
        }
    }

    fn branch(&self, n: i64, nu_lo: f64, nu_hi: f64) -> Branch {
        match self.field {
            FieldKind::Neutral => Branch {
                n: 0,
                nu_lo,
                nu_hi,
                c_factor: 1,
                curvature: self.i_cl_hat / 2.0 - 1.0 / 48.0,
                offset: -1.0 / 48.0,
            },
            FieldKind::Charged => {
                let c = EnhancementCoefficient::for_winding(n);
                let cf = c.as_f64();
                Branch {
                    n,
                    nu_lo,
                    nu_hi,
                    c_factor: c.c_factor,
                    curvature: self.i_cl_hat / 2.0 - cf / 24.0,
                    offset: -cf / 24.0,
                }
            }
        }
    }

    /// Branches covering `[0, nu_max)` in order, produced lazily.
    pub fn branches(&self) -> impl Iterator<Item = Branch> + '_ {
        let jumps = self.field == FieldKind::Charged && self.beta > 0.0;
        let mut next_n: i64 = 0;
        let mut lo = 0.0;
        std::iter::from_fn(move || {
            if lo >= self.nu_max {
                return None;
            }
            let n = next_n;
            let hi = if jumps {
                zeropoint::characteristic_nu(self.beta, (n + 1) as u64)
                    .map(|v| v.min(self.nu_max))
                    .unwrap_or(self.nu_max)
            } else {
                self.nu_max
            };
            let b = self.branch(n, lo, hi);
            lo = hi;
            next_n += 1;
            Some(b)
        })
    }

    pub fn enumerate_branches(&self) -> Vec<Branch> {
        self.branches().collect()
    }

    /// Discontinuities at each `ν_n` inside `(0, nu_max)`.
    pub fn jumps(&self) -> Vec<Jump> {
        let mut out = Vec::new();
        let mut prev: Option<Branch> = None;
        for b in self.branches() {
            if let Some(p) = prev {
                out.push(Jump {
                    n: b.n,
                    nu: b.nu_lo,
                    delta_e: b.energy(b.nu_lo) - p.energy(b.nu_lo),
                    delta_l: b.angmom(b.nu_lo) - p.angmom(b.nu_lo),
                });
            }
            prev = Some(b);
        }
        out
    }

    /// Exact global minimum over `0 ≤ ν < nu_max` by candidate enumeration.
    ///
    /// The energy is even in `ν`, so the non-negative representative is
    /// reported. Each branch energy is monotone in `ν ≥ 0`, so its infimum is
    /// attained at the closed left end or approached at the open right end.
    pub fn global_minimum(&self) -> Result<MinimumReport> {
        let mut candidates = Vec::new();
        for b in self.branches() {
            candidates.push(Candidate {
                nu: b.nu_lo,
                energy: b.energy(b.nu_lo),
                branch_n: b.n,
                endpoint: EndpointKind::Closed,
            });
            let inside = (b.nu_hi - ENDPOINT_EPS).max(b.nu_lo);
            candidates.push(Candidate {
                nu: inside,
                energy: b.energy(inside),
                branch_n: b.n,
                endpoint: EndpointKind::Open,
            });
        }
        let best = candidates
            .iter()
            .copied()
            .reduce(|best, c| {
                let better = c.energy < best.energy
                    || (c.energy == best.energy
                        && (c.nu.abs() < best.nu.abs()
                            || (c.nu.abs() == best.nu.abs() && c.branch_n < best.branch_n)));
                if better {
                    c
                } else {
                    best
                }
            })
            .ok_or_else(|| Error::domain("empty domain"))?;

        let e_zero = self.total_energy(0.0)?;
        let boundary_hit = best.endpoint == EndpointKind::Open && best.nu >= self.nu_max - 2.0 * ENDPOINT_EPS;
        let offset_from_nonrelativistic = (best.branch_n >= 1
            && best.endpoint == EndpointKind::Closed
            && self.field == FieldKind::Charged)
            .then(|| best.nu - best.branch_n as f64 / self.beta);
        Ok(MinimumReport {
            nu_star: best.nu,
            e_star: best.energy,
            branch_n: best.branch_n,
            e_zero,
            rotating_ground_state: best.energy < e_zero,
            boundary_hit,
            offset_from_nonrelativistic,
            candidates,
            jumps: self.jumps(),
        })
    }

    /// Parametric `(L(ν), E(ν))` table over an ascending grid.
    pub fn e_of_l_table(&self, nu_grid: &[f64], tol: f64) -> Result<ElTable> {
        if nu_grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::config("nu grid must be strictly increasing"));
        }
        let rows = nu_grid
            .iter()
            .map(|&nu| {
                let w = self.winding(nu)?;
                Ok(ElTableRow {
                    nu,
                    l_total: self.total_angmom(nu)?,
                    e_total: self.total_energy(nu)?,
                    branch_n: w.m_wind,
                    at_jump: w.at_jump,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let l_increasing = rows.windows(2).all(|w| w[1].l_total > w[0].l_total);

        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by(|&a, &b| rows[a].l_total.total_cmp(&rows[b].l_total));
        let violations = order
            .windows(2)
            .filter(|w| {
                let (a, b) = (&rows[w[0]], &rows[w[1]]);
                (a.l_total - b.l_total).abs() < tol && (a.e_total - b.e_total).abs() > tol
            })
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect();
        Ok(ElTable { rows, violations, l_increasing })
    }
}
