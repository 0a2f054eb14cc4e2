//! Zero-point rotational energy of a ring with a Dirichlet cut.
//!
//! The crate evaluates the closed forms for the vacuum energy, angular
//! momentum and (negative) moment of inertia of a massless scalar on a
//! rotating cut ring, neutral or charged in a magnetic flux, and checks them
//! against independent routes: regularized mode sums ([`spectrum`]) and
//! numerical point splitting of the Green function ([`greens`],
//! [`pointsplit`]). [`landscape`] adds the classical rotational energy and
//! finds the exact global minimum of the resulting discontinuous energy
//! curve. [`cli`] and [`verify`] back the `ringvac` binary.
//!
//! Everything runs in natural units `ħ = c = 1` with the ring radius as the
//! unit of length; [`units`] converts to and from SI.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod extrapolate;
pub mod greens;
pub mod landscape;
pub mod oracles;
pub mod pointsplit;
pub mod spectrum;
pub mod units;
pub mod verify;
pub mod zeropoint;

pub use error::{Error, Result};
pub use landscape::{FieldKind, Landscape, MinimumReport};
pub use units::{DimensionlessState, PhysicalRing, UnitScales};
