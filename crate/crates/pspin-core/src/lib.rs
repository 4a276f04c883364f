//! Exact computation of intersection numbers of the moduli space of p-spin
//! curves from matrix-model contour integrals.
//!
//! The crate is organized in three layers:
//!
//! - scalars: [`rational`], [`gamma`], [`bernoulli`], [`coefficient`] —
//!   arbitrary-precision rationals, symbolic Gamma reduction, Bernoulli
//!   numbers;
//! - series: [`series`], [`bivariate`], [`sector`] — truncated Puiseux /
//!   Laurent series, the formal exponential, residue extraction and sector
//!   moments;
//! - engines: [`one_point`], [`two_point`], [`open_kp`] — the generating
//!   functions themselves, and [`oracle`], an independent floating-point
//!   cross-check.

pub mod bernoulli;
pub mod bivariate;
pub mod coefficient;
pub mod error;
pub mod gamma;
pub mod one_point;
pub mod open_kp;
pub mod oracle;
pub mod rational;
pub mod sector;
pub mod series;
pub mod spin;
pub mod two_point;
pub mod verify;

pub use bernoulli::{bernoulli, euler_characteristic};
pub use coefficient::Coefficient;
pub use error::{ExactError, ExactResult, OracleError, OracleResult};
pub use gamma::{gamma_reduce, GammaFactor};
pub use rational::{parse_rat, Rat};
pub use series::PuiseuxSeries;
pub use spin::{
    admissible_components, solve_selection_one_point, two_point_selection, IntersectionRecord,
    PunctureLabel, PunctureType, RecordValue, SpinModel,
};
