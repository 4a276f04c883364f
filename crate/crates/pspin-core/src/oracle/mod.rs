//! Independent floating-point verification of the symbolic engines.
//!
//! Direct quadrature of the generating integrals (steepest-descent rays and
//! vertical-line contours), Airy-function evaluation, and residue/contour
//! sums for the finite-N correlators. Everything here is deliberately
//! decoupled from the exact series code: agreement between the two sides is
//! the cross-check.

pub mod airy;
pub mod finite_n;
pub mod one_point;
pub mod quad;
pub mod two_point;

pub use airy::airy_ai;
pub use finite_n::{
    finite_n_one_point, finite_n_two_point, hermitian_one_point, hermitian_two_point,
    p2_trend_estimate, SourceConfig,
};
pub use one_point::{one_point_numeric, p3_airy_closed_form, raw_contour_integral};
pub use quad::ComplexSeriesSample;
pub use two_point::{p3_two_point, p4_two_point, two_point_numeric, two_point_p3_leading_coefficient};

pub(crate) use finite_n::solve4 as finite_n_solve4;
