//! Error types shared across the engine.

use std::fmt;

use crate::rational::Rat;

/// Errors raised by the exact (symbolic) layers.
#[derive(Debug, Clone, PartialEq)]
pub enum ExactError {
    /// Gamma evaluated at a non-positive integer argument.
    Pole { argument: Rat },
    /// `formal_exp` received a term with non-positive sigma grading.
    Grading { sigma_exponent: Rat },
    /// Spin p = 0 is not a model.
    ZeroSpin,
    /// A geometric expansion cannot reach the requested order.
    Truncation(String),
    /// Gamma factors failed to cancel where a rational value was required.
    GammaResidue(String),
    /// Normalization Gamma factor is singular.
    NormalizationPole { argument: Rat },
    /// Operation not defined for this spin value.
    UnsupportedSpin { p: Rat, operation: &'static str },
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::Pole { argument } => {
                write!(f, "Gamma pole at non-positive integer argument {argument}")
            }
            ExactError::Grading { sigma_exponent } => write!(
                f,
                "formal_exp requires strictly positive sigma grading, got exponent {sigma_exponent}"
            ),
            ExactError::ZeroSpin => write!(f, "spin p must be nonzero"),
            ExactError::Truncation(msg) => write!(f, "truncation error: {msg}"),
            ExactError::GammaResidue(msg) => {
                write!(f, "Gamma factors failed to cancel: {msg}")
            }
            ExactError::NormalizationPole { argument } => {
                write!(f, "normalization Gamma factor singular at {argument}")
            }
            ExactError::UnsupportedSpin { p, operation } => {
                write!(f, "{operation} is not defined for p = {p}")
            }
        }
    }
}

impl std::error::Error for ExactError {}

/// Errors raised by the floating-point oracle.
#[derive(Debug, Clone, PartialEq)]
pub enum OracleError {
    /// Argument outside the supported range.
    Range { what: &'static str, value: f64 },
    /// A quadrature failed to converge to the requested tolerance.
    Convergence { what: &'static str, achieved: f64, requested: f64 },
    /// Two poles of a residue sum coincide within tolerance.
    DegeneratePole { separation: f64 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::Range { what, value } => write!(f, "{what}: argument {value} out of range"),
            OracleError::Convergence { what, achieved, requested } => write!(
                f,
                "{what}: quadrature reached {achieved:e}, requested {requested:e}"
            ),
            OracleError::DegeneratePole { separation } => {
                write!(f, "degenerate poles separated by {separation:e}")
            }
        }
    }
}

impl std::error::Error for OracleError {}

pub type ExactResult<T> = Result<T, ExactError>;
pub type OracleResult<T> = Result<T, OracleError>;
