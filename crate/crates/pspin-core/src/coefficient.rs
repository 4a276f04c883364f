//! Series coefficients: rational × residual Gamma product × formal coupling power.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{ExactError, ExactResult};
use crate::gamma::GammaFactor;
use crate::rational::{format_rat, Rat};

/// One series coefficient.
///
/// The coupling constant of the generating function is never materialized as
/// a number; `coupling_power` is the exact exponent it carries. The Gamma
/// factor holds the transcendental part, normalized into (0, 1].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Coefficient {
    pub rational: Rat,
    pub gamma: GammaFactor,
    pub coupling_power: Rat,
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient {
            rational: Rat::zero(),
            gamma: GammaFactor::one(),
            coupling_power: Rat::zero(),
        }
    }

    pub fn one() -> Self {
        Coefficient::from_rational(Rat::one())
    }

    pub fn from_rational(r: Rat) -> Self {
        Coefficient {
            rational: r,
            gamma: GammaFactor::one(),
            coupling_power: Rat::zero(),
        }
    }

    pub fn with_coupling(r: Rat, coupling_power: Rat) -> Self {
        Coefficient {
            rational: r,
            gamma: GammaFactor::one(),
            coupling_power,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero()
    }

    pub fn mul(&self, other: &Coefficient) -> Coefficient {
        if self.is_zero() || other.is_zero() {
            return Coefficient::zero();
        }
        let mut gamma = self.gamma.clone();
        gamma.merge(&other.gamma);
        Coefficient {
            rational: &self.rational * &other.rational,
            gamma,
            coupling_power: &self.coupling_power + &other.coupling_power,
        }
    }

    pub fn scale(&self, r: &Rat) -> Coefficient {
        if r.is_zero() {
            return Coefficient::zero();
        }
        Coefficient {
            rational: &self.rational * r,
            gamma: self.gamma.clone(),
            coupling_power: self.coupling_power.clone(),
        }
    }

    /// Add a coefficient with identical gamma and coupling grading.
    ///
    /// Mixed-grading sums never arise in the engines (coupling powers grade
    /// the series and Gamma families are reduced first); a mismatch is a bug.
    pub fn add_same_grade(&self, other: &Coefficient) -> ExactResult<Coefficient> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.gamma != other.gamma || self.coupling_power != other.coupling_power {
            return Err(ExactError::GammaResidue(format!(
                "cannot add coefficients of different grade: {self} vs {other}"
            )));
        }
        let rational = &self.rational + &other.rational;
        Ok(if rational.is_zero() {
            Coefficient::zero()
        } else {
            Coefficient {
                rational,
                gamma: self.gamma.clone(),
                coupling_power: self.coupling_power.clone(),
            }
        })
    }

    /// The rational value, requiring the Gamma part to be empty.
    pub fn rational_value(&self) -> ExactResult<Rat> {
        if self.gamma.is_one() || self.is_zero() {
            Ok(self.rational.clone())
        } else {
            Err(ExactError::GammaResidue(format!(
                "residual Gamma factor {}",
                self.gamma
            )))
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rat(&self.rational))?;
        if !self.gamma.is_one() {
            write!(f, " {}", self.gamma)?;
        }
        if !self.coupling_power.is_zero() {
            write!(f, " c^({})", format_rat(&self.coupling_power))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::gamma_reduce;
    use crate::rational::rat;

    #[test]
    fn zero_has_empty_gamma_and_coupling() {
        let z = Coefficient::zero();
        assert!(z.is_zero());
        assert!(z.gamma.is_one());
        assert!(z.coupling_power.is_zero());
    }

    #[test]
    fn mul_merges_gamma_and_adds_coupling() {
        let (_, g13) = gamma_reduce(&[rat(1, 3)], &[]).unwrap();
        let a = Coefficient {
            rational: rat(1, 2),
            gamma: g13.clone(),
            coupling_power: rat(1, 3),
        };
        let b = Coefficient {
            rational: rat(3, 1),
            gamma: g13.inverse(),
            coupling_power: rat(2, 3),
        };
        let c = a.mul(&b);
        assert_eq!(c.rational, rat(3, 2));
        assert!(c.gamma.is_one());
        assert_eq!(c.coupling_power, rat(1, 1));
    }

    #[test]
    fn add_rejects_grade_mismatch() {
        let a = Coefficient::with_coupling(rat(1, 1), rat(1, 2));
        let b = Coefficient::with_coupling(rat(1, 1), rat(1, 3));
        assert!(a.add_same_grade(&b).is_err());
    }
}
