//! Laurent/Puiseux sums in one contour variable and one σ variable.
//!
//! This is the workhorse behind the generating-function expansions: the
//! contour variable (u or y) may carry negative and fractional exponents,
//! while every σ exponent of an argument to [`formal_exp`] must be strictly
//! positive — that grading is what makes the exponential a finite sum at any
//! truncation.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::coefficient::Coefficient;
use crate::error::{ExactError, ExactResult};
use crate::rational::{factorial, format_rat, Rat};
use crate::series::PuiseuxSeries;

/// Sparse sum of monomials `coef · y^a · σ^b`.
#[derive(Debug, Clone, PartialEq)]
pub struct BivariateMonomialSum {
    terms: BTreeMap<(Rat, Rat), Coefficient>,
    sigma_truncation: Rat,
}

impl BivariateMonomialSum {
    pub fn zero(sigma_truncation: Rat) -> Self {
        BivariateMonomialSum {
            terms: BTreeMap::new(),
            sigma_truncation,
        }
    }

    pub fn one(sigma_truncation: Rat) -> Self {
        let mut s = BivariateMonomialSum::zero(sigma_truncation);
        s.set(Rat::zero(), Rat::zero(), Coefficient::one());
        s
    }

    pub fn sigma_truncation(&self) -> &Rat {
        &self.sigma_truncation
    }

    pub fn set(&mut self, contour_exp: Rat, sigma_exp: Rat, coef: Coefficient) {
        if sigma_exp >= self.sigma_truncation {
            return;
        }
        let key = (contour_exp, sigma_exp);
        if coef.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, coef);
        }
    }

    pub fn add_to(&mut self, contour_exp: Rat, sigma_exp: Rat, coef: &Coefficient) -> ExactResult<()> {
        if sigma_exp >= self.sigma_truncation || coef.is_zero() {
            return Ok(());
        }
        let key = (contour_exp, sigma_exp);
        let merged = match self.terms.get(&key) {
            Some(existing) => existing.add_same_grade(coef)?,
            None => coef.clone(),
        };
        if merged.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, merged);
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Rat, Rat), &Coefficient)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiply(&self, other: &BivariateMonomialSum) -> ExactResult<BivariateMonomialSum> {
        let trunc = self
            .sigma_truncation
            .clone()
            .min(other.sigma_truncation.clone());
        let mut out = BivariateMonomialSum::zero(trunc);
        for ((ya, sa), ca) in &self.terms {
            for ((yb, sb), cb) in &other.terms {
                let s = sa + sb;
                if s >= out.sigma_truncation {
                    continue;
                }
                out.add_to(ya + yb, s, &ca.mul(cb))?;
            }
        }
        Ok(out)
    }

    /// `Σ_k self^k / k!`, truncated by the σ grading.
    ///
    /// Every term of the argument must have strictly positive σ exponent,
    /// otherwise the sum would not terminate.
    pub fn formal_exp(&self) -> ExactResult<BivariateMonomialSum> {
        let mut min_sigma: Option<&Rat> = None;
        for ((_, s), _) in &self.terms {
            if !s.is_positive() {
                return Err(ExactError::Grading {
                    sigma_exponent: s.clone(),
                });
            }
            min_sigma = Some(match min_sigma {
                Some(m) if m <= s => m,
                _ => s,
            });
        }
        let mut out = BivariateMonomialSum::one(self.sigma_truncation.clone());
        let Some(min_sigma) = min_sigma else {
            return Ok(out); // exp(0) = 1
        };
        let mut power = BivariateMonomialSum::one(self.sigma_truncation.clone());
        let mut k: u64 = 0;
        let mut reach = Rat::zero();
        loop {
            k += 1;
            reach += min_sigma;
            if reach >= self.sigma_truncation {
                break;
            }
            power = power.multiply(self)?;
            if power.is_zero() {
                break;
            }
            let inv_fact = Rat::from_integer(1.into()) / factorial(k);
            for ((y, s), c) in &power.terms {
                out.add_to(y.clone(), s.clone(), &c.scale(&inv_fact))?;
            }
        }
        Ok(out)
    }

    /// σ-series of the coefficient of `y^{-1}` — the residue at the origin of
    /// the contour variable.
    pub fn residue_at_zero(&self, den_bound: u32) -> PuiseuxSeries {
        let minus_one = -Rat::from_integer(1.into());
        let mut out = PuiseuxSeries::zero(self.sigma_truncation.clone(), den_bound);
        for ((y, s), c) in &self.terms {
            if *y == minus_one {
                out.add_to(s.clone(), c)
                    .expect("residue grade collision: mixed Gamma families at one sigma power");
            }
        }
        out
    }
}

impl fmt::Display for BivariateMonomialSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        } else {
            let mut first = true;
            for ((y, s), c) in &self.terms {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "({c}) y^({}) s^({})", format_rat(y), format_rat(s))?;
            }
        }
        write!(f, " + O(s^({}))", format_rat(&self.sigma_truncation))
    }
}
