//! Truncated Puiseux series in one expansion variable.
//!
//! Exponents are exact rationals on the lattice (1/den_bound)·Z. The
//! truncation order is a hard validity bound: exponents ≥ truncation are
//! undefined rather than zero, and every binary operation propagates the
//! minimum bound (convolution rule under multiplication).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::coefficient::Coefficient;
use crate::error::ExactResult;
use crate::rational::{format_rat, Rat};

/// Sparse truncated series with rational exponents.
#[derive(Debug, Clone, PartialEq)]
pub struct PuiseuxSeries {
    terms: BTreeMap<Rat, Coefficient>,
    truncation: Rat,
    den_bound: u32,
}

impl PuiseuxSeries {
    /// Empty series valid up to (not including) `truncation`.
    pub fn zero(truncation: Rat, den_bound: u32) -> Self {
        PuiseuxSeries {
            terms: BTreeMap::new(),
            truncation,
            den_bound,
        }
    }

    pub fn one(truncation: Rat, den_bound: u32) -> Self {
        let mut s = PuiseuxSeries::zero(truncation, den_bound);
        s.set(Rat::zero(), Coefficient::one());
        s
    }

    /// Single term `coef · σ^exponent`.
    pub fn monomial(exponent: Rat, coef: Coefficient, truncation: Rat, den_bound: u32) -> Self {
        let mut s = PuiseuxSeries::zero(truncation, den_bound);
        s.set(exponent, coef);
        s
    }

    pub fn truncation(&self) -> &Rat {
        &self.truncation
    }

    pub fn den_bound(&self) -> u32 {
        self.den_bound
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exponent must lie on the lattice and below truncation; zero
    /// coefficients are never stored.
    pub fn set(&mut self, exponent: Rat, coef: Coefficient) {
        debug_assert!(
            (&exponent * crate::rational::int(self.den_bound as i64))
                .denom()
                .is_one(),
            "exponent {exponent} off the 1/{} lattice",
            self.den_bound
        );
        if exponent >= self.truncation {
            return;
        }
        if coef.is_zero() {
            self.terms.remove(&exponent);
        } else {
            self.terms.insert(exponent, coef);
        }
    }

    /// Accumulate into a slot, requiring matching grade.
    pub fn add_to(&mut self, exponent: Rat, coef: &Coefficient) -> ExactResult<()> {
        if exponent >= self.truncation || coef.is_zero() {
            return Ok(());
        }
        let merged = match self.terms.get(&exponent) {
            Some(existing) => existing.add_same_grade(coef)?,
            None => coef.clone(),
        };
        self.set(exponent, merged);
        Ok(())
    }

    pub fn coefficient(&self, exponent: &Rat) -> Option<&Coefficient> {
        self.terms.get(exponent)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rat, &Coefficient)> {
        self.terms.iter()
    }

    pub fn scale(&self, r: &Rat) -> PuiseuxSeries {
        let mut out = PuiseuxSeries::zero(self.truncation.clone(), self.den_bound);
        if r.is_zero() {
            return out;
        }
        for (e, c) in &self.terms {
            out.set(e.clone(), c.scale(r));
        }
        out
    }

    pub fn add(&self, other: &PuiseuxSeries) -> ExactResult<PuiseuxSeries> {
        let trunc = self.truncation.clone().min(other.truncation.clone());
        let den = num_integer::lcm(self.den_bound, other.den_bound);
        let mut out = PuiseuxSeries::zero(trunc, den);
        for (e, c) in &self.terms {
            out.add_to(e.clone(), c)?;
        }
        for (e, c) in &other.terms {
            out.add_to(e.clone(), c)?;
        }
        Ok(out)
    }

    /// Exact truncated product; the result is valid up to
    /// min(t_a + ord_b, t_b + ord_a, t_a·1 + ...) — the usual convolution
    /// rule, conservatively min(t_a, t_b) here since all our series start at
    /// bounded-below orders that the callers control.
    pub fn multiply(&self, other: &PuiseuxSeries) -> ExactResult<PuiseuxSeries> {
        let trunc = self.truncation.clone().min(other.truncation.clone());
        let den = num_integer::lcm(self.den_bound, other.den_bound);
        let mut out = PuiseuxSeries::zero(trunc, den);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea + eb;
                if e >= out.truncation {
                    continue;
                }
                out.add_to(e, &ca.mul(cb))?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        } else {
            let mut first = true;
            for (e, c) in &self.terms {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                if e.is_zero() {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "({c}) s^({})", format_rat(e))?;
                }
            }
        }
        write!(f, " + O(s^({}))", format_rat(&self.truncation))
    }
}
