//! Symbolic Gamma factors with exact reduction.
//!
//! A [`GammaFactor`] is a formal product `∏ Γ(aᵢ)^{eᵢ}`. Normalization uses
//! only the functional equation Γ(x+1) = x·Γ(x) to move every argument into
//! the half-open interval (0, 1], extracting the rational prefactor exactly.
//! Γ(1) = 1 disappears, so integer arguments reduce to pure rationals and a
//! product of Gammas whose arguments differ by integers reduces to a single
//! rational multiple of one residual Gamma.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{ExactError, ExactResult};
use crate::rational::{is_nonpositive_integer, Rat};

/// Formal product of Gamma functions at rational arguments in (0, 1].
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GammaFactor {
    factors: BTreeMap<Rat, i64>,
}

impl GammaFactor {
    /// The empty product (i.e. 1).
    pub fn one() -> Self {
        GammaFactor::default()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Residual factors as (argument, exponent) pairs, arguments in (0, 1].
    pub fn factors(&self) -> impl Iterator<Item = (&Rat, i64)> {
        self.factors.iter().map(|(a, &e)| (a, e))
    }

    fn insert(&mut self, arg: Rat, exp: i64) {
        if exp == 0 {
            return;
        }
        let entry = self.factors.entry(arg).or_insert(0);
        *entry += exp;
        if *entry == 0 {
            self.factors.retain(|_, e| *e != 0);
        }
    }

    /// Multiply by `Γ(arg)^exp`, normalizing `arg` into (0, 1].
    ///
    /// Returns the rational prefactor extracted by the shifts.
    pub fn push(&mut self, arg: Rat, exp: i64) -> ExactResult<Rat> {
        if is_nonpositive_integer(&arg) {
            return Err(ExactError::Pole { argument: arg });
        }
        let (pref, reduced) = shift_to_unit_interval(arg)?;
        let mut out = Rat::one();
        for _ in 0..exp.unsigned_abs() {
            if exp > 0 {
                out *= &pref;
            } else {
                out /= &pref;
            }
        }
        if !reduced.is_one() {
            self.insert(reduced, exp);
        }
        Ok(out)
    }

    /// Merge another normalized factor into this one.
    pub fn merge(&mut self, other: &GammaFactor) {
        for (a, e) in other.factors() {
            self.insert(a.clone(), e);
        }
    }

    /// Inverse factor (all exponents negated).
    pub fn inverse(&self) -> GammaFactor {
        GammaFactor {
            factors: self.factors.iter().map(|(a, e)| (a.clone(), -e)).collect(),
        }
    }

    /// Numeric value of the residual product, for the oracle side.
    pub fn to_f64(&self) -> f64 {
        self.factors
            .iter()
            .map(|(a, e)| gamma_f64(crate::rational::to_f64(a)).powi(*e as i32))
            .product()
    }
}

impl fmt::Display for GammaFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (a, e) in &self.factors {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "Gamma({a})")?;
            } else {
                write!(f, "Gamma({a})^{e}")?;
            }
        }
        Ok(())
    }
}

/// Write `Γ(x) = pref · Γ(x')` with `x'` in (0, 1], using Γ(x+1) = x Γ(x).
fn shift_to_unit_interval(mut x: Rat) -> ExactResult<(Rat, Rat)> {
    if is_nonpositive_integer(&x) {
        return Err(ExactError::Pole { argument: x });
    }
    let mut pref = Rat::one();
    // shift down: Γ(x) = (x-1) Γ(x-1)
    while x > Rat::one() {
        x -= Rat::one();
        pref *= &x;
    }
    // shift up: Γ(x) = Γ(x+1)/x
    while !x.is_positive() {
        if x.is_zero() {
            return Err(ExactError::Pole { argument: x });
        }
        pref /= &x;
        x += Rat::one();
    }
    Ok((pref, x))
}

/// Reduce `∏ Γ(num_i) / ∏ Γ(den_j)` to `(r, G)` with every residual argument
/// in (0, 1]. If all Gamma factors cancel, `G` is empty and the product is
/// the exact rational `r`.
pub fn gamma_reduce(numerator: &[Rat], denominator: &[Rat]) -> ExactResult<(Rat, GammaFactor)> {
    let mut gamma = GammaFactor::one();
    let mut r = Rat::one();
    for a in numerator {
        r *= gamma.push(a.clone(), 1)?;
    }
    for a in denominator {
        r *= gamma.push(a.clone(), -1)?;
    }
    Ok((r, gamma))
}

/// Γ(x) for real x via the Lanczos approximation (g = 7, n = 9), used only by
/// the numeric oracle.
pub fn gamma_f64(x: f64) -> f64 {
    const G: f64 = 7.0;
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        // reflection
        std::f64::consts::PI / ((std::f64::consts::PI * x).sin() * gamma_f64(1.0 - x))
    } else {
        let x = x - 1.0;
        let mut a = COEF[0];
        let t = x + G + 0.5;
        for (i, &c) in COEF.iter().enumerate().skip(1) {
            a += c / (x + i as f64);
        }
        (2.0 * std::f64::consts::PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn reduce_shift_down_twice() {
        // Γ(7/3)/Γ(1/3) = (4/3)(1/3) = 4/9
        let (r, g) = gamma_reduce(&[rat(7, 3)], &[rat(1, 3)]).unwrap();
        assert_eq!(r, rat(4, 9));
        assert!(g.is_one());
    }

    #[test]
    fn reduce_negative_argument() {
        // Γ(-1/2)/Γ(1/2) = -2
        let (r, g) = gamma_reduce(&[rat(-1, 2)], &[rat(1, 2)]).unwrap();
        assert_eq!(r, int(-2));
        assert!(g.is_one());
    }

    #[test]
    fn reduce_identity() {
        let (r, g) = gamma_reduce(&[rat(1, 4)], &[rat(1, 4)]).unwrap();
        assert_eq!(r, Rat::one());
        assert!(g.is_one());
    }

    #[test]
    fn integer_arguments_vanish() {
        // Γ(4) = 6, Γ(1) = 1
        let (r, g) = gamma_reduce(&[int(4)], &[]).unwrap();
        assert_eq!(r, int(6));
        assert!(g.is_one());
        let (r, g) = gamma_reduce(&[int(1)], &[]).unwrap();
        assert_eq!(r, Rat::one());
        assert!(g.is_one());
    }

    #[test]
    fn pole_detected() {
        assert!(matches!(
            gamma_reduce(&[int(0)], &[]),
            Err(ExactError::Pole { .. })
        ));
        assert!(matches!(
            gamma_reduce(&[int(-3)], &[]),
            Err(ExactError::Pole { .. })
        ));
    }

    #[test]
    fn residual_factor_survives() {
        let (r, g) = gamma_reduce(&[rat(1, 3)], &[]).unwrap();
        assert_eq!(r, Rat::one());
        let f: Vec<_> = g.factors().collect();
        assert_eq!(f, vec![(&rat(1, 3), 1)]);
    }

    #[test]
    fn falling_product_property() {
        // gamma_reduce([x],[x-k]) = x-1 down to x-k, for x = 17/5, k = 1..5
        let x = rat(17, 5);
        for k in 1..=5i64 {
            let (r, g) = gamma_reduce(&[x.clone()], &[&x - int(k)]).unwrap();
            let mut expect = Rat::one();
            for j in 1..=k {
                expect *= &x - int(j);
            }
            assert_eq!(r, expect, "k={k}");
            assert!(g.is_one());
        }
    }

    #[test]
    fn lanczos_spot_values() {
        assert!((gamma_f64(0.5) - std::f64::consts::PI.sqrt()).abs() < 1e-12);
        assert!((gamma_f64(5.0) - 24.0).abs() < 1e-10);
        assert!((gamma_f64(1.0 / 3.0) - 2.678_938_534_707_747_6).abs() < 1e-12);
        assert!((gamma_f64(-0.5) + 2.0 * std::f64::consts::PI.sqrt()).abs() < 1e-11);
    }
}
