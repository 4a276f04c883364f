//! Spin models, puncture labels, selection rules, intersection records.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{ExactError, ExactResult};
use crate::rational::{int, is_integer, rat, to_i64, Rat};

/// Which coupling convention a series or record is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CouplingConvention {
    /// c = (p+1)·C, the convention of the genus expansion c^{(2g-1)/p}.
    C,
    /// The per-case rescaled coupling (c', or the published route unit).
    CPrime,
    /// The published per-route unit in which the printed coefficients are rational.
    Paper,
}

/// Ramond (l = -1) or Neveu-Schwarz (l != -1) puncture type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PunctureType {
    Ramond,
    NeveuSchwarz,
}

/// One marked point: descendant index n and spin component l.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PunctureLabel {
    pub n: Rat,
    pub l: Rat,
}

impl PunctureLabel {
    pub fn new(n: Rat, l: Rat) -> Self {
        PunctureLabel { n, l }
    }

    pub fn puncture_type(&self) -> PunctureType {
        if self.l == int(-1) {
            PunctureType::Ramond
        } else {
            PunctureType::NeveuSchwarz
        }
    }
}

/// Spin p with its sector structure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpinModel {
    pub p: Rat,
    pub admissible_l: Vec<Rat>,
    pub sector_count: u32,
}

impl SpinModel {
    pub fn new(p: Rat) -> ExactResult<Self> {
        let admissible_l = admissible_components(&p)?;
        let sector_count = if is_integer(&p) {
            to_i64(&p).unwrap().unsigned_abs() as u32
        } else {
            let twice = &p * int(2);
            to_i64(&twice).unwrap().unsigned_abs() as u32
        };
        Ok(SpinModel {
            p,
            admissible_l,
            sector_count,
        })
    }
}

/// Admissible spin components for a given p.
///
/// Positive integer p: l = -1, 0, ..., p-2. Negative integer p: l = 0, -1,
/// ..., p+1. Half-integers double the sector count: l runs over half-integer
/// steps from -1 up to |p| - 3/2 (p positive) or |p| - 3/2 (p negative).
pub fn admissible_components(p: &Rat) -> ExactResult<Vec<Rat>> {
    if p.is_zero() {
        return Err(ExactError::ZeroSpin);
    }
    let mut out = Vec::new();
    if is_integer(p) {
        let pi = to_i64(p).unwrap();
        if pi > 0 {
            let mut l = -1;
            while l <= pi - 2 {
                out.push(int(l));
                l += 1;
            }
        } else {
            let mut l = 0;
            while l >= pi + 1 {
                out.push(int(l));
                l -= 1;
            }
        }
    } else {
        // half-integer p, 2|p| sectors in half-integer steps from -1
        let bound = p.abs() - rat(3, 2);
        let mut l = int(-1);
        while l <= bound {
            out.push(l.clone());
            l += rat(1, 2);
        }
    }
    Ok(out)
}

/// The Riemann-Roch dimensional constraint for s punctures:
/// `3g - 3 + s = Σ n_i + (g-1)(1 - 2/p) + (1/p) Σ l_i`.
pub fn riemann_roch_holds(p: &Rat, g: &Rat, labels: &[PunctureLabel]) -> bool {
    if p.is_zero() {
        return false;
    }
    let s = int(labels.len() as i64);
    let lhs = int(3) * g - int(3) + &s;
    let sum_n: Rat = labels.iter().map(|t| t.n.clone()).sum();
    let sum_l: Rat = labels.iter().map(|t| t.l.clone()).sum();
    let rhs = sum_n + (g - int(1)) * (int(1) - int(2) / p) + sum_l / p;
    lhs == rhs
}

/// Unique (n, l) with n a nonnegative integer and l admissible solving the
/// one-point rule `(2g-1)(1+1/p) = n + (l+1)/p`, if any.
pub fn solve_selection_one_point(p: &Rat, g: i64) -> ExactResult<Option<(Rat, Rat)>> {
    let target = (int(2 * g) - int(1)) * (int(1) + int(1) / p);
    for l in admissible_components(p)? {
        if l == int(-1) && p.is_positive() && is_integer(p) {
            // Ramond slot absent for positive integer p
            continue;
        }
        let n = &target - (&l + int(1)) / p;
        if is_integer(&n) && !n.is_negative() {
            return Ok(Some((n, l)));
        }
    }
    Ok(None)
}

/// All nonnegative integer pairs (n1, n2) solving the two-point rule at the
/// given spin components and genus.
pub fn two_point_selection(p: &Rat, l1: &Rat, l2: &Rat, g: i64) -> ExactResult<Vec<(Rat, Rat)>> {
    if p.is_zero() {
        return Err(ExactError::ZeroSpin);
    }
    // 3g - 3 + 2 = n1 + n2 + (g-1)(1-2/p) + (l1+l2)/p
    let total = int(3 * g) - int(1)
        - (int(g) - int(1)) * (int(1) - int(2) / p)
        - (l1 + l2) / p;
    let mut out = Vec::new();
    if !is_integer(&total) || total.is_negative() {
        return Ok(out);
    }
    let t = to_i64(&total).unwrap();
    for n1 in 0..=t {
        out.push((int(n1), int(t - n1)));
    }
    Ok(out)
}

/// Value of one intersection number: exact rational, or a polynomial in the
/// boundary parameter m for the open model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordValue {
    Rational(String),
    /// (degree, coefficient) pairs of the m-polynomial.
    MPolynomial(Vec<(u32, String)>),
}

/// One intersection number with its provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntersectionRecord {
    /// Spin, as an exact fraction string.
    pub p: String,
    pub genus: String,
    pub punctures: Vec<(String, String)>,
    pub value: RecordValue,
    /// Exponent of the formal coupling, (2g-1)/p for one-point NS records.
    pub coupling_power: String,
    /// Convention and calibration notes for this record.
    pub convention: String,
}

impl IntersectionRecord {
    pub fn one_point(
        p: &Rat,
        g: &Rat,
        n: &Rat,
        l: &Rat,
        value: &Rat,
        coupling_power: &Rat,
        convention: &str,
    ) -> Self {
        use crate::rational::format_rat as fr;
        IntersectionRecord {
            p: fr(p),
            genus: fr(g),
            punctures: vec![(fr(n), fr(l))],
            value: RecordValue::Rational(fr(value)),
            coupling_power: fr(coupling_power),
            convention: convention.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_positive_integer() {
        assert_eq!(admissible_components(&int(3)).unwrap(), vec![int(-1), int(0), int(1)]);
        assert_eq!(admissible_components(&int(2)).unwrap(), vec![int(-1), int(0)]);
    }

    #[test]
    fn admissible_negative_integer() {
        assert_eq!(admissible_components(&int(-3)).unwrap(), vec![int(0), int(-1), int(-2)]);
        assert_eq!(admissible_components(&int(-2)).unwrap(), vec![int(0), int(-1)]);
    }

    #[test]
    fn admissible_half_integers() {
        assert_eq!(admissible_components(&rat(1, 2)).unwrap(), vec![int(-1)]);
        assert_eq!(
            admissible_components(&rat(3, 2)).unwrap(),
            vec![int(-1), rat(-1, 2), int(0)]
        );
        assert_eq!(
            admissible_components(&rat(-3, 2)).unwrap(),
            vec![int(-1), rat(-1, 2), int(0)]
        );
    }

    #[test]
    fn zero_spin_rejected() {
        assert!(matches!(
            admissible_components(&Rat::zero()),
            Err(ExactError::ZeroSpin)
        ));
    }

    #[test]
    fn sector_counts() {
        assert_eq!(SpinModel::new(int(3)).unwrap().sector_count, 3);
        assert_eq!(SpinModel::new(int(-3)).unwrap().sector_count, 3);
        assert_eq!(SpinModel::new(rat(3, 2)).unwrap().sector_count, 3);
        assert_eq!(SpinModel::new(rat(1, 2)).unwrap().sector_count, 1);
    }

    #[test]
    fn one_point_selection_examples() {
        assert_eq!(
            solve_selection_one_point(&int(3), 1).unwrap(),
            Some((int(1), int(0)))
        );
        assert_eq!(
            solve_selection_one_point(&rat(1, 2), 1).unwrap(),
            Some((int(3), int(-1)))
        );
        // p = 3, g = 2: no admissible slot (l = -1 is excluded, l = 2 out of range)
        assert_eq!(solve_selection_one_point(&int(3), 2).unwrap(), None);
        // p = 2 tower
        for g in 1..=5 {
            assert_eq!(
                solve_selection_one_point(&int(2), g).unwrap(),
                Some((int(3 * g - 2), int(0)))
            );
        }
    }

    #[test]
    fn riemann_roch_one_point_consistency() {
        // (n, l) from the solver satisfies the s = 1 RR identity
        for (p, g) in [(int(3), 1i64), (int(4), 2), (int(2), 3), (rat(1, 2), 2)] {
            if let Some((n, l)) = solve_selection_one_point(&p, g).unwrap() {
                assert!(riemann_roch_holds(
                    &p,
                    &int(g),
                    &[PunctureLabel::new(n, l)]
                ));
            }
        }
    }

    #[test]
    fn two_point_selection_examples() {
        // p = 1/2, l = (-1, -1), g = 1: n1 + n2 = 6
        let v = two_point_selection(&rat(1, 2), &int(-1), &int(-1), 1).unwrap();
        assert_eq!(v.len(), 7);
        assert!(v.iter().all(|(a, b)| a + b == int(6)));
        // p = 3/2, l = (-1, -1), g = 3: n1 + n2 = 10
        let v = two_point_selection(&rat(3, 2), &int(-1), &int(-1), 3).unwrap();
        assert!(v.iter().all(|(a, b)| a + b == int(10)));
        // p = 2, l = (0, 0), g = 1: n1 + n2 = 2
        let v = two_point_selection(&int(2), &int(0), &int(0), 1).unwrap();
        assert!(v.iter().all(|(a, b)| a + b == int(2)));
    }
}
