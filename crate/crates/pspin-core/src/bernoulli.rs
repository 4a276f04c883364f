//! Bernoulli numbers and orbifold Euler characteristics.
//!
//! Convention: `t/(1 - e^{-t}) = Σ B_n t^n / n!`, which fixes B₁ = +1/2.


use crate::rational::{binomial, int, Rat};

/// Exact Bernoulli number B_n in the B₁ = +1/2 convention.
///
/// Computed from the recurrence Σ_{k=0}^{n} C(n+1, k) B_k = n + 1, which is
/// the coefficient identity of the defining generating function.
pub fn bernoulli(n: u64) -> Rat {
    bernoulli_table(n)[n as usize].clone()
}

/// First n+1 Bernoulli numbers B_0 ... B_n.
pub fn bernoulli_table(n: u64) -> Vec<Rat> {
    let mut b: Vec<Rat> = Vec::with_capacity(n as usize + 1);
    for m in 0..=n {
        // C(m+1, m) B_m = m + 1 - Σ_{k<m} C(m+1, k) B_k
        let mut acc = int(m as i64 + 1);
        for (k, bk) in b.iter().enumerate() {
            acc -= binomial(m + 1, k as u64) * bk;
        }
        b.push(acc / int(m as i64 + 1));
    }
    b
}

/// Euler characteristic of the moduli space of one-marked genus-g curves:
/// χ = ζ(1 - 2g) = -B_{2g}/(2g).
pub fn euler_characteristic(g: u64) -> Rat {
    assert!(g >= 1, "euler_characteristic requires g >= 1");
    -bernoulli(2 * g) / int(2 * g as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use num_traits::{One, Zero};

    #[test]
    fn low_bernoulli_values() {
        assert_eq!(bernoulli(0), Rat::one());
        assert_eq!(bernoulli(1), rat(1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn odd_bernoulli_vanish() {
        for k in 1..=10u64 {
            assert!(bernoulli(2 * k + 1).is_zero(), "B_{} != 0", 2 * k + 1);
        }
    }

    #[test]
    fn euler_characteristics() {
        // zeta(-1), zeta(-3), zeta(-5)
        assert_eq!(euler_characteristic(1), rat(-1, 12));
        assert_eq!(euler_characteristic(2), rat(1, 120));
        assert_eq!(euler_characteristic(3), rat(-1, 252));
    }

    #[test]
    fn matches_large_n_series_coefficients() {
        // 1 - 1/(2N) + 1/(12 N^2) - 1/(120 N^4) + ...: the 1/N^{2g}
        // coefficient is B_{2g}/(2g) = -chi(g).
        assert_eq!(-euler_characteristic(1), rat(1, 12));
        assert_eq!(-euler_characteristic(2), rat(-1, 120));
    }
}
