//! Arbitrary-precision rational scalars and small combinatorial helpers.
//!
//! `Rat` is the coefficient field of every series in this crate. All
//! arithmetic is exact; nothing here ever rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar, always stored in lowest terms with positive denominator.
pub type Rat = BigRational;

/// `n/d` as a `Rat`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a `Rat`.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// True when `x` is an integer.
pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// True when `x` is an integer ≤ 0 (a Gamma pole).
pub fn is_nonpositive_integer(x: &Rat) -> bool {
    is_integer(x) && !x.is_positive()
}

/// `x` as `i64`, when it is an integer that fits.
pub fn to_i64(x: &Rat) -> Option<i64> {
    if is_integer(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Exact factorial.
pub fn factorial(n: u64) -> Rat {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rat::from_integer(acc)
}

/// Exact double factorial `n!!` (with `0!! = (-1)!! = 1`).
pub fn double_factorial(n: i64) -> Rat {
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= BigInt::from(k);
        k -= 2;
    }
    Rat::from_integer(acc)
}

/// Binomial coefficient with a rational upper argument: `x (x-1) ... (x-k+1) / k!`.
///
/// This is the generalized binomial used when expanding `(u ± σ/2)^(p+1)` for
/// non-integer p.
pub fn binomial_rat(x: &Rat, k: u64) -> Rat {
    let mut num = Rat::one();
    for j in 0..k {
        num *= x - int(j as i64);
    }
    num / factorial(k)
}

/// Integer binomial coefficient.
pub fn binomial(n: u64, k: u64) -> Rat {
    if k > n {
        return Rat::zero();
    }
    binomial_rat(&int(n as i64), k)
}

/// `x^k` for signed integer `k`.
pub fn pow_i(x: &Rat, k: i64) -> Rat {
    if k >= 0 {
        x.pow(k as i32)
    } else {
        Rat::one() / x.pow((-k) as i32)
    }
}

/// Parse an exact fraction string such as `"3"`, `"-1/2"`, `"7/3"`.
///
/// Decimal input is rejected: half-integer spins must be written as fractions.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.contains('.') {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Render `x` as `"num"` or `"num/den"`.
pub fn format_rat(x: &Rat) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Approximate `x` as f64 (for the numeric oracle's consumption only).
pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().expect("rational out of f64 range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3", "-1/2", "7/3", "0", "-5"] {
            let x = parse_rat(s).unwrap();
            assert_eq!(format_rat(&x), s);
        }
        assert!(parse_rat("0.5").is_none());
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("abc").is_none());
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(parse_rat("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("3/-6").unwrap(), rat(-1, 2));
    }

    #[test]
    fn binomial_rat_matches_integer_case() {
        assert_eq!(binomial_rat(&int(5), 2), int(10));
        assert_eq!(binomial_rat(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(binomial(4, 5), Rat::zero());
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(-1), int(1));
        assert_eq!(double_factorial(0), int(1));
        assert_eq!(double_factorial(5), int(15));
        assert_eq!(double_factorial(6), int(48));
    }

    #[test]
    fn pow_i_negative() {
        assert_eq!(pow_i(&int(2), -3), rat(1, 8));
    }
}
