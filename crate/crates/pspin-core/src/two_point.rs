//! Two-point intersection numbers.
//!
//! Two engines: the exact p = 2 closed form (a bivariate expansion of the
//! sinh-kernel formula), and the half-integer double-residue engine for
//! p ∈ {1/2, 3/2, -1/2}, which expands the determinant kernel as a geometric
//! series and extracts iterated residues at y₁ = y₂ = 0. The residue order
//! matters; both orders and their sum are available.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coefficient::Coefficient;
use crate::error::{ExactError, ExactResult};
use crate::rational::{
    binomial, factorial, int, pow_i, rat, Rat,
};
use crate::spin::{IntersectionRecord, RecordValue};

/// Order of the iterated contour extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidueOrder {
    /// y₂ integrated first (|y₂| < |y₁|).
    Y2ThenY1,
    /// y₁ integrated first (|y₁| < |y₂|).
    Y1ThenY2,
    /// Sum of both orders (the calibrated default; no 1/2 factor).
    SumBoth,
}

/// Bivariate σ series of a two-point function.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoPointSeries {
    /// (σ₁ exponent, σ₂ exponent) → coefficient (coupling power = c' power).
    pub terms: BTreeMap<(Rat, Rat), Coefficient>,
    /// Total-degree truncation.
    pub truncation: Rat,
    /// Per-order values at each slot: (e1, e2, y₂-first, y₁-first).
    pub per_order: Vec<(Rat, Rat, Rat, Rat)>,
    /// Observations recorded during extraction.
    pub notes: Vec<String>,
}

impl TwoPointSeries {
    pub fn coefficient(&self, e1: i64, e2: i64) -> Option<&Coefficient> {
        self.terms.get(&(int(e1), int(e2)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|((a, b), c)| {
            self.terms
                .get(&(b.clone(), a.clone()))
                .is_some_and(|c2| c2 == c)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

// ---------------------------------------------------------------------------
// p = 2 closed form
// ---------------------------------------------------------------------------

/// ⟨τ_{n1,0}τ_{n2,0}⟩_g for p = 2 from the sinh-kernel closed form, all slots
/// with n1 + n2 = 3g - 1 up to the requested total order.
///
/// The slot value is
/// `Σ_{a+m=g} 1/(24^a a!) · (-1)^m/(m!(2m+1) 8^m) · C(3a+m-1, n1-m)`.
pub fn two_point_p2(order_max: i64) -> ExactResult<Vec<IntersectionRecord>> {
    let mut records = Vec::new();
    let mut g = 1i64;
    loop {
        let total = 3 * g - 1;
        if total > order_max {
            break;
        }
        for n1 in 0..=total {
            let n2 = total - n1;
            let v = p2_slot_value(g, n1);
            if v.is_zero() {
                continue;
            }
            records.push(IntersectionRecord {
                p: "2".into(),
                genus: g.to_string(),
                punctures: vec![(n1.to_string(), "0".into()), (n2.to_string(), "0".into())],
                value: RecordValue::Rational(crate::rational::format_rat(&v)),
                coupling_power: crate::rational::format_rat(&((int(2 * g) - int(1)) / int(2))),
                convention: "sinh-kernel closed form, N' = 1".into(),
            });
        }
        g += 1;
    }
    Ok(records)
}

/// One slot of the p = 2 expansion.
pub fn p2_slot_value(g: i64, n1: i64) -> Rat {
    let mut v = Rat::zero();
    for m in 0..=g {
        let a = g - m;
        let k = n1 - m; // index into the (σ₁+σ₂)^{3a+m-1} binomial
        let top = 3 * a + m - 1;
        if k < 0 || k > top {
            continue;
        }
        let e_part = Rat::one() / (pow_i(&int(24), a) * factorial(a as u64));
        let m_sign = if m % 2 == 0 { Rat::one() } else { -Rat::one() };
        let m_part = m_sign / (factorial(m as u64) * int(2 * m + 1) * pow_i(&int(8), m));
        v += e_part * m_part * binomial(top as u64, k as u64);
    }
    v
}

/// The genus-0 kernel √(σ₁σ₂)/(σ₁+σ₂) evaluated numerically (for the oracle
/// comparison; it produces no records).
pub fn p2_genus_zero_kernel(s1: f64, s2: f64) -> f64 {
    (s1 * s2).sqrt() / (s1 + s2)
}

/// Full numeric evaluation of the p = 2 closed form (genus-0 kernel
/// included), for oracle cross-checks.
pub fn p2_closed_form_numeric(s1: f64, s2: f64, m_max: usize) -> f64 {
    let t = s1 + s2;
    let mut sum = 0.0;
    let mut term;
    for m in 0..=m_max {
        let mut mf = 1.0;
        for i in 1..=m {
            mf *= i as f64;
        }
        term = (-1.0f64).powi(m as i32) / (mf * (2 * m + 1) as f64)
            * (s1 * s2 * t / 8.0).powi(m as i32);
        sum += term;
    }
    (t * t * t / 24.0).exp() * sum * (s1 * s2).sqrt() / t
}

// ---------------------------------------------------------------------------
// half-integer double-residue engine
// ---------------------------------------------------------------------------

/// Monomial key: (y1, y2, s1, s2, c') exponents.
type Key = (i32, i32, i32, i32, i32);
type Table = BTreeMap<Key, Rat>;

fn table_mul(a: &Table, b: &Table, sigma_cap: i32) -> Table {
    let mut out = Table::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            let s1 = ka.2 + kb.2;
            let s2 = ka.3 + kb.3;
            if s1 + s2 > sigma_cap {
                continue;
            }
            let key = (ka.0 + kb.0, ka.1 + kb.1, s1, s2, ka.4 + kb.4);
            let v = va * vb;
            let entry = out.entry(key).or_insert_with(Rat::zero);
            *entry += v;
            if entry.is_zero() {
                out.remove(&key);
            }
        }
    }
    out
}

/// exp factor for one variable: exp(c' Σ_e w_e σ^{p+1-e/2} y^e) with the
/// bracket of the one-point y-plane exponent, rescaled y → σ^{-1/2} y.
fn exp_factor(p: &Rat, var: usize, sigma_cap: i32, cp_max: i32) -> Table {
    let two_p_plus_2 = crate::rational::to_i64(&(&(p * int(2)) + int(2))).unwrap();
    // bracket terms (y-exponent, weight); σ-power per term = p+1-e/2, an integer
    let bracket: Vec<(i64, Rat)> = {
        let n = two_p_plus_2;
        let mut out = Vec::new();
        let mut k = 1i64;
        while k <= n {
            let sign = if ((k - 1) / 2) % 2 == 0 { 1 } else { -1 };
            out.push((n - 2 * k, binomial(n as u64, k as u64) * int(sign)));
            k += 2;
        }
        out
    };
    let sigma_power = |e: i64| -> i32 {
        let s = p + int(1) - rat(e, 2);
        crate::rational::to_i64(&s).expect("integer sigma power after rescale") as i32
    };
    // multinomial expansion of exp(c' Σ terms), graded by σ
    let mut out: Table = BTreeMap::new();
    out.insert((0, 0, 0, 0, 0), Rat::one());
    let mut power: Table = out.clone();
    let base: Table = bracket
        .iter()
        .map(|(e, w)| {
            let mut key = (0i32, 0i32, 0i32, 0i32, 1i32);
            match var {
                0 => {
                    key.0 = *e as i32;
                    key.2 = sigma_power(*e);
                }
                _ => {
                    key.1 = *e as i32;
                    key.3 = sigma_power(*e);
                }
            }
            (key, w.clone())
        })
        .collect();
    for k in 1..=cp_max {
        power = table_mul(&power, &base, sigma_cap);
        if power.is_empty() {
            break;
        }
        let inv = Rat::one() / factorial(k as u64);
        for (key, v) in &power {
            let entry = out.entry(*key).or_insert_with(Rat::zero);
            *entry += v * &inv;
            if entry.is_zero() {
                out.remove(key);
            }
        }
    }
    out
}

fn p_factor(var: usize, _sigma_cap: i32) -> Table {
    // (y + σ² / y³)
    let mut out = Table::new();
    match var {
        0 => {
            out.insert((1, 0, 0, 0, 0), Rat::one());
            out.insert((-3, 0, 2, 0, 0), Rat::one());
        }
        _ => {
            out.insert((0, 1, 0, 0, 0), Rat::one());
            out.insert((0, -3, 0, 2, 0), Rat::one());
        }
    }
    out
}

/// Σ_m (2GD - G² - S)^m / D^{2m+2} with D = y₁²-y₂², G = σ₁²/y₁²-σ₂²/y₂²,
/// S = 4(σ₁+σ₂)², expanded in the region where `first` is the smaller
/// variable.
fn kernel(first: usize, sigma_cap: i32, j_max: i32) -> Table {
    let mut g_tab = Table::new();
    g_tab.insert((-2, 0, 2, 0, 0), Rat::one());
    g_tab.insert((0, -2, 0, 2, 0), -Rat::one());
    let mut s_tab = Table::new();
    s_tab.insert((0, 0, 2, 0, 0), int(4));
    s_tab.insert((0, 0, 1, 1, 0), int(8));
    s_tab.insert((0, 0, 0, 2, 0), int(4));
    let mut d_tab = Table::new();
    d_tab.insert((2, 0, 0, 0, 0), Rat::one());
    d_tab.insert((0, 2, 0, 0, 0), -Rat::one());

    // base = 2GD - G² - S
    let mut base = Table::new();
    for (k, v) in table_mul(&g_tab, &d_tab, sigma_cap) {
        *base.entry(k).or_insert_with(Rat::zero) += v * int(2);
    }
    for (k, v) in table_mul(&g_tab, &g_tab, sigma_cap) {
        *base.entry(k).or_insert_with(Rat::zero) -= v;
    }
    for (k, v) in &s_tab {
        *base.entry(*k).or_insert_with(Rat::zero) -= v;
    }
    base.retain(|_, v| !v.is_zero());

    // D^{-k} in the chosen region
    let d_inv = |kpow: i32| -> Table {
        let mut out = Table::new();
        for j in 0..=j_max {
            let co = binomial((kpow + j - 1) as u64, j as u64);
            let co = if first == 0 {
                // |y₁| < |y₂|: (y₁²-y₂²)^{-k} = (-1)^k y₂^{-2k} Σ (y₁/y₂)^{2j}
                if kpow % 2 == 1 {
                    -co
                } else {
                    co
                }
            } else {
                co
            };
            let key = if first == 1 {
                (-2 * kpow - 2 * j, 2 * j, 0, 0, 0)
            } else {
                (2 * j, -2 * kpow - 2 * j, 0, 0, 0)
            };
            out.insert(key, co);
        }
        out
    };

    let mut total = Table::new();
    let mut numerator: Table = BTreeMap::new();
    numerator.insert((0, 0, 0, 0, 0), Rat::one());
    let mut m = 0i32;
    while 2 * m <= sigma_cap {
        for (k, v) in table_mul(&numerator, &d_inv(2 * m + 2), sigma_cap) {
            let entry = total.entry(k).or_insert_with(Rat::zero);
            *entry += v;
            if entry.is_zero() {
                total.remove(&k);
            }
        }
        numerator = table_mul(&numerator, &base, sigma_cap);
        if numerator.is_empty() {
            break;
        }
        m += 1;
    }
    total
}

/// One residue order of the half-integer two-point engine: coefficients of
/// y₁^{-1} y₂^{-1} by total σ degree ≤ order_max. `first` = 1 extracts with
/// |y₂| < |y₁| (the y₂-contour inside), `first` = 0 the opposite.
fn double_residue(p: &Rat, order_max: i32, first: usize) -> ExactResult<BTreeMap<(i64, i64, i64), Rat>> {
    let cp_max = order_max; // each c' power carries ≥ 1 total σ power
    let mut a = table_mul(&p_factor(0, order_max), &p_factor(1, order_max), order_max);
    a = table_mul(&a, &exp_factor(p, 0, order_max, cp_max), order_max);
    a = table_mul(&a, &exp_factor(p, 1, order_max, cp_max), order_max);
    // bound the kernel's small-variable expansion: the small variable must
    // climb from its most negative exponent in `a` back to -1
    let small_exp = |k: &Key| if first == 1 { k.1 } else { k.0 };
    let min_small = a.keys().map(&small_exp).min().unwrap_or(0);
    let j_max = ((-min_small).max(0) + 2) / 2 + 1;
    let kern = kernel(if first == 1 { 1 } else { 0 }, order_max, j_max);
    a = table_mul(&a, &kern, order_max);
    let mut out = BTreeMap::new();
    for ((y1, y2, s1, s2, cp), v) in a {
        if y1 == -1 && y2 == -1 && !v.is_zero() {
            let entry = out
                .entry((s1 as i64, s2 as i64, cp as i64))
                .or_insert_with(Rat::zero);
            *entry += v;
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// The half-integer two-point residue engine for p ∈ {1/2, 3/2, -1/2}.
///
/// Builds the double-contour integrand (exp factors from the rescaled
/// y-plane brackets, determinant kernel as a geometric series), extracts
/// iterated residues in the requested order. The overall factor 4 of the
/// published form is included. SumBoth adds both orders (no 1/2 factor) and
/// reports per-order values in the metadata.
pub fn two_point_residue(
    p: &Rat,
    order_max: i64,
    order: ResidueOrder,
) -> ExactResult<TwoPointSeries> {
    if *p != rat(1, 2) && *p != rat(3, 2) && *p != rat(-1, 2) {
        return Err(ExactError::UnsupportedSpin {
            p: p.clone(),
            operation: "two_point_residue",
        });
    }
    let cap = order_max as i32;
    let r_y2_first = double_residue(p, cap, 1)?;
    let r_y1_first = double_residue(p, cap, 0)?;

    let mut terms: BTreeMap<(Rat, Rat), Coefficient> = BTreeMap::new();
    let mut per_order = Vec::new();
    let keys: std::collections::BTreeSet<_> =
        r_y2_first.keys().chain(r_y1_first.keys()).cloned().collect();
    for key in keys {
        let (s1, s2, cp) = key;
        let a = r_y2_first.get(&key).cloned().unwrap_or_else(Rat::zero);
        let b = r_y1_first.get(&key).cloned().unwrap_or_else(Rat::zero);
        let picked = match order {
            ResidueOrder::Y2ThenY1 => a.clone(),
            ResidueOrder::Y1ThenY2 => b.clone(),
            ResidueOrder::SumBoth => &a + &b,
        };
        per_order.push((int(s1), int(s2), int(4) * &a, int(4) * &b));
        if picked.is_zero() {
            continue;
        }
        let coef = Coefficient::with_coupling(int(4) * picked, int(cp));
        terms.insert((int(s1), int(s2)), coef);
    }

    let mut notes = Vec::new();
    // determinant-pole content: the difference of the two orders measures the
    // residues at y = ±y' between the contours
    for (s1, s2, a, b) in &per_order {
        if a != b {
            notes.push(format!(
                "orders differ at sigma1^{} sigma2^{}: y2-first {}, y1-first {}",
                s1, s2, a, b
            ));
        }
    }
    Ok(TwoPointSeries {
        terms,
        truncation: int(order_max),
        per_order,
        notes,
    })
}
