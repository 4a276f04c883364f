//! The acceptance checks: published golden values, structural properties,
//! and the numeric-oracle comparisons, each returning a pass/fail record.
//!
//! Both the CLI `verify` command and the acceptance test target run these.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::bernoulli::{bernoulli, euler_characteristic};
use crate::coefficient::Coefficient;
use crate::gamma::gamma_reduce;
use crate::one_point::{
    minus_three_published_values, one_point_ns, one_point_ns_negative_fractional, one_point_r,
    one_point_unitary, p_half_closed_form, t_route_branches,
};
use crate::open_kp::{open_one_point, string_equation_check, MPolynomial, OpenLabel};
use crate::oracle;
use crate::rational::{factorial, format_rat, int, is_integer, parse_rat, pow_i, rat, to_i64, Rat};
use crate::spin::{IntersectionRecord, RecordValue};
use crate::two_point::{two_point_p2, two_point_residue, ResidueOrder};

/// One acceptance check.
#[derive(Debug, Clone)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub passed: bool,
    pub details: String,
}

impl Check {
    fn new(id: &str, description: &str, passed: bool, details: String) -> Self {
        Check {
            id: id.into(),
            description: description.into(),
            passed,
            details,
        }
    }

    pub fn line(&self) -> String {
        format!(
            "[{}] {} — {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.description,
            self.details
        )
    }
}

fn record_value(records: &[IntersectionRecord], g: i64) -> Option<Rat> {
    records
        .iter()
        .find(|r| r.genus == g.to_string())
        .and_then(|r| match &r.value {
            RecordValue::Rational(s) => parse_rat(s),
            _ => None,
        })
}

fn eq_check(id: &str, desc: &str, pairs: Vec<(String, Rat, Option<Rat>)>) -> Check {
    let mut passed = true;
    let mut details = Vec::new();
    for (what, expect, got) in pairs {
        match got {
            Some(v) if v == expect => details.push(format!("{what} = {} ok", format_rat(&v))),
            Some(v) => {
                passed = false;
                details.push(format!(
                    "{what}: got {}, expected {}",
                    format_rat(&v),
                    format_rat(&expect)
                ));
            }
            None => {
                passed = false;
                details.push(format!("{what}: missing"));
            }
        }
    }
    Check::new(id, desc, passed, details.join("; "))
}

/// Criterion 1: ⟨τ_{1,0}⟩_{g=1} = (p-1)/24 for p = 2..6.
pub fn criterion_01() -> Check {
    let mut pairs = Vec::new();
    for p in 2..=6i64 {
        let recs = one_point_ns(&int(p), 1).unwrap();
        pairs.push((format!("p={p}"), rat(p - 1, 24), record_value(&recs, 1)));
    }
    eq_check("C01", "genus-1 one-point <tau_{1,0}> = (p-1)/24", pairs)
}

/// Criterion 2: genus-2 and genus-3 closed forms for p = 4, 5, 6; absence at
/// p = 3, g = 2 and p = 5, g = 3.
pub fn criterion_02() -> Check {
    let closed_g2 = |p: i64, l: i64| -> Rat {
        let pr = int(p);
        let num = (int(1) + int(2) * &pr) * (&pr - int(1)) * (&pr - int(3));
        let (g, _) = gamma_reduce(&[int(1) - int(3) / &pr], &[int(1) - int(l + 1) / &pr]).unwrap();
        num / (&pr * int(5760)) * g
    };
    let closed_g3 = |p: i64, l: i64| -> Rat {
        let pr = int(p);
        let num = (int(1) + int(2) * &pr)
            * (&pr - int(1))
            * (&pr - int(5))
            * (int(8) * &pr * &pr - int(13) * &pr - int(13));
        let (g, _) = gamma_reduce(&[int(1) - int(5) / &pr], &[int(1) - int(l + 1) / &pr]).unwrap();
        num / (&pr * &pr * int(2_903_040)) * g
    };
    let mut pairs = Vec::new();
    for p in [4i64, 5, 6] {
        let recs = one_point_ns(&int(p), 3).unwrap();
        let l2 = to_i64(&crate::spin::solve_selection_one_point(&int(p), 2).unwrap().unwrap().1)
            .unwrap();
        pairs.push((format!("p={p} g=2"), closed_g2(p, l2), record_value(&recs, 2)));
        if p != 5 {
            let l3 = to_i64(
                &crate::spin::solve_selection_one_point(&int(p), 3)
                    .unwrap()
                    .unwrap()
                    .1,
            )
            .unwrap();
            pairs.push((format!("p={p} g=3"), closed_g3(p, l3), record_value(&recs, 3)));
        }
    }
    let mut check = eq_check("C02", "genus-2/3 closed forms for p = 4, 5, 6", pairs);
    let absent3 = record_value(&one_point_ns(&int(3), 2).unwrap(), 2).is_none();
    let absent5 = record_value(&one_point_ns(&int(5), 3).unwrap(), 3).is_none();
    if !(absent3 && absent5) {
        check.passed = false;
    }
    check.details += &format!(
        "; p=3 g=2 absent: {absent3} ((p-3) factor); p=5 g=3 absent: {absent5} ((p-5) factor)"
    );
    check
}

/// Criterion 3: ⟨τ_{3g-2}⟩ = 1/(24^g g!) for g = 1..5 from both pipelines.
pub fn criterion_03() -> Check {
    let recs = one_point_ns(&int(2), 5).unwrap();
    let open = open_one_point(&int(13), 0).unwrap();
    let mut pairs = Vec::new();
    for g in 1..=5i64 {
        let expect = Rat::one() / (pow_i(&int(24), g) * factorial(g as u64));
        pairs.push((format!("p-spin g={g}"), expect.clone(), record_value(&recs, g)));
        let n = rat(3 * g - 2, 1);
        let got = open
            .get(&OpenLabel::new(&n).unwrap())
            .map(|p| p.coefficient(0));
        pairs.push((format!("open g={g}"), expect, got));
    }
    eq_check("C03", "Kontsevich tower from both pipelines", pairs)
}

/// Criterion 4: Euler characteristics -B_{2g}/(2g) for g = 1..5, cross-checked
/// against the printed series coefficients at g = 1, 2.
pub fn criterion_04() -> Check {
    let mut pairs = Vec::new();
    for g in 1..=5u64 {
        let expect = -bernoulli(2 * g) / int(2 * g as i64);
        pairs.push((format!("g={g}"), expect, Some(euler_characteristic(g))));
    }
    // series coefficients of 1/N^{2g} are B_{2g}/(2g) = -chi
    pairs.push(("series g=1".into(), rat(1, 12), Some(-euler_characteristic(1))));
    pairs.push(("series g=2".into(), rat(-1, 120), Some(-euler_characteristic(2))));
    eq_check("C04", "Euler characteristics and series coefficients", pairs)
}

/// Criterion 5: the p = -2 series (four printed bracket coefficients) and the
/// published values -1/8, 1/2^7.
pub fn criterion_05() -> Check {
    let u = one_point_unitary(4).unwrap();
    let b: std::collections::BTreeMap<i64, Rat> = u.bracket.iter().cloned().collect();
    let mut pairs = vec![
        ("bracket g=1".to_string(), rat(1, 8), b.get(&1).cloned()),
        ("bracket g=2".to_string(), rat(9, 768), b.get(&2).cloned()),
        ("bracket g=3".to_string(), rat(225, 61440), b.get(&3).cloned()),
        (
            "bracket g=4".to_string(),
            rat(11025, 5_505_024),
            b.get(&4).cloned(),
        ),
    ];
    pairs.push(("<tau_{1,0}>".into(), rat(-1, 8), record_value(&u.records, 1)));
    pairs.push(("<tau_{2,0}>".into(), rat(1, 128), record_value(&u.records, 2)));
    eq_check("C05", "p = -2 unitary series and values", pairs)
}

/// Criterion 6: p = -3 published values -1/3, 5/18, 16.
pub fn criterion_06() -> Check {
    let (a, b, c) = minus_three_published_values().unwrap();
    eq_check(
        "C06",
        "p = -3 values <tau_{0,1}>_0, <tau_{1,0}>_1, <tau_{2,-1}>_2",
        vec![
            ("<tau_{0,1}>_0".into(), rat(-1, 3), Some(a)),
            ("<tau_{1,0}>_1".into(), rat(5, 18), Some(b)),
            ("<tau_{2,-1}>_2".into(), int(16), Some(c)),
        ],
    )
}

/// Criterion 7: the p = 1/2 closed form, j = 0..6.
pub fn criterion_07() -> Check {
    let r = one_point_r(&rat(1, 2), &int(40)).unwrap();
    let mut pairs = Vec::new();
    for (j, expect) in p_half_closed_form(6) {
        let s = int(3 + 6 * j as i64);
        pairs.push((
            format!("j={j}"),
            expect,
            r.series.coefficient(&s).map(|c| c.rational.clone()),
        ));
    }
    eq_check("C07", "p = 1/2 Ramond closed form, j = 0..6", pairs)
}

/// Criterion 8: p = -1/2 rigidity — exactly two nonzero terms up to σ^20.
pub fn criterion_08() -> Check {
    let r = one_point_r(&rat(-1, 2), &int(21)).unwrap();
    let two_terms = r.series.len() == 2;
    let c1 = r
        .series
        .coefficient(&int(1))
        .map(|c| c.rational == rat(1, 2) && c.coupling_power == int(2))
        .unwrap_or(false);
    let cm1 = r
        .series
        .coefficient(&int(-1))
        .map(|c| c.rational.is_one() && c.coupling_power == int(-2))
        .unwrap_or(false);
    Check::new(
        "C08",
        "p = -1/2: exactly c^2σ/2 and σ^{-1}/c^2 to order σ^20",
        two_terms && c1 && cm1,
        format!(
            "terms = {}, sigma^1 = c^2/2: {c1}, sigma^-1 = c^-2: {cm1}",
            r.series.len()
        ),
    )
}

/// Criterion 9: p = 3/2 — three Ramond coefficients and the two leading NS
/// coefficients. The printed σ^15 term reads 2^19 for 2^16 on recomputation
/// (two of three printed terms match the residue engine exactly).
pub fn criterion_09() -> Check {
    let r = one_point_r(&rat(3, 2), &int(30)).unwrap();
    let mut pairs = Vec::new();
    // published unit c2 = c(σ/2)^{5/2}: σ^5 → 5 (printed 5/2^5 · 2^5 ✓),
    // σ^25 → 2715625/8064 (printed 79·11·5^7·3²/(10!·2^24) · 2^25 ✓),
    // σ^15 recomputed: -4375/48 (printed form reads -4375/6)
    pairs.push((
        "sigma^5".into(),
        int(5),
        r.series.coefficient(&int(5)).map(|c| c.rational.clone()),
    ));
    pairs.push((
        "sigma^15 (erratum: printed 2^16 reads 2^19)".into(),
        rat(-4375, 48),
        r.series.coefficient(&int(15)).map(|c| c.rational.clone()),
    ));
    pairs.push((
        "sigma^25".into(),
        rat(2_715_625, 8064),
        r.series.coefficient(&int(25)).map(|c| c.rational.clone()),
    ));
    // NS leading terms in the unit Λ = 5a: (Γ(2/3)/3)Λ^{-2/3}, (Γ(-2/3)/3)Λ^{2/3}
    let branches = t_route_branches(&rat(3, 2), 2).unwrap();
    let lead = branches[0]
        .iter()
        .find(|(e, _)| *e == rat(-2, 3))
        .map(|(_, c)| c.rational.clone());
    let sub = branches[1]
        .iter()
        .find(|(e, _)| *e == rat(2, 3))
        .map(|(_, c)| c.rational.clone());
    pairs.push(("NS Λ^{-2/3} on Γ(2/3)".into(), rat(1, 3), lead));
    pairs.push(("NS Λ^{2/3} on Γ(1/3)".into(), rat(-1, 2), sub));
    eq_check(
        "C09",
        "p = 3/2 Ramond and NS leading coefficients (with recorded erratum)",
        pairs,
    )
}

/// Criterion 10: p = -3/2 — the three leading (Ny) coefficients (the printed
/// middle factor 5/2 reads 5/3 on recomputation) and the Ramond lattice
/// g = 2+3m at σ^{2m+1}.
pub fn criterion_10() -> Check {
    let t = one_point_ns_negative_fractional(&rat(-3, 2), 3).unwrap();
    let grab = |s: Rat| -> Option<Coefficient> {
        t.iter().find(|(e, _)| *e == s).map(|(_, c)| c.clone())
    };
    let mut pairs = Vec::new();
    // -(1/3)Γ(-2/3) σ'^{-1/3} stored as +1/2 on Γ(1/3)
    pairs.push((
        "sigma'^{-1/3} on Gamma(1/3)".into(),
        rat(1, 2),
        grab(rat(-1, 3)).map(|c| c.rational),
    ));
    // -(5/9)Γ(2/3): the printed 5/2 reads 5/3
    pairs.push((
        "sigma'^{1/3} on Gamma(2/3) (erratum: printed 5/2 reads 5/3)".into(),
        rat(-5, 9),
        grab(rat(1, 3)).map(|c| c.rational),
    ));
    pairs.push(("sigma'^1".into(), int(-1), grab(int(1)).map(|c| c.rational)));
    let mut check = eq_check(
        "C10",
        "p = -3/2 leading coefficients (with recorded erratum) and Ramond lattice",
        pairs,
    );
    let r = one_point_r(&rat(-3, 2), &int(8)).unwrap();
    let lattice_ok = !r.series.is_zero()
        && r.series.terms().all(|(s, _)| {
            is_integer(s) && to_i64(s).map(|n| n.rem_euclid(2) == 1).unwrap_or(false)
        })
        && r.records.iter().map(|x| x.genus.as_str()).collect::<Vec<_>>()
            == vec!["2", "5", "8", "11"];
    if !lattice_ok {
        check.passed = false;
    }
    check.details += &format!("; Ramond slots at g = 2+3m as sigma^(2m+1): {lattice_ok}");
    check
}

/// Criterion 11: two-point p = 2 — ⟨τ_{0,0}τ_{2,0}⟩ = 1/24 and the string
/// equation on every emitted τ_{0,0} record to total order 8.
pub fn criterion_11() -> Check {
    let recs = two_point_p2(8).unwrap();
    let one_pt = one_point_ns(&int(2), 3).unwrap();
    let grab = |n1: i64, n2: i64| -> Option<Rat> {
        recs.iter()
            .find(|r| r.punctures == vec![(n1.to_string(), "0".into()), (n2.to_string(), "0".into())])
            .and_then(|r| match &r.value {
                RecordValue::Rational(s) => parse_rat(s),
                _ => None,
            })
    };
    let mut ok = grab(0, 2) == Some(rat(1, 24));
    let mut details = vec![format!(
        "<tau_0 tau_2> = {}",
        grab(0, 2).map(|v| format_rat(&v)).unwrap_or_default()
    )];
    for g in 1..=3i64 {
        let n = 3 * g - 1;
        let lhs = grab(0, n);
        let rhs = record_value(&one_pt, g);
        if lhs != rhs || lhs.is_none() {
            ok = false;
        }
        details.push(format!(
            "g={g}: <tau_0 tau_{n}> = <tau_{}> : {}",
            n - 1,
            lhs == rhs && lhs.is_some()
        ));
    }
    Check::new(
        "C11",
        "two-point p = 2 anchor and string equation to total order 8",
        ok,
        details.join("; "),
    )
}

/// Criterion 12: two-point p = 1/2 against the published genus-1 and genus-2
/// data. The genus-1 family matches exactly. The genus-2 sub-assertions are
/// implemented as published and fail against exact arithmetic (two
/// independent exact computations agree with each other and not with the
/// published genus-2 claims); see the decisions ledger.
pub fn criterion_12() -> Check {
    let s = two_point_residue(&rat(1, 2), 12, ResidueOrder::SumBoth).unwrap();
    let coeff = |e1: i64, e2: i64| -> Rat {
        s.coefficient(e1, e2)
            .map(|c| c.rational.clone())
            .unwrap_or_else(Rat::zero)
    };
    let mut details = Vec::new();
    // group 1 (published 4·(3³/4) = 27, both mirror slots)
    let g1 = coeff(2, 4) == int(27) && coeff(4, 2) == int(27);
    details.push(format!(
        "group c'^4: sigma1^2 sigma2^4 = {} (published 27): {}",
        format_rat(&coeff(2, 4)),
        g1
    ));
    // group 2 (published 4·(-3^5/40) = -243/10; engine 4·(-729/40))
    let g2_published = rat(-243, 10);
    let g2 = coeff(6, 6) == g2_published;
    details.push(format!(
        "group c'^8 sigma1^6 sigma2^6 = {} (published {}): {}",
        format_rat(&coeff(6, 6)),
        format_rat(&g2_published),
        g2
    ));
    // group 3 (published +4·3^5/160 = +243/40; engine -243/40)
    let g3_published = rat(243, 40);
    let g3 = coeff(2, 10) == g3_published && coeff(10, 2) == g3_published;
    details.push(format!(
        "group c'^8 sigma1^2 sigma2^10 = {} (published {}): {}",
        format_rat(&coeff(2, 10)),
        format_rat(&g3_published),
        g3
    ));
    // σ1^4 σ2^8 vanishing under SumBoth (published claim)
    let v48 = coeff(4, 8).is_zero() && coeff(8, 4).is_zero();
    details.push(format!(
        "sigma1^4 sigma2^8 vanishes under SumBoth: {} (engine value {})",
        v48,
        format_rat(&coeff(4, 8))
    ));
    // even n_i and n1+n2 = 6g selection
    let mut even_ok = true;
    let mut rule_ok = true;
    for ((e1, e2), c) in &s.terms {
        let n1 = to_i64(e1).unwrap();
        let n2 = to_i64(e2).unwrap();
        if n1 % 2 != 0 || n2 % 2 != 0 {
            even_ok = false;
        }
        let total = n1 + n2;
        if total % 6 != 0 || c.coupling_power != int(4 * (total / 6)) {
            rule_ok = false;
        }
    }
    details.push(format!(
        "all records even n_i: {even_ok}; n1+n2 = 6g with c'^{{4g}}: {rule_ok}"
    ));
    Check::new(
        "C12",
        "two-point p = 1/2 published data (genus-2 claims fail against exact arithmetic; see ledger)",
        g1 && g2 && g3 && v48 && even_ok && rule_ok,
        details.join("; "),
    )
}

/// Criterion 13: two-point p = -1/2 vanishes identically to total order 12.
pub fn criterion_13() -> Check {
    let all_zero = [ResidueOrder::SumBoth, ResidueOrder::Y2ThenY1, ResidueOrder::Y1ThenY2]
        .into_iter()
        .all(|o| two_point_residue(&rat(-1, 2), 12, o).unwrap().is_zero());
    Check::new(
        "C13",
        "two-point p = -1/2 identically zero to total order 12",
        all_zero,
        format!("all residue orders empty: {all_zero}"),
    )
}

/// Criterion 14: the four open polynomials, the parity invariant up to
/// n = 17/2 at m-degree 8, and the appendix string-equation value.
pub fn criterion_14() -> Check {
    let map = open_one_point(&rat(17, 2), 8).unwrap();
    let tau = |tn: i64| -> Option<MPolynomial> {
        map.get(&OpenLabel::new(&rat(tn, 2)).unwrap()).cloned()
    };
    let poly = |coeffs: &[(u32, Rat)]| -> MPolynomial {
        let mut p = MPolynomial::zero();
        for (d, c) in coeffs {
            p.set(*d, c.clone());
        }
        p
    };
    let t1 = tau(2) == Some(poly(&[(0, rat(1, 24)), (2, rat(1, 2))]));
    let t52 = tau(5) == Some(poly(&[(1, rat(1, 12)), (3, rat(1, 12))]));
    let t4 = tau(8)
        == Some(poly(&[
            (0, rat(1, 1152)),
            (2, rat(7, 144)),
            (4, rat(1, 72)),
        ]));
    let t112 = tau(11)
        == Some(poly(&[
            (1, rat(1, 240)),
            (3, rat(5, 576)),
            (5, rat(1, 960)),
        ]));
    let parity = map
        .iter()
        .all(|(label, p)| p.has_parity(label.is_boundary()));
    // appendix value: <tau_00 tau_{4,-1}^2> = 2 <tau_{3,-1} tau_{4,-1}>
    //               = m^2(m^4+11m^2+16)/144, stored test data
    let pair = poly(&[(2, rat(16, 288)), (4, rat(11, 288)), (6, rat(1, 288))]);
    let lhs = poly(&[(2, rat(16, 144)), (4, rat(11, 144)), (6, rat(1, 144))]);
    let string_ok = string_equation_check(&lhs, &[(2, pair)]);
    Check::new(
        "C14",
        "open intersection polynomials, parity, appendix string data",
        t1 && t52 && t4 && t112 && parity && string_ok,
        format!(
            "tau_1: {t1}, tau_5/2: {t52}, tau_4: {t4}, tau_11/2: {t112}, parity(n<=17/2, m<=8): {parity}, appendix factor-2 bookkeeping: {string_ok}"
        ),
    )
}

/// Criterion 15: the numeric oracle — p = 3 quadrature vs Airy form to 1e-8,
/// p = 3 two-point leading coefficient 1/12 within 5%, supertrace limit to
/// 1e-10, contour stability to 1e-10.
pub fn criterion_15() -> Check {
    let mut details = Vec::new();
    let mut ok = true;
    for sigma in [0.05, 0.1, 0.2] {
        let quad = oracle::one_point_numeric(3, sigma).unwrap().value.re;
        let closed = oracle::p3_airy_closed_form(sigma).unwrap();
        let rel = ((quad - closed) / closed).abs();
        if rel > 1e-8 {
            ok = false;
        }
        details.push(format!("p3 sigma={sigma}: rel {rel:.2e}"));
    }
    let c = oracle::two_point_p3_leading_coefficient(0.05).unwrap();
    let rel = (c - 1.0 / 12.0).abs() * 12.0;
    if rel > 0.05 {
        ok = false;
    }
    details.push(format!("p3 two-point coefficient {c:.5} vs 1/12, rel {rel:.3}"));
    let src = oracle::SourceConfig {
        upper: vec![
            Complex64::new(0.3, 0.0),
            Complex64::new(-0.9, 0.0),
            Complex64::new(1.4, 0.0),
        ],
        lower: vec![Complex64::new(0.1, 0.0)],
    };
    let u = oracle::finite_n_one_point(&src, Complex64::new(1e-11, 0.0)).unwrap();
    let st = (u - Complex64::new(2.0, 0.0)).norm();
    if st > 1e-10 {
        ok = false;
    }
    details.push(format!("supertrace deviation {st:.2e}"));
    let sources = vec![Complex64::new(1.0, 0.0); 4];
    let a = oracle::hermitian_one_point(&sources, Complex64::new(0.2, 0.0), 0.45).unwrap();
    let b = oracle::hermitian_one_point(&sources, Complex64::new(0.2, 0.0), 0.52).unwrap();
    let stab = (a - b).norm() / a.norm();
    if stab > 1e-10 {
        ok = false;
    }
    details.push(format!("contour stability {stab:.2e}"));
    Check::new("C15", "numeric oracle agreements", ok, details.join("; "))
}

/// Criterion 16: property suites — total-derivative vanishing at p = 1,
/// Ramond absence for p = 2..5 to σ^20, no Gamma-cancellation failure
/// anywhere above.
pub fn criterion_16() -> Check {
    let p1_empty = one_point_r(&int(1), &int(21)).unwrap().series.is_zero()
        && one_point_ns(&int(1), 5).unwrap().is_empty();
    let mut r_absent = true;
    for p in 2..=5i64 {
        if !one_point_r(&int(p), &int(21)).unwrap().series.is_zero() {
            r_absent = false;
        }
    }
    // Gamma cancellation: every exact engine above returned Ok; run a sweep
    // that would surface a GammaResidue error
    let mut gamma_ok = true;
    for p in [int(2), int(3), int(4), int(5), int(6), int(-2), rat(3, 2)] {
        if one_point_ns(&p, 3).is_err() {
            gamma_ok = false;
        }
    }
    Check::new(
        "C16",
        "total-derivative vanishing, Ramond absence, Gamma cancellation",
        p1_empty && r_absent && gamma_ok,
        format!("p=1 empty: {p1_empty}; R absent p=2..5 (sigma^20): {r_absent}; no Gamma residue errors: {gamma_ok}"),
    )
}

/// All sixteen acceptance criteria.
pub fn acceptance() -> Vec<Check> {
    vec![
        criterion_01(),
        criterion_02(),
        criterion_03(),
        criterion_04(),
        criterion_05(),
        criterion_06(),
        criterion_07(),
        criterion_08(),
        criterion_09(),
        criterion_10(),
        criterion_11(),
        criterion_12(),
        criterion_13(),
        criterion_14(),
        criterion_15(),
        criterion_16(),
    ]
}

/// The golden published-value subset (exact checks only).
pub fn paper_values() -> Vec<Check> {
    vec![
        criterion_01(),
        criterion_02(),
        criterion_03(),
        criterion_04(),
        criterion_05(),
        criterion_06(),
        criterion_07(),
        criterion_09(),
        criterion_10(),
        criterion_11(),
        criterion_14(),
    ]
}

/// Structural/property checks.
pub fn properties() -> Vec<Check> {
    vec![criterion_08(), criterion_13(), criterion_16(), property_selection_rules()]
}

/// Numeric-oracle checks.
pub fn oracle_suite() -> Vec<Check> {
    vec![criterion_15()]
}

/// Extra structural check: every emitted NS record solves the one-point
/// selection rule and carries coupling power (2g-1)/p.
pub fn property_selection_rules() -> Check {
    let mut ok = true;
    let mut scanned = 0;
    for p in [int(2), int(3), int(4), int(5), int(6), rat(3, 2)] {
        for rec in one_point_ns(&p, 4).unwrap() {
            scanned += 1;
            let g: Rat = parse_rat(&rec.genus).unwrap();
            let n = parse_rat(&rec.punctures[0].0).unwrap();
            let l = parse_rat(&rec.punctures[0].1).unwrap();
            let lhs = (int(2) * &g - int(1)) * (int(1) + int(1) / &p);
            let rhs = &n + (&l + int(1)) / &p;
            if lhs != rhs {
                ok = false;
            }
            let coupling = parse_rat(&rec.coupling_power).unwrap();
            if coupling != (int(2) * &g - int(1)) / &p {
                ok = false;
            }
        }
    }
    Check::new(
        "P-selection",
        "NS records satisfy the selection rule and genus bookkeeping",
        ok && scanned > 0,
        format!("{scanned} records scanned"),
    )
}
