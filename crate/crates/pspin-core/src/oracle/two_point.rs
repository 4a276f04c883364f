//! Numeric two-point functions: the Airy-product form for p = 3 and the
//! vertical-line double contour for p = 4.

use num_complex::Complex64;

use crate::error::{OracleError, OracleResult};
use crate::oracle::airy::airy_ai;
use crate::oracle::quad::{integrate, integrate_real, ComplexSeriesSample};

/// p = 3 connected two-point function:
/// U_c = (2/(σ1+σ2)) ∫₀^∞ dx sinh((σ1+σ2)/2 (3σ1)^{1/3}(3σ2)^{1/3} x)
///       Ai((3σ2)^{1/3}x - δ1) Ai(-(3σ1)^{1/3}x - δ2)
/// with δᵢ = σᵢ^{8/3}/(4·3^{1/3}); the Airy decay makes the integral finite.
pub fn p3_two_point(s1: f64, s2: f64, with_delta: bool) -> OracleResult<f64> {
    let d1 = if with_delta {
        s1.powf(8.0 / 3.0) / (4.0 * 3.0f64.powf(1.0 / 3.0))
    } else {
        0.0
    };
    let d2 = if with_delta {
        s2.powf(8.0 / 3.0) / (4.0 * 3.0f64.powf(1.0 / 3.0))
    } else {
        0.0
    };
    let a1 = (3.0 * s1).powf(1.0 / 3.0);
    let a2 = (3.0 * s2).powf(1.0 / 3.0);
    let pref = (s1 + s2) / 2.0 * a1 * a2;
    // upper cut: the first Airy factor decays past its positive turning point
    let upper = (28.0 + d1) / a2;
    let (v, _) = integrate_real(
        |x| {
            let arg1 = a2 * x - d1;
            let arg2 = -a1 * x - d2;
            let ai1 = airy_ai(arg1.min(30.0)).unwrap_or(0.0);
            let ai2 = airy_ai(arg2.max(-30.0)).unwrap_or(0.0);
            (pref * x).sinh() * ai1 * ai2
        },
        0.0,
        upper,
        1e-11,
        "p3 two-point x integral",
    )?;
    Ok(2.0 / (s1 + s2) * v)
}

/// Extraction of the σ1^{1/3} σ2^{7/3} coefficient of the p = 3 two-point
/// function: subtract the δ → 0 kernel, divide the slot monomial, and
/// Richardson-extrapolate in ε = σ1/σ2 over a fixed ladder.
///
/// The conversion to the intersection number divides by 3^{2/3} Ai'(0)²
/// (the per-puncture Γ(2/3)/(2π) normalizations of the one-point convention).
pub fn two_point_p3_leading_coefficient(s2: f64) -> OracleResult<f64> {
    let eps = [0.02, 0.01, 0.005, 0.0025];
    let mut rows = Vec::new();
    let mut vals = Vec::new();
    for &e in &eps {
        let s1 = e * s2;
        let diff = p3_two_point(s1, s2, true)? - p3_two_point(s1, s2, false)?;
        let coef = diff / (s1.powf(1.0 / 3.0) * s2.powf(7.0 / 3.0));
        let x = e.powf(1.0 / 3.0);
        rows.push([1.0, x, x * x, x * x * x]);
        vals.push(coef);
    }
    let fit = super::finite_n_solve4(rows, vals).ok_or(OracleError::Convergence {
        what: "p3 extraction fit",
        achieved: f64::NAN,
        requested: 0.0,
    })?;
    let aip0 = 0.258_819_403_792_806_8;
    let conversion = 3.0f64.powf(2.0 / 3.0) * aip0 * aip0;
    Ok(fit[0] / conversion)
}

/// p = 4 connected two-point function on vertical-line contours
/// u₁ = ε + iv₁, u₂ = -ε + iv₂ (the x-representation folded in analytically):
/// U_c ∝ (2/(σ1+σ2)) ∬ dv₁ dv₂ G(u₁,σ1) G(u₂,σ2) (s₊/2)/((u₁-u₂)² - s₊²/4)
/// with G(u,σ) = exp(-5σu⁴ - (5/2)σ³u² - σ⁵/16).
pub fn p4_two_point(s1: f64, s2: f64) -> OracleResult<f64> {
    let s_sum = s1 + s2;
    let eps = 0.35 + s_sum / 4.0;
    let g = |u: Complex64, s: f64| -> Complex64 {
        (-5.0 * s * u.powu(4) - 2.5 * s * s * s * u.powu(2)
            - Complex64::new(s.powi(5) / 16.0, 0.0))
        .exp()
    };
    let vmax = (40.0f64 / (5.0 * s1.min(s2))).powf(0.25) + 2.0;
    let inner = |v1: f64| -> Complex64 {
        let u1 = Complex64::new(eps, v1);
        let (val, _) = integrate(
            |v2: f64| {
                let u2 = Complex64::new(-eps, v2);
                let d = u1 - u2;
                g(u2, s2) * (s_sum / 2.0) / (d * d - Complex64::new(s_sum * s_sum / 4.0, 0.0))
            },
            -vmax,
            vmax,
            1e-9,
            "p4 inner",
        )
        .unwrap_or((Complex64::new(f64::NAN, 0.0), f64::NAN));
        g(u1, s1) * val
    };
    let (v, _) = integrate(inner, -vmax, vmax, 1e-8, "p4 outer")?;
    if !v.re.is_finite() {
        return Err(OracleError::Convergence {
            what: "p4 two-point",
            achieved: f64::NAN,
            requested: 1e-8,
        });
    }
    // 1/(2iπ)² du₁du₂ = -(i dv₁)(i dv₂)/(4π²) = dv₁dv₂/(4π²)
    Ok(2.0 / s_sum * v.re / (4.0 * std::f64::consts::PI * std::f64::consts::PI))
}

/// Numeric two-point sample for p ∈ {3, 4}.
pub fn two_point_numeric(p: u32, s1: f64, s2: f64) -> OracleResult<ComplexSeriesSample> {
    if !(0.0..=0.5).contains(&s1) || !(0.0..=0.5).contains(&s2) || s1 == 0.0 || s2 == 0.0 {
        return Err(OracleError::Range {
            what: "two_point_numeric sigma",
            value: s1.min(s2),
        });
    }
    let value = match p {
        3 => p3_two_point(s1, s2, true)?,
        4 => p4_two_point(s1, s2)?,
        _ => {
            return Err(OracleError::Range {
                what: "two_point_numeric p",
                value: p as f64,
            })
        }
    };
    Ok(ComplexSeriesSample {
        sigma: Complex64::new(s1, s2),
        value: Complex64::new(value, 0.0),
        estimated_error: 1e-8,
    })
}
