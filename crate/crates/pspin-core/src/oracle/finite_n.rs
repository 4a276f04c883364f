//! Finite-N correlators with external sources: exact residue sums and
//! contour quadrature for the supermatrix and Hermitian representations.

use num_complex::Complex64;

use crate::error::{OracleError, OracleResult};
use crate::oracle::quad::circle_contour;

/// Eigenvalues of the external source: n upper (r) and m lower (ρ) entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SourceConfig {
    pub upper: Vec<Complex64>,
    pub lower: Vec<Complex64>,
}

impl SourceConfig {
    pub fn hermitian(upper: Vec<Complex64>) -> Self {
        SourceConfig {
            upper,
            lower: Vec::new(),
        }
    }

    /// Check the p-spin tuning conditions Σ1/a² = p-1, Σ1/a^m = 0 (m = 3..p)
    /// on the distinct upper eigenvalues, to 1e-12.
    pub fn is_pspin_tuned(&self, p: u32) -> bool {
        let distinct: Vec<Complex64> = {
            let mut v: Vec<Complex64> = Vec::new();
            for a in &self.upper {
                if !v.iter().any(|b| (b - a).norm() < 1e-12) {
                    v.push(*a);
                }
            }
            v
        };
        let power_sum = |m: i32| -> Complex64 {
            distinct.iter().map(|a| a.powi(-m)).sum()
        };
        if (power_sum(2) - Complex64::new((p - 1) as f64, 0.0)).norm() > 1e-12 {
            return false;
        }
        for m in 3..=p as i32 {
            if power_sum(m).norm() > 1e-12 {
                return false;
            }
        }
        true
    }
}

fn check_simple_poles(poles: &[Complex64]) -> OracleResult<()> {
    for (i, a) in poles.iter().enumerate() {
        for b in poles.iter().skip(i + 1) {
            let sep = (a - b).norm();
            if sep < 1e-10 {
                return Err(OracleError::DegeneratePole { separation: sep });
            }
        }
    }
    Ok(())
}

/// Supermatrix one-point function, exact residue sum:
/// U(σ) = (1/σ) ∮ du/2iπ e^{-iσu} ∏ᵢ (u-rᵢ+σ/2)/(u-rᵢ-σ/2)
///                                ∏ⱼ (u-ρⱼ-σ/2)/(u-ρⱼ+σ/2),
/// poles at u = rᵢ + σ/2 and u = ρⱼ - σ/2, all enclosed.
pub fn finite_n_one_point(src: &SourceConfig, sigma: Complex64) -> OracleResult<Complex64> {
    if sigma.norm() == 0.0 {
        return Err(OracleError::Range {
            what: "finite_n_one_point sigma",
            value: 0.0,
        });
    }
    let half = sigma / 2.0;
    let mut poles: Vec<Complex64> = Vec::new();
    poles.extend(src.upper.iter().map(|r| r + half));
    poles.extend(src.lower.iter().map(|rho| rho - half));
    check_simple_poles(&poles)?;

    // residues written in pole differences (rᵢ - rⱼ etc.), never through
    // σ-sized cancellations of O(1) quantities
    let mut total = Complex64::new(0.0, 0.0);
    for (i, ri) in src.upper.iter().enumerate() {
        let u = ri + half;
        let mut acc = Complex64::new(1.0, 0.0) * sigma; // skipped numerator
        for (j, rj) in src.upper.iter().enumerate() {
            if j == i {
                continue;
            }
            let d = ri - rj;
            acc *= (d + sigma) / d;
        }
        for rho in &src.lower {
            let d = ri - rho;
            acc *= d / (d + sigma);
        }
        total += (-Complex64::i() * sigma * u).exp() * acc;
    }
    for (j, rj) in src.lower.iter().enumerate() {
        let u = rj - half;
        let mut acc = -Complex64::new(1.0, 0.0) * sigma; // skipped numerator = -σ
        for r in &src.upper {
            let d = rj - r;
            acc *= d / (d - sigma);
        }
        for (k, rk) in src.lower.iter().enumerate() {
            if k == j {
                continue;
            }
            let d = rj - rk;
            acc *= (d - sigma) / d;
        }
        total += (-Complex64::i() * sigma * u).exp() * acc;
    }
    Ok(total / sigma)
}

/// Hermitian one-point function with source eigenvalues a and size N:
/// U(σ) = (1/(Nσ)) e^{Nσ²/2} ∮ du/2iπ ∏ (1-σ/(aⱼ-u)) e^{Nσu},
/// evaluated by circle quadrature around the source cluster (poles may be
/// degenerate there).
pub fn hermitian_one_point(
    sources: &[Complex64],
    sigma: Complex64,
    radius: f64,
) -> OracleResult<Complex64> {
    let n = sources.len() as f64;
    let center = sources.iter().sum::<Complex64>() / n;
    let f = |u: Complex64| -> Complex64 {
        let mut acc = (n * sigma * u).exp();
        for a in sources {
            acc *= Complex64::new(1.0, 0.0) - sigma / (a - u);
        }
        acc
    };
    let (v, _) = circle_contour(f, center, radius, 1e-11, "hermitian one-point")?;
    Ok(v * (n * sigma * sigma / 2.0).exp() / (n * sigma))
}

/// Supermatrix two-point connected function: nested circle contours, the
/// inner (u₂) one wide enough to enclose the determinant poles
/// u₂ = u₁ ± (σ₁+σ₂)/2 as well as the source poles. (Enclosing only the
/// source poles reproduces -U(σ₁)U(σ₂), not a connected function: verified
/// against the N = 1 closed form.)
pub fn finite_n_two_point(
    src: &SourceConfig,
    sigma1: Complex64,
    sigma2: Complex64,
) -> OracleResult<Complex64> {
    let s_sum = sigma1 + sigma2;
    let max_pole = src
        .upper
        .iter()
        .chain(src.lower.iter())
        .map(|z| z.norm())
        .fold(0.0f64, f64::max);
    let r1 = max_pole + 1.0 + s_sum.norm();
    let r2 = r1 + 1.0 + s_sum.norm();
    let ratio = |u: Complex64, sigma: Complex64| -> Complex64 {
        let half = sigma / 2.0;
        let mut acc = Complex64::new(1.0, 0.0);
        for r in &src.upper {
            acc *= (u - r + half) / (u - r - half);
        }
        for rho in &src.lower {
            acc *= (u - rho - half) / (u - rho + half);
        }
        acc
    };
    let outer = |u1: Complex64| -> Complex64 {
        let inner = |u2: Complex64| -> Complex64 {
            let d = u1 - u2;
            (-Complex64::i() * sigma2 * u2).exp() * ratio(u2, sigma2)
                / ((d - s_sum / 2.0) * (d + s_sum / 2.0))
        };
        let (v, _) = circle_contour(inner, Complex64::new(0.0, 0.0), r2, 1e-10, "inner contour")
            .unwrap_or((Complex64::new(f64::NAN, 0.0), f64::NAN));
        (-Complex64::i() * sigma1 * u1).exp() * ratio(u1, sigma1) * v
    };
    let (v, _) = circle_contour(outer, Complex64::new(0.0, 0.0), r1, 1e-9, "outer contour")?;
    if !v.re.is_finite() {
        return Err(OracleError::Convergence {
            what: "finite_n_two_point",
            achieved: f64::NAN,
            requested: 1e-9,
        });
    }
    Ok(v)
}

/// Hermitian two-point connected function with N-weighted exponents, nested
/// circles around the source cluster (inner contour encloses the determinant
/// poles).
pub fn hermitian_two_point(
    sources: &[Complex64],
    sigma1: Complex64,
    sigma2: Complex64,
    radius: f64,
) -> OracleResult<Complex64> {
    let n = sources.len() as f64;
    let center = sources.iter().sum::<Complex64>() / n;
    let shift = (sigma1 + sigma2).norm();
    let r1 = radius;
    let r2 = radius + 2.0 * shift + 0.5;
    let prod = |u: Complex64, sigma: Complex64| -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        for a in sources {
            acc *= Complex64::new(1.0, 0.0) - sigma / (a - u);
        }
        acc
    };
    let outer = |u1: Complex64| -> Complex64 {
        let inner = |u2: Complex64| -> Complex64 {
            (n * sigma2 * u2).exp() * prod(u2, sigma2)
                / ((u1 - u2 + sigma1) * (u2 - u1 + sigma2))
        };
        let (v, _) = circle_contour(inner, center, r2, 1e-10, "inner hermitian")
            .unwrap_or((Complex64::new(f64::NAN, 0.0), f64::NAN));
        (n * sigma1 * u1).exp() * prod(u1, sigma1) * v
    };
    let (v, _) = circle_contour(outer, center, r1, 1e-9, "outer hermitian")?;
    if !v.re.is_finite() {
        return Err(OracleError::Convergence {
            what: "hermitian_two_point",
            achieved: f64::NAN,
            requested: 1e-9,
        });
    }
    // connected off-diagonal determinant term carries a minus sign
    Ok(-v * ((n * (sigma1 * sigma1 + sigma2 * sigma2)) / 2.0).exp())
}

/// p = 2 trend extraction: with the tuned degenerate source a = 1 (N-fold),
/// fit the diagonal σ³ coefficient of U_c e^{-Nσ²} relative to its σ⁰ value
/// and scale by 1/(6N). The scaled limit is 2⟨τ_{0,0}τ_{2,0}⟩+⟨τ_{1,0}τ_{1,0}⟩
/// over 6 = 1/24.
pub fn p2_trend_estimate(n: usize) -> OracleResult<f64> {
    let sources = vec![Complex64::new(1.0, 0.0); n];
    let scale = (n as f64).powf(-1.0 / 3.0);
    let ws = [0.5, 0.7, 0.9, 1.1];
    let mut rows = Vec::new();
    let mut vals = Vec::new();
    for &w in &ws {
        let s = w * scale;
        let sigma = Complex64::new(s, 0.0);
        let u = hermitian_two_point(&sources, sigma, sigma, 0.4)?;
        let v = (u * (-2.0 * n as f64 * sigma * sigma / 2.0).exp()).re;
        rows.push([1.0, s, s * s, s * s * s]);
        vals.push(v);
    }
    // solve the 4x4 Vandermonde-style system for [A, B1, B2, B3]
    let coef = solve4(rows, vals).ok_or(OracleError::Convergence {
        what: "p2 trend fit",
        achieved: f64::NAN,
        requested: 0.0,
    })?;
    let relative_cubic = coef[3] / coef[0];
    Ok(relative_cubic / (6.0 * n as f64))
}

pub(crate) fn solve4(mut a: Vec<[f64; 4]>, mut b: Vec<f64>) -> Option<[f64; 4]> {
    let n = 4;
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| {
            a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap()
        })?;
        if a[piv][col].abs() < 1e-14 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in 0..n {
            if row == col {
                continue;
            }
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut out = [0.0; 4];
    for i in 0..n {
        out[i] = b[i] / a[i][i];
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn supertrace_limit() {
        // σ → 0: U → n - m
        let src = SourceConfig {
            upper: vec![c(0.3, 0.0), c(-0.9, 0.0), c(1.4, 0.0)],
            lower: vec![c(0.1, 0.0)],
        };
        let u = finite_n_one_point(&src, c(1e-11, 0.0)).unwrap();
        assert!((u - c(2.0, 0.0)).norm() < 1e-10, "{u}");
    }

    #[test]
    fn single_source_closed_form() {
        // n=1, m=0, r=0: U(σ) = e^{-iσ²/2}
        let src = SourceConfig::hermitian(vec![c(0.0, 0.0)]);
        for s in [0.3, 0.7, 1.1] {
            let sigma = c(s, 0.0);
            let u = finite_n_one_point(&src, sigma).unwrap();
            let expect = (-Complex64::i() * sigma * sigma / 2.0).exp();
            assert!((u - expect).norm() < 1e-12, "s={s}");
        }
    }

    #[test]
    fn degenerate_poles_detected() {
        let src = SourceConfig::hermitian(vec![c(0.5, 0.0), c(0.5, 0.0)]);
        assert!(matches!(
            finite_n_one_point(&src, c(0.3, 0.0)),
            Err(OracleError::DegeneratePole { .. })
        ));
    }

    #[test]
    fn pspin_tuning_check() {
        // p = 3: a = (1, -1)
        let src = SourceConfig::hermitian(vec![c(1.0, 0.0), c(-1.0, 0.0)]);
        assert!(src.is_pspin_tuned(3));
        // p = 2: a = 1
        let src = SourceConfig::hermitian(vec![c(1.0, 0.0); 5]);
        assert!(src.is_pspin_tuned(2));
        let src = SourceConfig::hermitian(vec![c(2.0, 0.0)]);
        assert!(!src.is_pspin_tuned(2));
    }

    #[test]
    fn hermitian_single_source_closed_form() {
        // N=1, source a: U(σ) = e^{σa + σ²/2}
        for (a, s) in [(0.4, 0.5), (-0.3, 0.8)] {
            let u = hermitian_one_point(&[c(a, 0.0)], c(s, 0.0), 0.6).unwrap();
            let expect = (c(s * a + s * s / 2.0, 0.0)).exp();
            assert!((u - expect).norm() < 1e-9, "a={a} s={s}: {u} vs {expect}");
        }
    }

    #[test]
    fn hermitian_two_point_n1_closed_form() {
        // N=1: U_c = e^{(σ1+σ2)a + (σ1²+σ2²)/2} (e^{σ1σ2} - 1)
        let a = 0.25;
        for (s1, s2) in [(0.3, 0.5), (0.4, 0.4)] {
            let u = hermitian_two_point(&[c(a, 0.0)], c(s1, 0.0), c(s2, 0.0), 0.5).unwrap();
            let expect = ((s1 + s2) * a + (s1 * s1 + s2 * s2) / 2.0).exp()
                * ((s1 * s2 as f64).exp() - 1.0);
            assert!(
                ((u.re - expect) / expect).abs() < 1e-7 && u.im.abs() < 1e-8,
                "s=({s1},{s2}): {u} vs {expect}"
            );
        }
    }

    #[test]
    fn super_two_point_cluster_decay() {
        // m=0, n=1: U_c → 0 as σ1 → 0 at fixed σ2
        let src = SourceConfig::hermitian(vec![c(0.2, 0.0)]);
        let base = finite_n_two_point(&src, c(0.4, 0.0), c(0.5, 0.0))
            .unwrap()
            .norm();
        let small = finite_n_two_point(&src, c(0.04, 0.0), c(0.5, 0.0))
            .unwrap()
            .norm();
        let smaller = finite_n_two_point(&src, c(0.004, 0.0), c(0.5, 0.0))
            .unwrap()
            .norm();
        assert!(small < 0.2 * base, "{small} vs {base}");
        assert!(smaller < 0.2 * small, "{smaller} vs {small}");
    }

    #[test]
    fn super_two_point_symmetry() {
        let src = SourceConfig {
            upper: vec![c(0.3, 0.0), c(-0.6, 0.0)],
            lower: vec![c(0.9, 0.0)],
        };
        let a = finite_n_two_point(&src, c(0.3, 0.0), c(0.45, 0.0)).unwrap();
        let b = finite_n_two_point(&src, c(0.45, 0.0), c(0.3, 0.0)).unwrap();
        assert!((a - b).norm() < 1e-10 * a.norm().max(1.0), "{a} vs {b}");
    }

    #[test]
    fn contour_radius_stability() {
        // residue sums are invariant under contour-radius perturbation
        let sources = vec![c(1.0, 0.0); 4];
        let sigma = c(0.2, 0.0);
        let a = hermitian_one_point(&sources, sigma, 0.45).unwrap();
        let b = hermitian_one_point(&sources, sigma, 0.52).unwrap();
        assert!((a - b).norm() < 1e-10 * a.norm(), "{a} vs {b}");
    }

    #[test]
    fn super_vs_hermitian_convention_map() {
        // N = 1: U_super(σ; r) = U_herm(e^{-iπ/4}σ; e^{-iπ/4}r)
        let r = 0.6;
        let s = 0.5;
        let phase = Complex64::from_polar(1.0, -std::f64::consts::FRAC_PI_4);
        let super_u = finite_n_one_point(
            &SourceConfig::hermitian(vec![c(r, 0.0)]),
            c(s, 0.0),
        )
        .unwrap();
        let herm_u = hermitian_one_point(&[phase * r], phase * s, 0.6).unwrap();
        assert!((super_u - herm_u).norm() < 1e-9, "{super_u} vs {herm_u}");
    }
}
