//! Quadrature helpers: node-doubling Simpson rules on real and complex
//! integrands. Every quadrature doubles its node count until two successive
//! results differ by less than the requested tolerance; the reported error
//! bounds that difference.

use num_complex::Complex64;

use crate::error::{OracleError, OracleResult};

/// One numeric sample of a series value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexSeriesSample {
    pub sigma: Complex64,
    pub value: Complex64,
    pub estimated_error: f64,
}

/// Simpson rule with n panels (n even) on [a, b].
fn simpson<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, n: usize) -> Complex64 {
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h);
    }
    acc * (h / 3.0)
}

/// Doubling Simpson quadrature to the requested absolute-or-relative
/// tolerance.
pub fn integrate<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
    what: &'static str,
) -> OracleResult<(Complex64, f64)> {
    let mut n = 64;
    let mut prev = simpson(&f, a, b, n);
    for _ in 0..14 {
        n *= 2;
        let next = simpson(&f, a, b, n);
        let diff = (next - prev).norm();
        let scale = next.norm().max(1.0);
        if diff <= tol * scale {
            return Ok((next, diff));
        }
        prev = next;
    }
    Err(OracleError::Convergence {
        what,
        achieved: f64::NAN,
        requested: tol,
    })
}

/// Real-valued convenience wrapper.
pub fn integrate_real<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
    what: &'static str,
) -> OracleResult<(f64, f64)> {
    let (v, e) = integrate(|x| Complex64::new(f(x), 0.0), a, b, tol, what)?;
    Ok((v.re, e))
}

/// Uniform trapezoid rule around a circle |u - center| = radius, doubling the
/// node count until stable: exponentially accurate for analytic integrands.
/// Returns (1/2πi)∮ f du.
pub fn circle_contour<F: Fn(Complex64) -> Complex64>(
    f: F,
    center: Complex64,
    radius: f64,
    tol: f64,
    what: &'static str,
) -> OracleResult<(Complex64, f64)> {
    let eval = |m: usize| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..m {
            let th = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
            let w = Complex64::from_polar(radius, th);
            // du/(2πi) = w dθ/(2π); trapezoid on the periodic circle
            acc += f(center + w) * w;
        }
        acc / m as f64
    };
    let mut m = 64;
    let mut prev = eval(m);
    for _ in 0..10 {
        m *= 2;
        let next = eval(m);
        let diff = (next - prev).norm();
        let scale = next.norm().max(1e-30);
        if diff <= tol * scale {
            return Ok((next, diff));
        }
        prev = next;
    }
    Err(OracleError::Convergence {
        what,
        achieved: f64::NAN,
        requested: tol,
    })
}

/// Fit the exponent b of |f| ≈ a·σ^b from log-log samples by least squares.
pub fn fit_exponent(samples: &[(f64, f64)]) -> f64 {
    let n = samples.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for (s, v) in samples {
        let x = s.ln();
        let y = v.abs().ln();
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_gaussian() {
        let (v, _) = integrate_real(|x| (-x * x).exp(), -8.0, 8.0, 1e-12, "gauss").unwrap();
        assert!((v - std::f64::consts::PI.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn circle_picks_residue() {
        // f = 1/(u-1): residue 1 around center 1
        let (v, _) = circle_contour(
            |u| 1.0 / (u - Complex64::new(1.0, 0.0)),
            Complex64::new(1.0, 0.0),
            0.7,
            1e-12,
            "pole",
        )
        .unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn exponent_fit_recovers_slope() {
        let samples: Vec<(f64, f64)> = [0.05f64, 0.1, 0.2]
            .iter()
            .map(|&s| (s, 3.0 * s.powf(-0.5)))
            .collect();
        assert!((fit_exponent(&samples) + 0.5).abs() < 1e-12);
    }
}
