//! Legendre functions P_lambda of complex degree on (-1, 1], and the partial
//! wave projection integral in closed form.

use super::quad::rule24;
use super::SpecFunError;
use crate::dd::{CDd, Dd};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Hard cap on hypergeometric series terms; convergence near z = -1 is
/// logarithmically slow and must fail loudly instead of hanging.
const SERIES_CAP: usize = 100_000;
/// Relative stop for the series.
const SERIES_RTOL: f64 = 1e-15;
/// Degrees with |lambda| above this cancel catastrophically in the series
/// and are evaluated through the Laplace integral representation instead.
const LAMBDA_SWITCH: f64 = 20.0;
/// The Laplace path needs the argument off the principal-branch crossing.
const LAPLACE_MIN_Z: f64 = -1e-10;
/// Pole-proximity tolerance for the projection formula.
const POLE_TOL: f64 = 1e-9;

/// Legendre function P_lambda(z) of complex degree, z in (-1, 1].
///
/// Hypergeometric series in (1-z)/2 for moderate |lambda|; the large-degree
/// path integrates the Laplace representation over graded Gauss-Legendre
/// panels (the series loses ~2|lambda| digits to cancellation there).
pub fn legendre_p(lambda: Complex64, z: f64) -> Result<Complex64, SpecFunError> {
    if !z.is_finite() || !lambda.is_finite() {
        return Err(SpecFunError::Domain("non-finite legendre argument".into()));
    }
    if z <= -1.0 {
        return Err(SpecFunError::Domain(format!(
            "legendre_p argument {} <= -1 (logarithmic singularity)",
            z
        )));
    }
    if z > 1.0 {
        return Err(SpecFunError::Domain(format!(
            "legendre_p argument {} > 1 outside supported interval",
            z
        )));
    }
    if z == 1.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if lambda.norm() <= LAMBDA_SWITCH {
        series(lambda, z)
    } else if z >= LAPLACE_MIN_Z {
        Ok(laplace(lambda, z))
    } else {
        Err(SpecFunError::PrecisionLoss { partial: None })
    }
}

fn series(lambda: Complex64, z: f64) -> Result<Complex64, SpecFunError> {
    let x = Dd::from_f64(1.0).sub(Dd::from_f64(z)).mul_f64(0.5);
    let mut term = CDd::from_f64(1.0, 0.0);
    let mut sum = term;
    let mut small_streak = 0;
    for k in 0..SERIES_CAP {
        let kf = k as f64;
        // term *= (k - lambda)(k + lambda + 1) / (k+1)^2 * x
        let a = Complex64::new(kf, 0.0) - lambda;
        let b = Complex64::new(kf + 1.0, 0.0) + lambda;
        let ab = a * b;
        term = term
            .mul(CDd::from_f64(ab.re, ab.im))
            .mul_dd(x)
            .mul_dd(Dd::from_f64(1.0).div_f64((kf + 1.0) * (kf + 1.0)));
        sum = sum.add(term);
        let t_mag = term.norm_sqr().sqrt();
        let s_mag = sum.norm_sqr().sqrt().max(1e-300);
        if t_mag < SERIES_RTOL * s_mag {
            small_streak += 1;
            if small_streak >= 2 {
                return Ok(Complex64::new(sum.re.to_f64(), sum.im.to_f64()));
            }
        } else {
            small_streak = 0;
        }
    }
    Err(SpecFunError::PrecisionLoss {
        partial: Some(Complex64::new(sum.re.to_f64(), sum.im.to_f64())),
    })
}

/// Laplace integral P_lambda(z) = (1/pi) int_0^pi (z + i sqrt(1-z^2) cos t)^lambda dt.
fn laplace(lambda: Complex64, z: f64) -> Complex64 {
    // The equation is symmetric under lambda -> -lambda - 1; fold onto the
    // half-plane where the integrand stays bounded.
    let lambda = if lambda.re < -0.5 {
        -lambda - 1.0
    } else {
        lambda
    };
    let s = (1.0 - z * z).max(0.0).sqrt();
    let (nodes, weights) = rule24();
    // Panels graded toward t = 0 and pi (endpoint stationary phase) and
    // toward pi/2 (where the integrand pinches for z near 0).
    let mut brk = vec![0.0, PI];
    for j in 1..=10 {
        let d = (PI / 2.0) * 0.5f64.powi(j);
        brk.push(d);
        brk.push(PI - d);
        brk.push(PI / 2.0 - d);
        brk.push(PI / 2.0 + d);
    }
    brk.push(PI / 2.0);
    brk.sort_by(|a, b| a.partial_cmp(b).unwrap());
    brk.dedup_by(|a, b| (*a - *b).abs() < 1e-15);

    let mut acc = Complex64::new(0.0, 0.0);
    for pair in brk.windows(2) {
        let (lo, hi) = (pair[0], pair[1]);
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        for (xi, wi) in nodes.iter().zip(weights) {
            let t = mid + half * xi;
            let w = Complex64::new(z, s * t.cos());
            // |w| can underflow to 0 near t = pi/2 when z ~ 0; the integrand
            // vanishes there for Re(lambda) > 0.
            let val = if w.norm_sqr() == 0.0 {
                Complex64::new(0.0, 0.0)
            } else {
                (lambda * w.ln()).exp()
            };
            acc += wi * half * val;
        }
    }
    acc / PI
}

/// Partial-wave projection (1/2) int_{-1}^{1} P_lambda(-z) P_ell(z) dz in
/// closed form: sin(pi lambda) / (pi (lambda - ell)(lambda + ell + 1)).
pub fn legendre_projection(lambda: Complex64, ell: u32) -> Result<Complex64, SpecFunError> {
    let ellf = f64::from(ell);
    let d1 = lambda - ellf;
    let d2 = lambda + (ellf + 1.0);
    if d1.norm() < POLE_TOL || d2.norm() < POLE_TOL {
        return Err(SpecFunError::PoleProximity);
    }
    Ok((PI * lambda).sin() / (PI * d1 * d2))
}
