//! Bessel J and first-kind Hankel functions of complex order, and the
//! complex-order roots of H1_nu(x) = 0.

use super::gamma::{ln_gamma, sin_pi};
use super::SpecFunError;
use crate::dd::{CDd, Dd};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Series-validity limit on |nu| for the ascending series.
const NU_LIMIT: f64 = 60.0;
/// Abort when the largest series term exceeds the running sum by this factor
/// (the double-double mantissa still leaves ~12 good digits at the guard).
const CANCELLATION_GUARD: f64 = 1e20;
/// Integer orders are displaced to nu + i*1e-9 instead of taking limits.
const INTEGER_NUDGE: f64 = 1e-9;
/// Newton step for the d/dnu centered difference.
const NEWTON_STEP: f64 = 1e-6;
/// Newton iteration budget for root refinement.
const MAX_NEWTON_ITERS: u32 = 25;

/// A refined root of H1_nu(kR) = 0 in the complex order plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HankelRoot {
    /// Root index m = 1, 2, ... counted by the asymptotic seed rule.
    pub index: u32,
    /// The complex degree nu at the root.
    pub nu: Complex64,
    /// |H1_nu(kR)| at the returned nu.
    pub residual: f64,
    /// Newton iterations consumed.
    pub iterations: u32,
}

/// Bessel function J_nu(x) for complex order nu and real x > 0.
///
/// Ascending series with double-double accumulation; the prefactor
/// (x/2)^nu / Gamma(nu+1) is applied in ordinary f64 complex arithmetic.
pub fn bessel_j(nu: Complex64, x: f64) -> Result<Complex64, SpecFunError> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(SpecFunError::Domain(format!(
            "bessel_j requires x > 0, got {}",
            x
        )));
    }
    if nu.norm() > NU_LIMIT {
        return Err(SpecFunError::Range(format!(
            "|nu| = {:.1} beyond series validity limit {}",
            nu.norm(),
            NU_LIMIT
        )));
    }
    // q = -x^2/4 exactly in double-double.
    let x_dd = Dd::from_f64(x);
    let q = x_dd.mul(x_dd).mul_f64(-0.25);

    let mut term = CDd::from_f64(1.0, 0.0);
    let mut sum = term;
    let mut max_term: f64 = 1.0;
    let mut small_streak = 0;
    for k in 0..400u32 {
        let kf = f64::from(k);
        // term *= q / ((k+1)(nu+k+1))
        let divisor = CDd::from_f64((kf + 1.0) * (nu.re + kf + 1.0), (kf + 1.0) * nu.im);
        term = term.mul_dd(q).div(divisor);
        sum = sum.add(term);
        let t_mag = term.norm_sqr().sqrt();
        max_term = max_term.max(t_mag);
        if t_mag < 1e-34 * sum.norm_sqr().sqrt().max(1e-300) {
            small_streak += 1;
            if small_streak >= 2 {
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    let sum_mag = sum.norm_sqr().sqrt();
    if sum_mag == 0.0 || max_term / sum_mag > CANCELLATION_GUARD {
        return Err(SpecFunError::PrecisionLoss {
            partial: Some(Complex64::new(sum.re.to_f64(), sum.im.to_f64())),
        });
    }
    let prefactor = (nu * (x / 2.0).ln() - ln_gamma(nu + 1.0)).exp();
    Ok(prefactor * Complex64::new(sum.re.to_f64(), sum.im.to_f64()))
}

/// First-kind Hankel function H1_nu(x) of complex order, x > 0.
///
/// Combination (J_{-nu} - e^{-i pi nu} J_nu) / (i sin pi nu); integer nu is
/// displaced by i*1e-9 rather than handled by limit formulas, which leaves
/// integer orders with a relative error around 1e-6 (amplification of the
/// Gamma-function accuracy by the small sin(pi nu) denominator).
pub fn hankel1(nu: Complex64, x: f64) -> Result<Complex64, SpecFunError> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(SpecFunError::Domain(format!(
            "hankel1 requires x > 0, got {}",
            x
        )));
    }
    let nearest = nu.re.round();
    let nu = if (nu - nearest).norm() < INTEGER_NUDGE {
        Complex64::new(nearest, nu.im + INTEGER_NUDGE)
    } else {
        nu
    };
    let j_pos = bessel_j(nu, x)?;
    let j_neg = bessel_j(-nu, x)?;
    let i = Complex64::i();
    // e^{-i pi nu} with the integer part of Re(nu) peeled off exactly.
    let n = nu.re.round();
    let d = Complex64::new(nu.re - n, nu.im);
    let mut phase = (-i * PI * d).exp();
    if (n as i64).rem_euclid(2) == 1 {
        phase = -phase;
    }
    Ok((j_neg - phase * j_pos) / (i * sin_pi(nu)))
}

/// Asymptotic seed for the m-th root of H1_nu(kR) = 0.
pub fn hankel_root_seed(m: u32, wavenumber: f64, radius: f64) -> Complex64 {
    let x = wavenumber * radius;
    let a = 0.75 * PI * (4.0 * f64::from(m) - 1.0);
    let scale = 0.5 * x.sqrt() * a.powf(2.0 / 3.0);
    Complex64::new(x, 0.0) + scale * Complex64::from_polar(1.0, PI / 3.0)
}

/// Newton refinement of the m-th complex-order root of H1_nu(kR) = 0,
/// starting from the asymptotic seed. The d/dnu derivative is a centered
/// difference with step 1e-6.
pub fn hankel_root(
    m: u32,
    wavenumber: f64,
    radius: f64,
    tol: f64,
) -> Result<HankelRoot, SpecFunError> {
    if m == 0 || m > 10 {
        return Err(SpecFunError::UnsupportedOrder(m));
    }
    let x = wavenumber * radius;
    if x < 5.0 {
        return Err(SpecFunError::Domain(format!(
            "hankel_root requires kR >= 5 for the asymptotic seed, got kR = {}",
            x
        )));
    }
    let mut nu = hankel_root_seed(m, wavenumber, radius);
    let mut residual = f64::INFINITY;
    for iter in 0..=MAX_NEWTON_ITERS {
        let h = hankel1(nu, x)?;
        residual = h.norm();
        if residual < tol {
            if nu.im <= 0.0 {
                return Err(SpecFunError::NoConvergence { last: nu, residual });
            }
            return Ok(HankelRoot {
                index: m,
                nu,
                residual,
                iterations: iter,
            });
        }
        if iter == MAX_NEWTON_ITERS {
            break;
        }
        let step = Complex64::new(NEWTON_STEP, 0.0);
        let d = (hankel1(nu + step, x)? - hankel1(nu - step, x)?) / (2.0 * NEWTON_STEP);
        if d.norm() == 0.0 {
            return Err(SpecFunError::NoConvergence { last: nu, residual });
        }
        nu -= h / d;
    }
    Err(SpecFunError::NoConvergence { last: nu, residual })
}
