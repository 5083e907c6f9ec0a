//! Airy function Ai and its derivative on the real line.
//!
//! Maclaurin series (in double-double) for |t| below the switch point,
//! asymptotic expansions beyond it. The switch sits at |t| = 5 plus a small
//! guard band so that a centered-difference stencil of step 1e-4 placed at
//! |t| = 5 never straddles the two branches.

use super::SpecFunError;
use crate::dd::{Dd, DD_ONE};
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Series/asymptotic switch; the guard band keeps |t|=5 stencils one-branch.
const SWITCH: f64 = 5.02;
/// Beyond this the oscillatory phase (2/3)|t|^{3/2} has no f64 accuracy left.
const NEG_LIMIT: f64 = -1.0e8;
/// 35 digits of pi, split into a double-double at init.
const PI_DECIMAL: &str = "3.14159265358979323846264338327950288";

/// (Ai(0), -Ai'(0)) in double-double.
///
/// Derived at first use, not hardcoded: the ratio c2/c1 comes from shooting
/// the two Maclaurin basis solutions to t = 15 (the recessive combination
/// must die like e^{-zeta}), and the product c1*c2 = sqrt(3)/(6*pi) is exact.
fn constants() -> &'static (Dd, Dd) {
    static CONSTANTS: OnceLock<(Dd, Dd)> = OnceLock::new();
    CONSTANTS.get_or_init(|| {
        let t = Dd::from_f64(15.0);
        let (f, g) = series_fg(t);
        let mu = f.div(g); // c2/c1, up to O(e^{-2 zeta(15)}) ~ 2e-34
        let pi = Dd::from_decimal(PI_DECIMAL);
        let sqrt3 = dd_sqrt(Dd::from_f64(3.0));
        let product = sqrt3.div(pi.mul_f64(6.0)); // c1*c2
        let c1 = dd_sqrt(product.div(mu));
        let c2 = mu.mul(c1);
        (c1, c2)
    })
}

fn dd_sqrt(a: Dd) -> Dd {
    // Newton refinement of the f64 seed; two steps reach full dd precision.
    let mut s = Dd::from_f64(a.hi.sqrt());
    for _ in 0..3 {
        s = s.add(a.div(s)).mul_f64(0.5);
    }
    s
}

/// Maclaurin basis f, g with f(0)=1, f'(0)=0, g(0)=0, g'(0)=1.
fn series_fg(t: Dd) -> (Dd, Dd) {
    let t3 = t.mul(t).mul(t);
    let mut f_term = DD_ONE;
    let mut g_term = t;
    let mut f_sum = f_term;
    let mut g_sum = g_term;
    for k in 1..200u32 {
        let k = f64::from(k);
        f_term = f_term.mul(t3).div_f64((3.0 * k) * (3.0 * k - 1.0));
        g_term = g_term.mul(t3).div_f64((3.0 * k) * (3.0 * k + 1.0));
        f_sum = f_sum.add(f_term);
        g_sum = g_sum.add(g_term);
        if f_term.hi.abs() < 1e-40 * f_sum.hi.abs() && g_term.hi.abs() < 1e-40 * g_sum.hi.abs() {
            break;
        }
    }
    (f_sum, g_sum)
}

/// Derivatives f', g' of the Maclaurin basis.
fn series_fg_prime(t: Dd) -> (Dd, Dd) {
    let t3 = t.mul(t).mul(t);
    // f' = t^2/2 + t^5/30 + ..., ratio t^3/((3k)(3k+2))
    let mut fp_term = t.mul(t).mul_f64(0.5);
    let mut fp_sum = fp_term;
    // g' = 1 + t^3/3 + ..., ratio t^3/((3k+1)(3k+3))
    let mut gp_term = DD_ONE;
    let mut gp_sum = gp_term;
    for k in 0..200u32 {
        let kf = f64::from(k);
        if k >= 1 {
            fp_term = fp_term.mul(t3).div_f64((3.0 * kf) * (3.0 * kf + 2.0));
            fp_sum = fp_sum.add(fp_term);
        }
        gp_term = gp_term.mul(t3).div_f64((3.0 * kf + 1.0) * (3.0 * kf + 3.0));
        gp_sum = gp_sum.add(gp_term);
        if fp_term.hi.abs() < 1e-40 * fp_sum.hi.abs() && gp_term.hi.abs() < 1e-40 * gp_sum.hi.abs()
        {
            break;
        }
    }
    (fp_sum, gp_sum)
}

/// Coefficients u_k of the exponential asymptotic series, plus v_k for Ai'.
fn asymptotic_sums(zeta: f64, signed: bool) -> (f64, f64) {
    // signed=true evaluates sum (-1)^k u_k/zeta^k (t > 0); signed=false is
    // used by the oscillatory branch through the even/odd split below.
    let mut u = 1.0;
    let mut su = 1.0;
    let mut sv = 1.0;
    let mut term_u;
    let mut prev = f64::INFINITY;
    for k in 1..60u32 {
        let kf = f64::from(k);
        u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / (216.0 * kf * (2.0 * kf - 1.0));
        let v = u * (6.0 * kf + 1.0) / (1.0 - 6.0 * kf);
        term_u = u / zeta.powi(k as i32);
        if term_u.abs() > prev {
            break; // divergent tail of the asymptotic series
        }
        prev = term_u.abs();
        let s = if signed && k % 2 == 1 { -1.0 } else { 1.0 };
        su += s * term_u;
        sv += s * v / zeta.powi(k as i32);
        if term_u.abs() < 1e-18 {
            break;
        }
    }
    (su, sv)
}

/// Even/odd split sums for the oscillatory (negative argument) expansion.
fn oscillatory_sums(zeta: f64) -> (f64, f64, f64, f64) {
    let mut u = vec![1.0f64];
    for k in 1..40usize {
        let kf = k as f64;
        let next = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / (216.0 * kf * (2.0 * kf - 1.0));
        u.push(next);
    }
    let v: Vec<f64> = u
        .iter()
        .enumerate()
        .map(|(k, uk)| {
            let kf = k as f64;
            if k == 0 {
                1.0
            } else {
                uk * (6.0 * kf + 1.0) / (1.0 - 6.0 * kf)
            }
        })
        .collect();
    let mut p = 0.0;
    let mut q = 0.0;
    let mut r = 0.0;
    let mut s = 0.0;
    let mut prev = f64::INFINITY;
    for k in 0..18usize {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let even = u[2 * k] / zeta.powi(2 * k as i32);
        if even.abs() > prev {
            break;
        }
        prev = even.abs();
        p += sign * even;
        q += sign * u[2 * k + 1] / zeta.powi(2 * k as i32 + 1);
        r += sign * v[2 * k] / zeta.powi(2 * k as i32);
        s += sign * v[2 * k + 1] / zeta.powi(2 * k as i32 + 1);
    }
    (p, q, r, s)
}

fn check_input(t: f64) -> Result<(), SpecFunError> {
    if !t.is_finite() {
        return Err(SpecFunError::Domain("airy argument must be finite".into()));
    }
    if t < NEG_LIMIT {
        return Err(SpecFunError::Range(format!(
            "airy argument {:e} beyond oscillatory expansion validity",
            t
        )));
    }
    Ok(())
}

/// Airy function Ai(t).
pub fn airy_ai(t: f64) -> Result<f64, SpecFunError> {
    check_input(t)?;
    if t.abs() <= SWITCH {
        let (c1, c2) = *constants();
        let (f, g) = series_fg(Dd::from_f64(t));
        return Ok(c1.mul(f).sub(c2.mul(g)).to_f64());
    }
    if t > 0.0 {
        let zeta = 2.0 / 3.0 * t.powf(1.5);
        let (su, _) = asymptotic_sums(zeta, true);
        Ok((-zeta).exp() / (2.0 * PI.sqrt() * t.powf(0.25)) * su)
    } else {
        let z = -t;
        let zeta = 2.0 / 3.0 * z.powf(1.5);
        let (p, q, _, _) = oscillatory_sums(zeta);
        let phase = zeta - PI / 4.0;
        Ok((phase.cos() * p + phase.sin() * q) / (PI.sqrt() * z.powf(0.25)))
    }
}

/// Derivative Ai'(t).
pub fn airy_ai_prime(t: f64) -> Result<f64, SpecFunError> {
    check_input(t)?;
    if t.abs() <= SWITCH {
        let (c1, c2) = *constants();
        let (fp, gp) = series_fg_prime(Dd::from_f64(t));
        return Ok(c1.mul(fp).sub(c2.mul(gp)).to_f64());
    }
    if t > 0.0 {
        let zeta = 2.0 / 3.0 * t.powf(1.5);
        let (_, sv) = asymptotic_sums(zeta, true);
        Ok(-t.powf(0.25) * (-zeta).exp() / (2.0 * PI.sqrt()) * sv)
    } else {
        let z = -t;
        let zeta = 2.0 / 3.0 * z.powf(1.5);
        let (_, _, r, s) = oscillatory_sums(zeta);
        let phase = zeta - PI / 4.0;
        Ok(z.powf(0.25) / PI.sqrt() * (phase.sin() * r - phase.cos() * s))
    }
}
