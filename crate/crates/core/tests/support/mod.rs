//! Independent numerical oracles for the acceptance suite. Nothing here may
//! call the implementation paths it checks: the Airy oracle integrates the
//! cosine representation directly, and the projection oracle integrates
//! P_lambda(-z) P_l(z) by composite Gauss-Legendre panels plus an exact
//! treatment of the endpoint log singularity.

// each integration-test target compiles its own copy and uses a subset
#![allow(dead_code)]

use num_complex::Complex64;
use std::f64::consts::PI;

// ---------------------------------------------------------------------------
// Gauss-Legendre rules (test-local copy, independent of the shipping one)
// ---------------------------------------------------------------------------

pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = x;
            for j in 2..=n {
                let jf = j as f64;
                let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Integrate f over [lo, hi] with an n-point rule.
pub fn integrate_panel<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, rule: &(Vec<f64>, Vec<f64>)) -> f64 {
    let half = 0.5 * (hi - lo);
    let mid = 0.5 * (hi + lo);
    rule.0
        .iter()
        .zip(&rule.1)
        .map(|(x, w)| w * half * f(mid + half * x))
        .sum()
}

// ---------------------------------------------------------------------------
// Airy oracle: high-resolution quadrature of the cosine representation
// Ai(t) = (1/pi) int_0^inf cos(s^3/3 + t s) ds
// ---------------------------------------------------------------------------

/// Oscillatory head [0, s_max] in phase-bounded panels, then an integration-
/// by-parts tail with three boundary terms (O(1e-12) at s_max = 30).
pub fn airy_ai_oracle(t: f64) -> f64 {
    let phase = |s: f64| s * s * s / 3.0 + t * s;
    let f = |s: f64| phase(s).cos();
    let s_max = 30.0;
    let rule = gauss_legendre(16);
    let mut acc = 0.0;
    let mut s = 0.0;
    while s < s_max {
        let dphi = s * s + t.abs().max(1.0);
        let step = (0.5 * PI / dphi).min(0.2);
        let hi = (s + step).min(s_max);
        acc += integrate_panel(&f, s, hi, &rule);
        s = hi;
    }
    // tail: phi' = s^2 + t
    let p = s_max * s_max + t;
    let (sin_p, cos_p) = phase(s_max).sin_cos();
    let g = 2.0 / p.powi(3) - 12.0 * s_max * s_max / p.powi(4);
    let tail = -sin_p / p + 2.0 * s_max * cos_p / p.powi(3) - sin_p * g / p;
    (acc + tail) / PI
}

/// Ai'(t) = -(1/pi) int_0^inf s sin(s^3/3 + t s) ds, same treatment.
pub fn airy_ai_prime_oracle(t: f64) -> f64 {
    let phase = |s: f64| s * s * s / 3.0 + t * s;
    let f = |s: f64| s * phase(s).sin();
    let s_max = 30.0;
    let rule = gauss_legendre(16);
    let mut acc = 0.0;
    let mut s = 0.0;
    while s < s_max {
        let dphi = s * s + t.abs().max(1.0);
        let step = (0.5 * PI / dphi).min(0.2);
        let hi = (s + step).min(s_max);
        acc += integrate_panel(&f, s, hi, &rule);
        s = hi;
    }
    let p = s_max * s_max + t;
    let (sin_p, cos_p) = phase(s_max).sin_cos();
    let w = 1.0 / p - 2.0 * s_max * s_max / (p * p);
    let q = -8.0 * s_max / p.powi(3) + 12.0 * s_max.powi(3) / p.powi(4);
    let tail = s_max * cos_p / p - sin_p * w / p - cos_p * q / p;
    -(acc + tail) / PI
}

// ---------------------------------------------------------------------------
// Complex digamma (for the projection oracle's endpoint expansion)
// ---------------------------------------------------------------------------

pub fn digamma(z: Complex64) -> Complex64 {
    // push Re(z) above 10 by the recurrence psi(z) = psi(z+1) - 1/z, then
    // use the Stirling series.
    let mut z = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while z.re < 10.0 {
        shift -= 1.0 / z;
        z += 1.0;
    }
    // Bernoulli B2k / (2k z^{2k})
    const COEFFS: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 120.0,
        1.0 / 252.0,
        -1.0 / 240.0,
        1.0 / 132.0,
        -691.0 / 32760.0,
        1.0 / 12.0,
    ];
    let inv2 = 1.0 / (z * z);
    let mut series = Complex64::new(0.0, 0.0);
    let mut power = inv2;
    for c in COEFFS {
        series += c * power;
        power *= inv2;
    }
    z.ln() - 0.5 / z - series + shift
}

// ---------------------------------------------------------------------------
// P_lambda by its hypergeometric series (oracle-local, plain f64: the oracle
// grid keeps |lambda| small where cancellation is negligible)
// ---------------------------------------------------------------------------

pub fn legendre_p_series(lambda: Complex64, z: f64) -> Complex64 {
    let x = 0.5 * (1.0 - z);
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..200_000u32 {
        let kf = f64::from(k);
        let ratio = (kf - lambda) * (kf + 1.0 + lambda) / ((kf + 1.0) * (kf + 1.0));
        term = term * ratio * x;
        sum += term;
        if term.norm() < 1e-17 * sum.norm() {
            break;
        }
    }
    sum
}

/// Legendre polynomial by the three-term recurrence.
pub fn legendre_poly(ell: u32, z: f64) -> f64 {
    let mut p0 = 1.0;
    if ell == 0 {
        return p0;
    }
    let mut p1 = z;
    for j in 2..=ell {
        let jf = f64::from(j);
        let p2 = ((2.0 * jf - 1.0) * z * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    p1
}

// ---------------------------------------------------------------------------
// Projection oracle: (1/2) int_{-1}^{1} P_lambda(-z) P_l(z) dz by composite
// 64-node Gauss-Legendre panels dyadically graded toward z = 1, plus exact
// term-by-term integration of the endpoint log expansion on the last sliver.
// ---------------------------------------------------------------------------

pub fn projection_quadrature(lambda: Complex64, ell: u32) -> Complex64 {
    let rule = gauss_legendre(64);
    // panel breakpoints: coarse left part, dyadic grading into 1 - 2^-6
    let u0 = 2f64.powi(-7);
    let mut breaks = vec![-1.0, -0.5, 0.0];
    for j in 1..=6 {
        breaks.push(1.0 - 2f64.powi(-j));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for pair in breaks.windows(2) {
        let (lo, hi) = (pair[0], pair[1]);
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        for (x, w) in rule.0.iter().zip(&rule.1) {
            let z = mid + half * x;
            acc += w * half * 0.5 * legendre_p_series(lambda, -z) * legendre_poly(ell, z);
        }
    }
    // sliver [1 - 2 u0, 1]: z = 1 - 2u, integral = int_0^{u0} P_lam(-z) P_l(z) du
    // with P_lambda(-z) = -(sin(pi lambda)/pi) sum_k t_k (d_k - ln u) u^k.
    let mut t_k = Complex64::new(1.0, 0.0);
    let sin_factor = -(PI * lambda).sin() / PI;
    // shifted Legendre coefficients: P_l(1 - 2u) = sum_j p_j u^j
    let mut p_coeffs = vec![Complex64::new(1.0, 0.0)];
    {
        let mut c = Complex64::new(1.0, 0.0);
        let ellf = f64::from(ell);
        for j in 0..ell {
            let jf = f64::from(j);
            c = c * ((jf - ellf) * (jf + ellf + 1.0)) / ((jf + 1.0) * (jf + 1.0));
            p_coeffs.push(c);
        }
    }
    let a_m = |m: i32| u0.powi(m + 1) / f64::from(m + 1); // int u^m du
    let b_m = |m: i32| {
        // int u^m ln u du
        u0.powi(m + 1) * (u0.ln() / f64::from(m + 1) - 1.0 / (f64::from(m + 1) * f64::from(m + 1)))
    };
    let mut sliver = Complex64::new(0.0, 0.0);
    for k in 0..25i32 {
        let kf = f64::from(k);
        if k > 0 {
            let ratio =
                ((kf - 1.0) - lambda) * (kf + lambda) / (kf * kf);
            t_k = t_k * ratio;
        }
        let d_k = 2.0 * digamma(Complex64::new(kf + 1.0, 0.0))
            - digamma(kf - lambda)
            - digamma(kf + 1.0 + lambda);
        for (j, p_j) in p_coeffs.iter().enumerate() {
            let m = k + j as i32;
            sliver += t_k * p_j * (d_k * a_m(m) - b_m(m));
        }
    }
    acc + sin_factor * sliver
}
