//! Gamma function of complex argument (Lanczos approximation, g = 7, n = 9).

use num_complex::Complex64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// sin(pi z) with the argument reduced to the nearest integer first, so the
/// value stays accurate near the zeros (plain sin(pi*n) carries the rounding
/// of pi*n, which is fatal when a near-pole quotient amplifies it).
pub fn sin_pi(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let d = Complex64::new(z.re - n, z.im);
    let s = (Complex64::new(PI, 0.0) * d).sin();
    if (n as i64).rem_euclid(2) == 0 {
        s
    } else {
        -s
    }
}

/// log Gamma(z); the imaginary part is only defined modulo 2*pi, which is
/// fine because every consumer exponentiates.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Reflection Gamma(z) Gamma(1-z) = pi / sin(pi z).
        let pi_c = Complex64::new(PI, 0.0);
        (pi_c / sin_pi(z)).ln() - ln_gamma(Complex64::new(1.0, 0.0) - z)
    } else {
        let zm = z - 1.0;
        let mut acc = Complex64::new(LANCZOS_COEFFS[0], 0.0);
        for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
            acc += c / (zm + i as f64);
        }
        let t = zm + LANCZOS_G + 0.5;
        0.5 * (2.0 * PI).ln() + (zm + 0.5) * t.ln() - t + acc.ln()
    }
}

/// Gamma(z) itself.
pub fn gamma(z: Complex64) -> Complex64 {
    ln_gamma(z).exp()
}
