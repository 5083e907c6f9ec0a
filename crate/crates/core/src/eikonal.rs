//! Eikonal and transport solutions on the sphere: surface-wave amplitudes,
//! quarter-turn phase shifts at the conjugate points, half-integer
//! quantization of the angular momentum, bound-state wavefunctions, and the
//! rotational line extrapolated to negative energies.

use crate::geometry::Orientation;
use std::f64::consts::PI;
use std::fmt;

/// Amplitudes blow up at the conjugate points theta = n pi; below this the
/// approximation is declared invalid instead of returning huge numbers.
const CONJUGATE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum EikonalError {
    /// Evaluation within the conjugate-point band |sin theta| < 1e-12.
    ConjugatePoint(f64),
}

impl fmt::Display for EikonalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EikonalError::ConjugatePoint(t) => write!(
                f,
                "eikonal amplitude invalid at theta = {} (conjugate point)",
                t
            ),
        }
    }
}

impl std::error::Error for EikonalError {}

/// An angular surface wave with quantized momentum L = l + 1/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularWave {
    pub ell: u32,
    /// Semiclassical angular momentum, always ell + 1/2.
    pub momentum: f64,
    /// Free normalization constant (unity by convention).
    pub normalization: f64,
}

impl AngularWave {
    pub fn new(ell: u32) -> Self {
        AngularWave {
            ell,
            momentum: quantized_momentum(ell),
            normalization: 1.0,
        }
    }
}

/// Transport amplitude |sin theta|^{-1/2} of a wave running along a great
/// circle (the free constant is the caller's).
pub fn eikonal_amplitude(theta: f64) -> Result<f64, EikonalError> {
    let s = theta.sin().abs();
    if s < CONJUGATE_TOL {
        return Err(EikonalError::ConjugatePoint(theta));
    }
    Ok(1.0 / s.sqrt())
}

/// Phase shift picked up at one crossing of a conjugate point: -pi/2 when
/// travelling counterclockwise, +pi/2 clockwise.
pub fn apply_crossing_shift(phase: f64, orientation: Orientation) -> f64 {
    match orientation {
        Orientation::Ccw => phase - PI / 2.0,
        Orientation::Cw => phase + PI / 2.0,
    }
}

/// Quantized angular momentum L = l + 1/2 (hbar = 1).
pub fn quantized_momentum(ell: u32) -> f64 {
    f64::from(ell) + 0.5
}

/// Single-valuedness ledger for one full counterclockwise circuit, in units
/// of pi/2: the amplitude-log variation contributes -2, the phase variation
/// 4 l + 2, and the right-hand side -4 l. Zero means the circuit closes.
pub fn single_valuedness_defect(ell: u32) -> i64 {
    let l = i64::from(ell);
    -2 + (4 * l + 2) - 4 * l
}

/// Asymptotic bound-state wavefunction on the sphere,
/// |sin(theta - pi)|^{-1/2} cos[(l + 1/2)(theta - pi) - pi/4],
/// with the normalization constant set to one.
pub fn bound_state_wavefunction(ell: u32, theta: f64) -> Result<f64, EikonalError> {
    let shifted = theta - PI;
    let s = shifted.sin().abs();
    if s < CONJUGATE_TOL {
        return Err(EikonalError::ConjugatePoint(theta));
    }
    let momentum = quantized_momentum(ell);
    Ok((momentum * shifted - PI / 4.0).cos() / s.sqrt())
}

/// The rotational line l(l+1) = 2 I E + c0 linking partial wave and energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationalLine {
    /// Moment of inertia I of the two-particle system.
    pub inertia: f64,
    /// Dimensionless intercept c0.
    pub intercept: f64,
}

impl RotationalLine {
    pub fn new(inertia: f64, intercept: f64) -> Self {
        assert!(inertia > 0.0, "moment of inertia must be positive");
        RotationalLine {
            inertia,
            intercept,
        }
    }

    /// Energy on the line at continuous angular momentum alpha:
    /// E = (alpha(alpha+1) - c0) / (2 I). Negative values are the
    /// extrapolated bound states.
    pub fn energy(&self, alpha: f64) -> f64 {
        (alpha * (alpha + 1.0) - self.intercept) / (2.0 * self.inertia)
    }

    /// Inverse of `energy`: the nonnegative alpha with alpha(alpha+1) =
    /// 2 I E + c0.
    pub fn alpha_at_energy(&self, energy: f64) -> f64 {
        let rhs = 2.0 * self.inertia * energy + self.intercept;
        (-1.0 + (1.0 + 4.0 * rhs).sqrt()) / 2.0
    }

    /// Bound/resonance energy of the integer partial wave ell.
    pub fn level(&self, ell: u32) -> f64 {
        self.energy(f64::from(ell))
    }
}

/// Energy on a rotational line at continuous angular momentum alpha.
pub fn rotational_energy(line: &RotationalLine, alpha: f64) -> f64 {
    line.energy(alpha)
}
