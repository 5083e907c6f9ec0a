//! Special-function kernel: Airy Ai/Ai', Bessel and first-kind Hankel
//! functions of complex order, complex-order root finding, and Legendre
//! functions of complex degree.
//!
//! Everything here is pure and deterministic. The series kernels accumulate
//! in double-double internally so that values come out within ~half an ulp,
//! which the finite-difference identity tests depend on.

mod airy;
mod bessel;
mod gamma;
mod legendre;
pub(crate) mod quad;

pub use airy::{airy_ai, airy_ai_prime};
pub use bessel::{bessel_j, hankel1, hankel_root, hankel_root_seed, HankelRoot};
pub use gamma::{gamma, ln_gamma, sin_pi};
pub use legendre::{legendre_p, legendre_projection};

use num_complex::Complex64;
use std::fmt;

/// Errors from special-function evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum SpecFunError {
    /// Input outside the function's domain.
    Domain(String),
    /// Argument beyond the validity range of the available expansions.
    Range(String),
    /// Series cancellation or truncation ate the requested accuracy.
    /// Carries the partial result when one is meaningful.
    PrecisionLoss { partial: Option<Complex64> },
    /// Root iteration did not converge; carries the last iterate.
    NoConvergence { last: Complex64, residual: f64 },
    /// Evaluation too close to a pole of the expression.
    PoleProximity,
    /// Root index outside the supported (validated) range.
    UnsupportedOrder(u32),
}

impl fmt::Display for SpecFunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecFunError::Domain(msg) => write!(f, "domain error: {}", msg),
            SpecFunError::Range(msg) => write!(f, "range error: {}", msg),
            SpecFunError::PrecisionLoss { .. } => {
                write!(f, "precision loss: series cancellation beyond tolerance")
            }
            SpecFunError::NoConvergence { last, residual } => write!(
                f,
                "no convergence: last iterate {} with residual {:.3e}",
                last, residual
            ),
            SpecFunError::PoleProximity => write!(f, "evaluation at or near a pole"),
            SpecFunError::UnsupportedOrder(m) => {
                write!(f, "root index m={} outside the validated range 1..=10", m)
            }
        }
    }
}

impl std::error::Error for SpecFunError {}
