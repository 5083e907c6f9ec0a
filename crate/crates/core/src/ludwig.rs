//! The mixed-type eikonal system near a fold caustic: cubic phase ansatz,
//! characteristic classification by the discriminant, the uniform Airy field
//! on the lit side, and evanescent fields in the caustic shadow.
//!
//! Coordinates are the geodesic boundary pair (u, v): u is the tangential
//! eikonal coordinate, v the normal one. The sign of v selects the regime:
//! v > 0 is the lit (hyperbolic) side, v = 0 the caustic itself (parabolic),
//! v < 0 the shadow (elliptic) side, where the phase turns complex.

use crate::specfun::{airy_ai, airy_ai_prime, SpecFunError};
use num_complex::Complex64;
use std::fmt;

/// Gradient magnitudes below this are treated as degenerate in the
/// generalized Cauchy-Riemann residual.
const GRAD_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum LudwigError {
    Domain(String),
    /// Characteristic classification is undefined where the (u,v) Jacobian
    /// vanishes.
    DegenerateJacobian(f64),
    /// |grad v| ~ 0 somewhere on the grid of a Cauchy-Riemann check.
    DegenerateGradient { i: usize, j: usize },
    /// Airy evaluation failed underneath the uniform field.
    SpecFun(SpecFunError),
}

impl fmt::Display for LudwigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LudwigError::Domain(msg) => write!(f, "domain error: {}", msg),
            LudwigError::DegenerateJacobian(j) => {
                write!(f, "classification undefined at |J| = {:e}", j)
            }
            LudwigError::DegenerateGradient { i, j } => {
                write!(f, "vanishing |grad v| at grid node ({}, {})", i, j)
            }
            LudwigError::SpecFun(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for LudwigError {}

impl From<SpecFunError> for LudwigError {
    fn from(e: SpecFunError) -> Self {
        LudwigError::SpecFun(e)
    }
}

/// Boundary coordinates of a field point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryCoords {
    pub u: f64,
    pub v: f64,
}

/// Characteristic type of the eikonal system at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegimeTag {
    Hyperbolic,
    Parabolic,
    Elliptic,
}

/// Classification result: the tag together with the discriminant v J^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CausticRegime {
    pub tag: RegimeTag,
    pub discriminant: f64,
}

/// A sampled uniform field value with its two branch phases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub coords: BoundaryCoords,
    pub phi_plus: Complex64,
    pub phi_minus: Complex64,
    pub psi: Complex64,
}

/// Cubic phase ansatz u + v xi - xi^3/3 parametrizing the folded Lagrangian
/// manifold near the caustic.
pub fn phase_function(u: f64, v: f64, xi: f64) -> f64 {
    u + v * xi - xi * xi * xi / 3.0
}

/// The two stationary-branch phases of the cubic ansatz. Real pair
/// u +- (2/3) v^{3/2} on the lit side; complex-conjugate pair
/// u -+ i (2/3)(-v)^{3/2} in the shadow.
pub fn branch_phases(u: f64, v: f64) -> (Complex64, Complex64) {
    if v >= 0.0 {
        let split = 2.0 / 3.0 * v.powf(1.5);
        (
            Complex64::new(u + split, 0.0),
            Complex64::new(u - split, 0.0),
        )
    } else {
        let split = 2.0 / 3.0 * (-v).powf(1.5);
        (Complex64::new(u, -split), Complex64::new(u, split))
    }
}

/// Classify the characteristic regime from v and the (u,v)->(r,theta)
/// Jacobian. The discriminant is v J^2; |J| <= tol is degenerate.
pub fn classify_regime(v: f64, jac: f64, tol: f64) -> Result<CausticRegime, LudwigError> {
    if jac.abs() <= tol {
        return Err(LudwigError::DegenerateJacobian(jac));
    }
    let discriminant = v * jac * jac;
    let tag = if discriminant.abs() < tol {
        RegimeTag::Parabolic
    } else if discriminant > 0.0 {
        RegimeTag::Hyperbolic
    } else {
        RegimeTag::Elliptic
    };
    Ok(CausticRegime { tag, discriminant })
}

/// Uniform field near a fold caustic:
/// e^{iku} [A0 k^{-1/3} Ai(-k^{2/3} v) + A1 (i k^{2/3})^{-1} Ai'(-k^{2/3} v)].
pub fn cful_field(
    u: f64,
    v: f64,
    k: f64,
    a0: Complex64,
    a1: Complex64,
) -> Result<Complex64, LudwigError> {
    if !(k > 0.0) {
        return Err(LudwigError::Domain(format!(
            "wavenumber must be positive, got {}",
            k
        )));
    }
    let arg = -k.powf(2.0 / 3.0) * v;
    let ai = airy_ai(arg)?;
    let aip = airy_ai_prime(arg)?;
    let carrier = Complex64::from_polar(1.0, k * u);
    let first = a0 * k.powf(-1.0 / 3.0) * ai;
    let second = a1 / (Complex64::i() * k.powf(2.0 / 3.0)) * aip;
    Ok(carrier * (first + second))
}

/// Assemble a full field sample (branch phases plus uniform field value).
pub fn field_sample(
    u: f64,
    v: f64,
    k: f64,
    a0: Complex64,
    a1: Complex64,
) -> Result<FieldSample, LudwigError> {
    let (phi_plus, phi_minus) = branch_phases(u, v);
    let psi = cful_field(u, v, k, a0, a1)?;
    Ok(FieldSample {
        coords: BoundaryCoords { u, v },
        phi_plus,
        phi_minus,
        psi,
    })
}

/// Normal coordinate v(r) < 0 in the shadow of the circular caustic r = 1:
/// the closed-form inversion of
/// -(2/3)(-v)^{3/2} = sqrt(1-r^2) - (1/2) ln[(1+sqrt(1-r^2))/(1-sqrt(1-r^2))].
pub fn shadow_v(r: f64) -> Result<f64, LudwigError> {
    if !(r > 0.0 && r < 1.0) {
        return Err(LudwigError::Domain(format!(
            "shadow coordinate requires 0 < r < 1, got {}",
            r
        )));
    }
    let s = (1.0 - r * r).sqrt();
    let rhs = 0.5 * ((1.0 + s) / (1.0 - s)).ln() - s;
    Ok(-(1.5 * rhs).powf(2.0 / 3.0))
}

/// Radial slope of `shadow_v`, from the defining relation (-v) v_r^2 =
/// 1/r^2 - 1 with the increasing-v sign.
pub fn shadow_v_slope(r: f64) -> Result<f64, LudwigError> {
    let v = shadow_v(r)?;
    Ok((1.0 / (r * r) - 1.0).sqrt() / (-v).sqrt())
}

/// Normal coordinate v(r) > 0 on the lit side r > 1 of the circular
/// caustic: (2/3) v^{3/2} = sqrt(r^2-1) - arccos(1/r).
pub fn lit_v(r: f64) -> Result<f64, LudwigError> {
    if !(r > 1.0) {
        return Err(LudwigError::Domain(format!(
            "lit-side coordinate requires r > 1, got {}",
            r
        )));
    }
    let rhs = (r * r - 1.0).sqrt() - (1.0 / r).acos();
    Ok((1.5 * rhs).powf(2.0 / 3.0))
}

/// Radial slope of `lit_v`, from v v_r^2 = 1 - 1/r^2.
pub fn lit_v_slope(r: f64) -> Result<f64, LudwigError> {
    let v = lit_v(r)?;
    Ok((1.0 - 1.0 / (r * r)).sqrt() / v.sqrt())
}

/// Asymptotic lit-side coordinate (2/3) v^{3/2} ~ r, valid far from the
/// caustic; used by the unit-gradient check at large radius.
pub fn lit_v_asymptotic(r: f64) -> f64 {
    (1.5 * r).powf(2.0 / 3.0)
}

/// Evanescent damping factor ((1-y)/(1+y))^{k/2} e^{k y} of the shadow
/// field; equals 1 at y = 0 (the caustic) and decays to 0 as y -> 1.
pub fn evanescent_factor(y: f64, k: f64) -> Result<f64, LudwigError> {
    if !(k > 0.0) {
        return Err(LudwigError::Domain(format!(
            "wavenumber must be positive, got {}",
            k
        )));
    }
    if !(0.0..1.0).contains(&y) {
        return Err(LudwigError::Domain(format!(
            "evanescent factor requires 0 <= y < 1, got {} (limit value 0 at y = 1)",
            y
        )));
    }
    Ok(((1.0 - y) / (1.0 + y)).powf(k / 2.0) * (k * y).exp())
}

/// Which side of the unit circle the shadow field is mapped on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShadowMapping {
    /// y^2 = 1 - r^2, 0 < r <= 1: the disk interior.
    Interior,
    /// y^2 = 1 - 1/r^2, r >= 1: the disk interior mapped outside.
    Exterior,
}

/// Evanescent shadow field psi_S = k^{-1/2} e^{i k theta0} X(y), with
/// X the evanescent factor and unit slowly-varying amplitude.
pub fn shadow_field(
    r: f64,
    theta0: f64,
    k: f64,
    mapping: ShadowMapping,
) -> Result<Complex64, LudwigError> {
    let y = match mapping {
        ShadowMapping::Interior => {
            if !(r > 0.0 && r <= 1.0) {
                return Err(LudwigError::Domain(format!(
                    "interior mapping requires 0 < r <= 1, got {}",
                    r
                )));
            }
            (1.0 - r * r).sqrt()
        }
        ShadowMapping::Exterior => {
            if !(r >= 1.0) {
                return Err(LudwigError::Domain(format!(
                    "exterior mapping requires r >= 1, got {}",
                    r
                )));
            }
            (1.0 - 1.0 / (r * r)).sqrt()
        }
    };
    let damping = if y >= 1.0 {
        0.0
    } else {
        evanescent_factor(y, k)?
    };
    Ok(Complex64::from_polar(1.0, k * theta0) * damping / k.sqrt())
}

/// Max residual of the generalized Cauchy-Riemann pair
/// u_r = rho v_theta / r, u_theta = -rho r v_r (rho = |grad u|/|grad v|)
/// over the interior of an (r, theta) grid, gradients by centered
/// differences. `u` and `v` are row-major over (r index, theta index).
pub fn check_generalized_cr(
    r_vals: &[f64],
    theta_vals: &[f64],
    u: &[f64],
    v: &[f64],
) -> Result<f64, LudwigError> {
    let nr = r_vals.len();
    let nt = theta_vals.len();
    if nr < 3 || nt < 3 {
        return Err(LudwigError::Domain(
            "grid must be at least 3x3 for centered differences".into(),
        ));
    }
    if u.len() != nr * nt || v.len() != nr * nt {
        return Err(LudwigError::Domain(format!(
            "field length {} / {} does not match grid {}x{}",
            u.len(),
            v.len(),
            nr,
            nt
        )));
    }
    let at = |f: &[f64], i: usize, j: usize| f[i * nt + j];
    let mut max_residual: f64 = 0.0;
    for i in 1..nr - 1 {
        for j in 1..nt - 1 {
            let dr = r_vals[i + 1] - r_vals[i - 1];
            let dt = theta_vals[j + 1] - theta_vals[j - 1];
            let u_r = (at(u, i + 1, j) - at(u, i - 1, j)) / dr;
            let u_t = (at(u, i, j + 1) - at(u, i, j - 1)) / dt;
            let v_r = (at(v, i + 1, j) - at(v, i - 1, j)) / dr;
            let v_t = (at(v, i, j + 1) - at(v, i, j - 1)) / dt;
            let r = r_vals[i];
            let grad_u = (u_r * u_r + u_t * u_t / (r * r)).sqrt();
            let grad_v = (v_r * v_r + v_t * v_t / (r * r)).sqrt();
            if grad_v < GRAD_TOL {
                return Err(LudwigError::DegenerateGradient { i, j });
            }
            let rho = grad_u / grad_v;
            let residual = (u_r - rho * v_t / r).abs() + (u_t + rho * r * v_r).abs();
            max_residual = max_residual.max(residual);
        }
    }
    Ok(max_residual)
}
