//! Grazing-ray geometry on the spherical obstacle: ray parametrization, the
//! ray Jacobian and its caustic zero set, and winding/crossing bookkeeping
//! for trajectories around the symmetry axis.

use num_complex::Complex64;
use std::f64::consts::{PI, TAU};
use std::fmt;

/// The spherical obstacle together with the wave parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObstacleSpec {
    /// Obstacle radius R.
    pub radius: f64,
    /// Wavenumber k.
    pub wavenumber: f64,
    /// Leakage rate of the surface ray tube (per unit arc length over R).
    pub gamma0: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeometryError(pub String);

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "geometry error: {}", self.0)
    }
}

impl std::error::Error for GeometryError {}

impl ObstacleSpec {
    pub fn new(radius: f64, wavenumber: f64, gamma0: f64) -> Result<Self, GeometryError> {
        if !(radius > 0.0) {
            return Err(GeometryError(format!("radius must be > 0, got {}", radius)));
        }
        if !(wavenumber > 0.0) {
            return Err(GeometryError(format!(
                "wavenumber must be > 0, got {}",
                wavenumber
            )));
        }
        if !(gamma0 >= 0.0) {
            return Err(GeometryError(format!(
                "leakage rate must be >= 0, got {}",
                gamma0
            )));
        }
        Ok(ObstacleSpec {
            radius,
            wavenumber,
            gamma0,
        })
    }

    /// Geometric pole degree nu0 = R(k + i gamma0): the surface-wave mode
    /// closest to the real axis, before any root refinement.
    pub fn nu0_geometric(&self) -> Complex64 {
        Complex64::new(self.radius * self.wavenumber, self.radius * self.gamma0)
    }
}

/// Sense of travel around the obstacle, seen in the meridian plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Counterclockwise.
    Ccw,
    /// Clockwise.
    Cw,
}

/// A surface ray leaving toward the scattering angle after some number of
/// full turns around the obstacle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceRay {
    pub orientation: Orientation,
    /// Completed full turns before emerging.
    pub turns: u32,
    /// Total surface angle travelled (unreduced; may exceed 2 pi).
    pub theta0: f64,
    /// Scattering angle in (0, pi).
    pub theta_s: f64,
}

impl SurfaceRay {
    /// Build the ray for a given scattering angle; theta0 follows the
    /// orientation-dependent relation between surface and scattering angles.
    pub fn from_scattering_angle(
        orientation: Orientation,
        turns: u32,
        theta_s: f64,
    ) -> Result<Self, GeometryError> {
        if !(theta_s > 0.0 && theta_s < PI) {
            return Err(GeometryError(format!(
                "scattering angle must lie strictly inside (0, pi), got {}",
                theta_s
            )));
        }
        let theta0 = match orientation {
            Orientation::Ccw => theta_s + TAU * f64::from(turns),
            Orientation::Cw => TAU - theta_s + TAU * f64::from(turns),
        };
        Ok(SurfaceRay {
            orientation,
            turns,
            theta0,
            theta_s,
        })
    }

    /// Winding number of the loop this ray closes with the minimal geodesic.
    pub fn winding(&self) -> i64 {
        match self.orientation {
            Orientation::Ccw => i64::from(self.turns),
            Orientation::Cw => -i64::from(self.turns) - 1,
        }
    }

    /// Number of axial-caustic crossings along the ray.
    pub fn crossing_count(&self) -> u64 {
        winding_to_crossing(self.winding())
    }

    /// Accumulated crossing phase (radians), one -pi/2 or +pi/2 per crossing.
    pub fn accumulated_phase(&self) -> f64 {
        crossing_phase(self.winding())
    }
}

/// A point along a diffracted ray, plus its ray parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RayPoint {
    /// Cartesian position; the z axis is parallel to the incoming beam.
    pub position: [f64; 3],
    /// Arc-length parameter along the straight segment from departure.
    pub tau: f64,
}

/// Position of the diffracted ray leaving the sphere at surface angle
/// theta0, azimuth phi0, after straight travel tau.
pub fn ray_point(theta0: f64, phi0: f64, tau: f64, spec: &ObstacleSpec) -> RayPoint {
    debug_assert!(tau >= 0.0, "ray parameter must be nonnegative");
    let r = spec.radius;
    let (s0, c0) = theta0.sin_cos();
    let (sp, cp) = phi0.sin_cos();
    RayPoint {
        position: [
            -r * c0 * cp + tau * s0 * cp,
            r * c0 * sp - tau * s0 * sp,
            r * s0 + tau * c0,
        ],
        tau,
    }
}

/// Jacobian of the (theta0, phi0, tau) -> (x, y, z) ray map, up to the
/// azimuthal factor: tau (R cos theta0 - tau sin theta0).
pub fn ray_jacobian(theta0: f64, tau: f64, spec: &ObstacleSpec) -> f64 {
    tau * (spec.radius * theta0.cos() - tau * theta0.sin())
}

/// Which piece of the caustic set a ray point belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausticClass {
    /// tau = 0: the obstacle surface, envelope of the diffracted rays.
    SurfaceCaustic,
    /// tau = R cot(theta0) with theta0 in [0, pi]: shadow-side semiaxis.
    AxialCausticPlus,
    /// tau = R cot(theta0) with theta0 in [pi, 2 pi]: lit-side semiaxis.
    AxialCausticMinus,
    /// Jacobian bounded away from zero.
    Regular,
}

/// Classify a ray point against the caustic set within tolerance `tol`.
pub fn classify_caustic_point(
    theta0: f64,
    tau: f64,
    spec: &ObstacleSpec,
    tol: f64,
) -> CausticClass {
    debug_assert!(tol > 0.0);
    if tau.abs() < tol {
        return CausticClass::SurfaceCaustic;
    }
    let reduced = theta0.rem_euclid(TAU);
    if reduced.sin() != 0.0 {
        let axial_tau = spec.radius * reduced.cos() / reduced.sin();
        if (tau - axial_tau).abs() < tol {
            return if reduced <= PI {
                CausticClass::AxialCausticPlus
            } else {
                CausticClass::AxialCausticMinus
            };
        }
    }
    CausticClass::Regular
}

/// Crossing number of a geodesic loop from its winding number: the bijection
/// n >= 0 -> 2n+1, n < 0 -> -2n between winding integers and positive counts.
pub fn winding_to_crossing(n: i64) -> u64 {
    if n >= 0 {
        (2 * n + 1) as u64
    } else {
        (-2 * n) as u64
    }
}

/// Total crossing phase shift for winding number n: each counterclockwise
/// crossing contributes -pi/2, each clockwise one +pi/2.
pub fn crossing_phase(n: i64) -> f64 {
    if n >= 0 {
        -(PI / 2.0) * (2 * n + 1) as f64
    } else {
        (PI / 2.0) * (-2 * n) as f64
    }
}
