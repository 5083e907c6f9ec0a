//! Creeping-wave scattering amplitudes and orbiting resonances.
//!
//! The amplitude of a surface wave that leaves the obstacle after bending
//! around it carries the geometric spread 1/sqrt(sin theta_s), one quarter
//! turn of phase per axial-caustic crossing, and the leakage damping
//! e^{-gamma0 R theta}. Summing all turn numbers geometrically produces the
//! resummed closed form, whose poles in the complex angular momentum plane
//! are the orbiting resonances.

use crate::eikonal::RotationalLine;
use crate::geometry::ObstacleSpec;
use crate::specfun::{legendre_p, sin_pi, SpecFunError};
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_4, PI, TAU};
use std::fmt;

/// |cos theta0| below this is a grazing singularity of the leaky transport.
const COS_TOL: f64 = 1e-12;
/// |cos pi nu0| below this is a physical resonance pole of the resummation.
const POLE_TOL: f64 = 1e-12;
/// Forward angles below this are outside the validity of the Legendre form.
const THETA_MIN: f64 = 0.1;
/// Bisection tolerance in energy for resonance location.
const BISECTION_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub enum ScatteringError {
    Domain(String),
    /// Transport amplitude evaluated at a grazing singularity.
    Singularity(String),
    /// Resummation evaluated at a resonance pole cos(pi nu0) = 0.
    PoleProximity(String),
    /// Legendre amplitude requested in the forward region where the
    /// representation fails.
    ForwardValidity(f64),
    /// Internal consistency broken (e.g. arcsin argument drifted past 1).
    Consistency(String),
    SpecFun(SpecFunError),
}

impl fmt::Display for ScatteringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScatteringError::Domain(m) => write!(f, "domain error: {}", m),
            ScatteringError::Singularity(m) => write!(f, "singular amplitude: {}", m),
            ScatteringError::PoleProximity(m) => write!(f, "resonance pole: {}", m),
            ScatteringError::ForwardValidity(t) => write!(
                f,
                "legendre amplitude invalid forward of theta_s = {} (got {})",
                THETA_MIN, t
            ),
            ScatteringError::Consistency(m) => write!(f, "consistency error: {}", m),
            ScatteringError::SpecFun(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for ScatteringError {}

impl From<SpecFunError> for ScatteringError {
    fn from(e: SpecFunError) -> Self {
        ScatteringError::SpecFun(e)
    }
}

/// Complex angular momentum lambda = alpha + i beta of the leading pole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMomentum {
    pub alpha: f64,
    pub beta: f64,
}

impl ComplexMomentum {
    pub fn new(alpha: f64, beta: f64) -> Self {
        ComplexMomentum { alpha, beta }
    }

    /// lambda = nu0 - 1/2 for a pole degree nu0.
    pub fn from_nu0(nu0: Complex64) -> Self {
        ComplexMomentum {
            alpha: nu0.re - 0.5,
            beta: nu0.im,
        }
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.alpha, self.beta)
    }
}

fn check_theta_s(theta_s: f64) -> Result<(), ScatteringError> {
    if !(theta_s > 0.0 && theta_s < PI) {
        return Err(ScatteringError::Domain(format!(
            "scattering angle must lie strictly inside (0, pi), got {}",
            theta_s
        )));
    }
    Ok(())
}

/// Transport amplitude of the surface ray with leakage,
/// |cos theta0|^{-1/2} e^{-gamma0 R theta0} (unit constant).
pub fn leaky_amplitude(theta0: f64, spec: &ObstacleSpec) -> Result<f64, ScatteringError> {
    let c = theta0.cos().abs();
    if c < COS_TOL {
        return Err(ScatteringError::Singularity(format!(
            "leaky amplitude singular at theta0 = {} (cos vanishes)",
            theta0
        )));
    }
    Ok((-spec.gamma0 * spec.radius * theta0).exp() / c.sqrt())
}

/// Zero-turn amplitudes with an explicit pole degree nu0.
pub fn single_turn_amplitudes_with(
    nu0: Complex64,
    theta_s: f64,
    c: Complex64,
) -> Result<(Complex64, Complex64), ScatteringError> {
    check_theta_s(theta_s)?;
    let root_sin = theta_s.sin().sqrt();
    let i = Complex64::i();
    // one counterclockwise crossing: phase e^{-i pi/2}
    let f_ccw = c * (-i) * (i * nu0 * theta_s).exp() / root_sin;
    // the clockwise ray crosses the axial caustic twice: (e^{+i pi/2})^2 = -1
    let f_cw = -c * (i * nu0 * (TAU - theta_s)).exp() / root_sin;
    Ok((f_ccw, f_cw))
}

/// Zero-turn amplitudes (counterclockwise, clockwise) of the creeping wave
/// at scattering angle theta_s, with nu0 = R(k + i gamma0).
pub fn single_turn_amplitudes(
    theta_s: f64,
    spec: &ObstacleSpec,
    c: Complex64,
) -> Result<(Complex64, Complex64), ScatteringError> {
    single_turn_amplitudes_with(spec.nu0_geometric(), theta_s, c)
}

/// Partial sum over turn numbers 0..=turns with an explicit pole degree.
pub fn multi_turn_amplitude_with(
    nu0: Complex64,
    theta_s: f64,
    c: Complex64,
    turns: u32,
) -> Result<Complex64, ScatteringError> {
    let (f_ccw, f_cw) = single_turn_amplitudes_with(nu0, theta_s, c)?;
    let base = f_ccw + f_cw;
    // (-1)^n e^{2 pi i n nu0}: two caustic crossings per extra turn give the
    // sign, the extra circumference gives the damped phase.
    let per_turn = -(Complex64::i() * TAU * nu0).exp();
    let mut factor = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for _ in 0..=turns {
        sum += factor;
        factor *= per_turn;
    }
    Ok(base * sum)
}

/// Partial sum over turn numbers 0..=turns of the orbiting contributions.
/// With gamma0 = 0 the series does not damp; the partial sum is still
/// returned and `multi_turn_tail_bound` reports no bound.
pub fn multi_turn_amplitude(
    theta_s: f64,
    spec: &ObstacleSpec,
    c: Complex64,
    turns: u32,
) -> Result<Complex64, ScatteringError> {
    multi_turn_amplitude_with(spec.nu0_geometric(), theta_s, c, turns)
}

/// Geometric tail bound |full - partial(N)| <= |first| q^{N+1}/(1-q) with
/// q = e^{-2 pi Im nu0}; None when the series does not converge (Im nu0 = 0).
pub fn multi_turn_tail_bound(
    nu0: Complex64,
    theta_s: f64,
    c: Complex64,
    turns: u32,
) -> Result<Option<f64>, ScatteringError> {
    let (f_ccw, f_cw) = single_turn_amplitudes_with(nu0, theta_s, c)?;
    if nu0.im <= 0.0 {
        return Ok(None);
    }
    let q = (-TAU * nu0.im).exp();
    Ok(Some(
        (f_ccw + f_cw).norm() * q.powi(turns as i32 + 1) / (1.0 - q),
    ))
}

/// Closed-form resummation of all turn numbers with an explicit pole degree:
/// -C e^{i pi/4} [e^{-i(nu0(pi - theta_s) - pi/4)} + e^{i(nu0(pi - theta_s) - pi/4)}]
///   / (2 cos(pi nu0) sqrt(sin theta_s)).
pub fn resummed_amplitude_with(
    nu0: Complex64,
    theta_s: f64,
    c: Complex64,
) -> Result<Complex64, ScatteringError> {
    check_theta_s(theta_s)?;
    let cos_pi_nu = cos_pi(nu0);
    if cos_pi_nu.norm() < POLE_TOL {
        return Err(ScatteringError::PoleProximity(format!(
            "cos(pi nu0) = {:e} at nu0 = {}",
            cos_pi_nu.norm(),
            nu0
        )));
    }
    let i = Complex64::i();
    let w = nu0 * (PI - theta_s) - FRAC_PI_4;
    let numerator = (-i * w).exp() + (i * w).exp();
    Ok(-c * Complex64::from_polar(1.0, FRAC_PI_4) * numerator
        / (2.0 * cos_pi_nu * theta_s.sin().sqrt()))
}

/// Closed-form resummation with nu0 = R(k + i gamma0).
pub fn resummed_amplitude(
    theta_s: f64,
    spec: &ObstacleSpec,
    c: Complex64,
) -> Result<Complex64, ScatteringError> {
    resummed_amplitude_with(spec.nu0_geometric(), theta_s, c)
}

/// Sum of resummed creeping-wave contributions over several surface-wave
/// modes (one refined Hankel root each). The root closest to the real axis
/// dominates backward; the others are strongly damped corrections. Single
/// mode is the default everywhere; this sum is for experimentation.
pub fn multi_mode_amplitude(
    nu_roots: &[Complex64],
    theta_s: f64,
    c: Complex64,
) -> Result<Complex64, ScatteringError> {
    let mut total = Complex64::new(0.0, 0.0);
    for &nu in nu_roots {
        total += resummed_amplitude_with(nu, theta_s, c)?;
    }
    Ok(total)
}

/// cos(pi z) with the integer part of Re(z) reduced exactly.
fn cos_pi(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let d = Complex64::new(z.re - n, z.im);
    let c = (Complex64::new(PI, 0.0) * d).cos();
    if (n as i64).rem_euclid(2) == 0 {
        c
    } else {
        -c
    }
}

/// Diffraction prefactor G = C e^{i pi/4} (sqrt(pi)/2) sqrt(2 lambda + 1)
/// linking the resummed and Legendre amplitude normalizations.
pub fn legendre_prefactor(c: Complex64, lambda: ComplexMomentum) -> Complex64 {
    let two_l_plus_1 = 2.0 * lambda.to_complex() + 1.0;
    c * Complex64::from_polar(1.0, FRAC_PI_4) * (PI.sqrt() / 2.0) * two_l_plus_1.sqrt()
}

/// Scattering amplitude in Legendre form G P_lambda(-cos theta_s)/sin(pi lambda),
/// valid away from the forward direction (log singularity at theta_s = 0).
pub fn legendre_amplitude(
    theta_s: f64,
    lambda: ComplexMomentum,
    g: Complex64,
) -> Result<Complex64, ScatteringError> {
    check_theta_s(theta_s)?;
    if theta_s < THETA_MIN {
        return Err(ScatteringError::ForwardValidity(theta_s));
    }
    let lam = lambda.to_complex();
    let p = legendre_p(lam, -theta_s.cos())?;
    Ok(g * p / sin_pi(lam))
}

/// Partial-wave amplitude of the resonance pole:
/// a_l = -(beta(2 alpha + 1)/k) / ((lambda - l)(lambda + l + 1)), k = sqrt(E).
pub fn resonance_partial_wave(
    ell: u32,
    lambda: ComplexMomentum,
    energy: f64,
) -> Result<Complex64, ScatteringError> {
    if !(energy > 0.0) {
        return Err(ScatteringError::Domain(format!(
            "resonance partial wave requires E > 0, got {}",
            energy
        )));
    }
    let k = energy.sqrt();
    let lam = lambda.to_complex();
    let ellf = f64::from(ell);
    let d1 = lam - ellf;
    let d2 = lam + ellf + 1.0;
    if d1.norm() < 1e-12 || d2.norm() < 1e-12 {
        return Err(ScatteringError::PoleProximity(format!(
            "lambda = {} at a projection pole of l = {}",
            lam, ell
        )));
    }
    let strength = -lambda.beta * (2.0 * lambda.alpha + 1.0) / k;
    Ok(strength / (d1 * d2))
}

/// Resonance phase shift
/// delta_l = arcsin{ beta(2 alpha+1) / sqrt[((l-alpha)^2+beta^2)((l+alpha+1)^2+beta^2)] }.
pub fn resonance_phase_shift(ell: u32, lambda: ComplexMomentum) -> Result<f64, ScatteringError> {
    let ellf = f64::from(ell);
    let a = lambda.alpha;
    let b = lambda.beta;
    let denom = (((ellf - a).powi(2) + b * b) * ((ellf + a + 1.0).powi(2) + b * b)).sqrt();
    let arg = b * (2.0 * a + 1.0) / denom;
    if arg > 1.0 + 1e-12 || arg < -1.0 - 1e-12 {
        return Err(ScatteringError::Consistency(format!(
            "arcsin argument {} drifted outside [-1, 1]",
            arg
        )));
    }
    Ok(arg.clamp(-1.0, 1.0).asin())
}

/// One detected phase-shift crossing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceEntry {
    pub ell: u32,
    pub energy: f64,
    /// Phase shift at the crossing energy (radians).
    pub phase_shift: f64,
    /// True for upward crossings (resonances); false for echoes.
    pub upward: bool,
}

/// Scan an energy grid for the energies where the continued phase shift of
/// each partial wave crosses pi/2, i.e. where the pole trajectory
/// alpha(E) passes through l. Both upward crossings (resonances) and
/// downward ones (echoes, flagged `upward = false`) are reported; the grid
/// must be strictly increasing and positive.
pub fn scan_resonances<F>(
    line: &RotationalLine,
    lambda_of_e: F,
    ells: std::ops::RangeInclusive<u32>,
    e_grid: &[f64],
) -> Result<Vec<ResonanceEntry>, ScatteringError>
where
    F: Fn(f64) -> ComplexMomentum,
{
    if e_grid.len() < 2 {
        return Err(ScatteringError::Domain(
            "energy grid needs at least two points".into(),
        ));
    }
    if !(e_grid[0] > 0.0) {
        return Err(ScatteringError::Domain(format!(
            "energy grid must be positive, starts at {}",
            e_grid[0]
        )));
    }
    for w in e_grid.windows(2) {
        if !(w[1] > w[0]) {
            return Err(ScatteringError::Domain(
                "energy grid must be strictly increasing".into(),
            ));
        }
    }
    let _ = line; // the trajectory arrives through lambda_of_e; the line is
                  // kept in the signature for bound-state extrapolation users
    let mut found = Vec::new();
    for ell in ells {
        let target = f64::from(ell);
        let g = |e: f64| lambda_of_e(e).alpha - target;
        let mut prev = g(e_grid[0]);
        for w in e_grid.windows(2) {
            let cur = g(w[1]);
            if prev == 0.0 {
                prev = cur;
                continue;
            }
            if prev.signum() != cur.signum() {
                // bisect the bracket down to the energy tolerance
                let (mut lo, mut hi) = (w[0], w[1]);
                let mut g_lo = prev;
                while hi - lo > BISECTION_TOL {
                    let mid = 0.5 * (lo + hi);
                    let g_mid = g(mid);
                    if g_mid == 0.0 {
                        lo = mid;
                        hi = mid;
                        break;
                    }
                    if g_mid.signum() == g_lo.signum() {
                        lo = mid;
                        g_lo = g_mid;
                    } else {
                        hi = mid;
                    }
                }
                let e_star = 0.5 * (lo + hi);
                let upward = cur > prev;
                let delta = resonance_phase_shift(ell, lambda_of_e(e_star))?;
                found.push(ResonanceEntry {
                    ell,
                    energy: e_star,
                    phase_shift: delta,
                    upward,
                });
            }
            prev = cur;
        }
    }
    found.sort_by(|a, b| a.energy.partial_cmp(&b.energy).unwrap());
    Ok(found)
}

/// Which amplitude formula a scan should evaluate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AmplitudeMethod {
    /// Truncated turn sum with the given cutoff.
    MultiTurn { turns: u32 },
    /// Closed-form resummation.
    Resummed,
    /// Legendre-function form with lambda = nu0 - 1/2.
    Legendre,
}

/// Amplitudes and cross sections over a scattering-angle grid.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeScan {
    pub theta_s: Vec<f64>,
    pub f: Vec<Complex64>,
    pub sigma: Vec<f64>,
}

/// Evaluate one amplitude method over an angle grid with an explicit pole
/// degree nu0 (geometric or refined) and diffraction constant C.
pub fn amplitude_scan(
    nu0: Complex64,
    thetas: &[f64],
    c: Complex64,
    method: AmplitudeMethod,
) -> Result<AmplitudeScan, ScatteringError> {
    let mut f_vals = Vec::with_capacity(thetas.len());
    for &theta in thetas {
        let f = match method {
            AmplitudeMethod::MultiTurn { turns } => {
                multi_turn_amplitude_with(nu0, theta, c, turns)?
            }
            AmplitudeMethod::Resummed => resummed_amplitude_with(nu0, theta, c)?,
            AmplitudeMethod::Legendre => {
                let lambda = ComplexMomentum::from_nu0(nu0);
                legendre_amplitude(theta, lambda, legendre_prefactor(c, lambda))?
            }
        };
        f_vals.push(f);
    }
    let sigma = f_vals.iter().map(|f| f.norm_sqr()).collect();
    Ok(AmplitudeScan {
        theta_s: thetas.to_vec(),
        f: f_vals,
        sigma,
    })
}
