//! The five subcommands: grid scans over the core library, emitted as
//! deterministic tables.

use crate::config::{Nu0Source, ScenarioConfig};
use crate::output::{Cell, FileFormat, Table};
use diffract_core::eikonal::{bound_state_wavefunction, quantized_momentum, RotationalLine};
use diffract_core::geometry::ObstacleSpec;
use diffract_core::ludwig::{
    classify_regime, cful_field, lit_v, lit_v_slope, shadow_field, shadow_v, shadow_v_slope,
    RegimeTag, ShadowMapping,
};
use diffract_core::scattering::{
    legendre_amplitude, legendre_prefactor, multi_turn_amplitude_with, resummed_amplitude_with,
    scan_resonances, ComplexMomentum, ScatteringError,
};
use diffract_core::specfun::{hankel_root, hankel_root_seed, SpecFunError};
use diffract_core::Complex64;
use std::f64::consts::{PI, TAU};
use std::path::Path;

/// Command failure, tagged with the process exit code class.
#[derive(Debug)]
pub enum CliError {
    /// Exit 2: configuration or I/O problems.
    Config(String),
    /// Exit 3: a scan hit domain errors; the offending points are listed.
    Domain(String),
    /// Exit 4: an iterative solve failed to converge.
    Convergence(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "{}", m),
            CliError::Domain(m) => write!(f, "{}", m),
            CliError::Convergence(m) => write!(f, "{}", m),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Convergence(_) => 4,
        }
    }
}

fn obstacle(cfg: &ScenarioConfig) -> Result<ObstacleSpec, CliError> {
    ObstacleSpec::new(
        cfg.obstacle.radius,
        cfg.obstacle.wavenumber,
        cfg.obstacle.gamma0,
    )
    .map_err(|e| CliError::Config(e.to_string()))
}

/// The pole degree, either geometric or refined to a Hankel root.
fn nu0_for(cfg: &ScenarioConfig, spec: &ObstacleSpec) -> Result<Complex64, CliError> {
    match cfg.modes.nu0_source {
        Nu0Source::Geometric => Ok(spec.nu0_geometric()),
        Nu0Source::Refined => {
            let root = hankel_root(1, spec.wavenumber, spec.radius, cfg.modes.root_tol).map_err(
                |e| match e {
                    SpecFunError::NoConvergence { .. } => CliError::Convergence(e.to_string()),
                    other => CliError::Domain(other.to_string()),
                },
            )?;
            Ok(root.nu)
        }
    }
}

fn write(table: &Table, out: &Path, format: FileFormat, hash: &str) -> Result<(), CliError> {
    let path = table
        .write(out, format, hash)
        .map_err(|e| CliError::Config(format!("cannot write output: {}", e)))?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

/// Scattering amplitudes by all three methods over the theta grid.
pub fn cmd_amplitude(
    cfg: &ScenarioConfig,
    out: &Path,
    format: FileFormat,
) -> Result<(), CliError> {
    let spec = obstacle(cfg)?;
    let nu0 = nu0_for(cfg, &spec)?;
    let lambda = ComplexMomentum::from_nu0(nu0);
    let c = Complex64::new(1.0, 0.0);
    let g = legendre_prefactor(c, lambda);
    let thetas = cfg.theta_grid.values();

    if spec.gamma0 == 0.0 {
        eprintln!(
            "warning: gamma0 = 0, the multi-turn series is undamped; \
             the partial sum (N = {}) does not converge",
            cfg.modes.turn_cutoff
        );
    }

    let mut table = Table::new(
        "amplitude",
        vec!["theta_s", "method", "re_f", "im_f", "sigma"],
    );
    let mut domain_failures: Vec<String> = Vec::new();
    let mut skipped_forward = 0usize;
    for &(method, name) in &[
        ("multi_turn", "multi_turn"),
        ("resummed", "resummed"),
        ("legendre", "legendre"),
    ] {
        for &theta in &thetas {
            let value: Result<Complex64, ScatteringError> = match method {
                "multi_turn" => {
                    multi_turn_amplitude_with(nu0, theta, c, cfg.modes.turn_cutoff)
                }
                "resummed" => resummed_amplitude_with(nu0, theta, c),
                _ => legendre_amplitude(theta, lambda, g),
            };
            match value {
                Ok(f) => table.push(vec![
                    Cell::Num(theta),
                    Cell::Text(name),
                    Cell::Num(f.re),
                    Cell::Num(f.im),
                    Cell::Num(f.norm_sqr()),
                ]),
                Err(ScatteringError::ForwardValidity(_)) => {
                    // documented validity region of the Legendre form:
                    // keep the row, leave the value cells empty
                    skipped_forward += 1;
                    table.push(vec![
                        Cell::Num(theta),
                        Cell::Text(name),
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                    ]);
                }
                Err(e) => domain_failures.push(format!("{} at theta_s={}: {}", name, theta, e)),
            }
        }
    }
    if skipped_forward > 0 {
        eprintln!(
            "note: {} legendre cells left empty forward of theta_s = 0.1 \
             (outside the representation's validity)",
            skipped_forward
        );
    }
    if !domain_failures.is_empty() {
        return Err(CliError::Domain(format!(
            "{} grid points failed:\n{}",
            domain_failures.len(),
            domain_failures.join("\n")
        )));
    }
    write(&table, out, format, &cfg.hash())
}

/// Resonance energies on the rotational line, the extrapolated bound states,
/// and sampled phase-shift profiles.
pub fn cmd_resonances(
    cfg: &ScenarioConfig,
    out: &Path,
    format: FileFormat,
) -> Result<(), CliError> {
    let line = RotationalLine::new(cfg.resonance.inertia, cfg.resonance.intercept);
    let beta = cfg.resonance.beta;
    let lambda_of_e = |e: f64| ComplexMomentum::new(line.alpha_at_energy(e), beta);
    let grid = cfg.energy_grid.values();

    let mut table = Table::new(
        "resonances",
        vec!["kind", "l", "energy", "phase_shift", "upward"],
    );
    // Bound states: the line extrapolated below the scattering threshold.
    for ell in cfg.resonance.l_min..=cfg.resonance.l_max {
        let e = line.level(ell);
        if e < -1e-12 {
            table.push(vec![
                Cell::Text("bound"),
                Cell::Int(i64::from(ell)),
                Cell::Num(e),
                Cell::Empty,
                Cell::Empty,
            ]);
        } else if e.abs() <= 1e-12 {
            table.push(vec![
                Cell::Text("boundary"),
                Cell::Int(i64::from(ell)),
                Cell::Num(e),
                Cell::Empty,
                Cell::Empty,
            ]);
        }
    }
    let entries = scan_resonances(
        &line,
        lambda_of_e,
        cfg.resonance.l_min..=cfg.resonance.l_max,
        &grid,
    )
    .map_err(|e| CliError::Domain(e.to_string()))?;
    for entry in &entries {
        table.push(vec![
            Cell::Text(if entry.upward { "resonance" } else { "echo" }),
            Cell::Int(i64::from(entry.ell)),
            Cell::Num(entry.energy),
            Cell::Num(entry.phase_shift),
            Cell::Int(i64::from(entry.upward)),
        ]);
    }
    write(&table, out, format, &cfg.hash())?;

    let mut profiles = Table::new("delta_profiles", vec!["l", "energy", "delta"]);
    for ell in cfg.resonance.l_min..=cfg.resonance.l_max {
        for &e in &grid {
            let delta = diffract_core::scattering::resonance_phase_shift(ell, lambda_of_e(e))
                .map_err(|err| CliError::Domain(err.to_string()))?;
            profiles.push(vec![
                Cell::Int(i64::from(ell)),
                Cell::Num(e),
                Cell::Num(delta),
            ]);
        }
    }
    write(&profiles, out, format, &cfg.hash())
}

/// Field map across the circular caustic: boundary coordinates, regime tag,
/// and the uniform/evanescent field.
pub fn cmd_caustic(cfg: &ScenarioConfig, out: &Path, format: FileFormat) -> Result<(), CliError> {
    let k = cfg.obstacle.wavenumber;
    let tol = cfg.modes.caustic_tol;
    let a0 = Complex64::new(1.0, 0.0);
    let a1 = Complex64::new(0.0, 0.0);
    let r_vals = cfg.r_grid.values();
    let n_t = cfg.caustic_theta_count;
    let t_vals: Vec<f64> = (0..n_t).map(|j| TAU * j as f64 / n_t as f64).collect();

    let mut table = Table::new(
        "caustic",
        vec!["r", "theta", "u", "v", "re_psi", "im_psi", "regime"],
    );
    let mut failures: Vec<String> = Vec::new();
    for &r in &r_vals {
        // clockwise surface phase u = 2 pi - theta; v and its slope by side
        let (v, slope) = if (r - 1.0).abs() <= tol {
            (0.0, 2f64.powf(1.0 / 3.0))
        } else if r < 1.0 {
            match (shadow_v(r), shadow_v_slope(r)) {
                (Ok(v), Ok(s)) => (v, s),
                (Err(e), _) | (_, Err(e)) => {
                    failures.push(format!("r={}: {}", r, e));
                    continue;
                }
            }
        } else {
            match (lit_v(r), lit_v_slope(r)) {
                (Ok(v), Ok(s)) => (v, s),
                (Err(e), _) | (_, Err(e)) => {
                    failures.push(format!("r={}: {}", r, e));
                    continue;
                }
            }
        };
        let regime = match classify_regime(v, slope, tol) {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("r={}: {}", r, e));
                continue;
            }
        };
        let regime_name = match regime.tag {
            RegimeTag::Hyperbolic => "hyperbolic",
            RegimeTag::Parabolic => "parabolic",
            RegimeTag::Elliptic => "elliptic",
        };
        for &theta in &t_vals {
            let u = TAU - theta;
            let psi = if v < 0.0 {
                shadow_field(r, u, k, ShadowMapping::Interior)
            } else {
                cful_field(u, v, k, a0, a1)
            };
            match psi {
                Ok(p) => table.push(vec![
                    Cell::Num(r),
                    Cell::Num(theta),
                    Cell::Num(u),
                    Cell::Num(v),
                    Cell::Num(p.re),
                    Cell::Num(p.im),
                    Cell::Text(regime_name),
                ]),
                Err(e) => failures.push(format!("r={} theta={}: {}", r, theta, e)),
            }
        }
    }
    if !failures.is_empty() {
        return Err(CliError::Domain(format!(
            "{} grid points failed:\n{}",
            failures.len(),
            failures.join("\n")
        )));
    }
    write(&table, out, format, &cfg.hash())
}

/// Angular bound-state wavefunction samples for each partial wave.
pub fn cmd_bound_states(
    cfg: &ScenarioConfig,
    out: &Path,
    format: FileFormat,
) -> Result<(), CliError> {
    // keep clear of the conjugate points theta = 0 and pi
    let margin = 0.05;
    let n = cfg.bound_states.theta_count;
    let thetas: Vec<f64> = (0..n)
        .map(|i| margin + (PI - 2.0 * margin) * i as f64 / (n - 1) as f64)
        .collect();
    let mut table = Table::new("bound_states", vec!["l", "momentum", "theta", "psi"]);
    for ell in 0..=cfg.bound_states.l_max {
        for &theta in &thetas {
            let psi = bound_state_wavefunction(ell, theta)
                .map_err(|e| CliError::Domain(format!("l={} theta={}: {}", ell, theta, e)))?;
            table.push(vec![
                Cell::Int(i64::from(ell)),
                Cell::Num(quantized_momentum(ell)),
                Cell::Num(theta),
                Cell::Num(psi),
            ]);
        }
    }
    write(&table, out, format, &cfg.hash())
}

/// Table of complex-order Hankel roots refined from the asymptotic seeds.
pub fn cmd_roots(cfg: &ScenarioConfig, out: &Path, format: FileFormat) -> Result<(), CliError> {
    let spec = obstacle(cfg)?;
    let mut table = Table::new(
        "roots",
        vec![
            "m",
            "seed_re",
            "seed_im",
            "nu_re",
            "nu_im",
            "residual",
            "iterations",
        ],
    );
    for m in 1..=cfg.modes.root_count {
        let seed = hankel_root_seed(m, spec.wavenumber, spec.radius);
        let root = hankel_root(m, spec.wavenumber, spec.radius, cfg.modes.root_tol).map_err(
            |e| match e {
                SpecFunError::NoConvergence { .. } => CliError::Convergence(format!(
                    "root m={} did not converge: {}",
                    m, e
                )),
                other => CliError::Domain(format!("root m={}: {}", m, other)),
            },
        )?;
        table.push(vec![
            Cell::Int(i64::from(m)),
            Cell::Num(seed.re),
            Cell::Num(seed.im),
            Cell::Num(root.nu.re),
            Cell::Num(root.nu.im),
            Cell::Num(root.residual),
            Cell::Int(i64::from(root.iterations)),
        ]);
    }
    write(&table, out, format, &cfg.hash())
}
