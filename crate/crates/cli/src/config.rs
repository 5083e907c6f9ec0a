//! Scenario configuration: a single JSON object, unknown keys rejected.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "config error: {}", self.0)
    }
}

impl std::error::Error for ConfigError {}

/// A uniform, strictly increasing grid.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn values(&self) -> Vec<f64> {
        let n = self.count;
        (0..n)
            .map(|i| self.start + (self.stop - self.start) * i as f64 / (n - 1) as f64)
            .collect()
    }

    fn validate(&self, name: &str) -> Result<(), ConfigError> {
        if self.count < 2 {
            return Err(ConfigError(format!(
                "{} grid needs at least 2 points, got {}",
                name, self.count
            )));
        }
        if !(self.stop > self.start) {
            return Err(ConfigError(format!(
                "{} grid must be strictly increasing ({} .. {})",
                name, self.start, self.stop
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ObstacleConfig {
    pub radius: f64,
    pub wavenumber: f64,
    pub gamma0: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ResonanceConfig {
    /// Moment of inertia I of the rotational line l(l+1) = 2IE + c0.
    pub inertia: f64,
    /// Intercept c0 of the line.
    pub intercept: f64,
    /// Constant imaginary part (width) of the pole trajectory.
    pub beta: f64,
    pub l_min: u32,
    pub l_max: u32,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BoundStatesConfig {
    pub l_max: u32,
    /// Sample count of the theta grid (placed inside (0, pi), away from the
    /// conjugate points).
    pub theta_count: usize,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Nu0Source {
    /// nu0 = R(k + i gamma0).
    Geometric,
    /// First complex-order root of H1_nu(kR) = 0, Newton-refined.
    Refined,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ModeConfig {
    pub nu0_source: Nu0Source,
    /// Turn cutoff N of the multi-turn partial sum.
    pub turn_cutoff: u32,
    /// Caustic-proximity tolerance (units of R).
    pub caustic_tol: f64,
    /// Residual tolerance for complex-order root refinement.
    pub root_tol: f64,
    /// Number of Hankel roots to tabulate in the `roots` command.
    pub root_count: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub obstacle: ObstacleConfig,
    /// Scattering angles for amplitude scans, strictly inside (0, pi).
    pub theta_grid: GridSpec,
    /// Energy grid for resonance scans, strictly positive.
    pub energy_grid: GridSpec,
    /// Radial grid (units of the caustic radius) for the caustic map.
    pub r_grid: GridSpec,
    /// Azimuthal sample count of the caustic map.
    pub caustic_theta_count: usize,
    pub resonance: ResonanceConfig,
    pub bound_states: BoundStatesConfig,
    pub modes: ModeConfig,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            obstacle: ObstacleConfig {
                radius: 1.0,
                wavenumber: 10.0,
                gamma0: 0.3,
            },
            theta_grid: GridSpec {
                start: 0.05,
                stop: std::f64::consts::PI - 0.05,
                count: 181,
            },
            energy_grid: GridSpec {
                start: 0.05,
                stop: 50.0,
                count: 2000,
            },
            r_grid: GridSpec {
                start: 0.5,
                stop: 1.5,
                count: 101,
            },
            caustic_theta_count: 64,
            resonance: ResonanceConfig {
                inertia: 1.0,
                intercept: 20.0,
                beta: 0.05,
                l_min: 0,
                l_max: 10,
            },
            bound_states: BoundStatesConfig {
                l_max: 5,
                theta_count: 63,
            },
            modes: ModeConfig {
                nu0_source: Nu0Source::Geometric,
                turn_cutoff: 50,
                caustic_tol: 1e-9,
                root_tol: 1e-10,
                root_count: 3,
            },
        }
    }
}

impl ScenarioConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let cfg: ScenarioConfig =
            serde_json::from_str(text).map_err(|e| ConfigError(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.obstacle.radius > 0.0)
            || !(self.obstacle.wavenumber > 0.0)
            || !(self.obstacle.gamma0 >= 0.0)
        {
            return Err(ConfigError(format!(
                "obstacle requires R > 0, k > 0, gamma0 >= 0 (got {:?})",
                self.obstacle
            )));
        }
        self.theta_grid.validate("theta")?;
        self.energy_grid.validate("energy")?;
        self.r_grid.validate("r")?;
        if !(self.theta_grid.start > 0.0 && self.theta_grid.stop < std::f64::consts::PI) {
            return Err(ConfigError(
                "theta grid must lie strictly inside (0, pi)".into(),
            ));
        }
        if !(self.energy_grid.start > 0.0) {
            return Err(ConfigError("energy grid must be positive".into()));
        }
        if !(self.r_grid.start > 0.0) {
            return Err(ConfigError("r grid must be positive".into()));
        }
        if self.caustic_theta_count < 2 {
            return Err(ConfigError("caustic theta count must be >= 2".into()));
        }
        if self.bound_states.theta_count < 2 {
            return Err(ConfigError("bound-states theta count must be >= 2".into()));
        }
        if self.resonance.l_max < self.resonance.l_min {
            return Err(ConfigError("resonance l range is empty".into()));
        }
        for &(name, tol) in &[
            ("caustic_tol", self.modes.caustic_tol),
            ("root_tol", self.modes.root_tol),
        ] {
            if !(tol > 0.0) {
                return Err(ConfigError(format!("{} must be > 0, got {}", name, tol)));
            }
        }
        Ok(())
    }

    /// FNV-1a hash of the canonical serialized form; identical configs give
    /// identical hashes and therefore byte-identical output files.
    pub fn hash(&self) -> String {
        let canonical = serde_json::to_string(self).expect("config serializes");
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for byte in canonical.as_bytes() {
            h ^= u64::from(*byte);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        format!("{:016x}", h)
    }
}
