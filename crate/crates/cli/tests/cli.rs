//! End-to-end tests of the `diffract` binary: exit codes, file schemas, and
//! byte-level determinism.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::atomic::{AtomicU32, Ordering};

static DIR_COUNTER: AtomicU32 = AtomicU32::new(0);

fn scratch_dir(tag: &str) -> PathBuf {
    let n = DIR_COUNTER.fetch_add(1, Ordering::SeqCst);
    let dir = std::env::temp_dir().join(format!(
        "diffract-cli-test-{}-{}-{}",
        std::process::id(),
        tag,
        n
    ));
    if dir.exists() {
        fs::remove_dir_all(&dir).unwrap();
    }
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diffract"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn read(path: &Path) -> String {
    fs::read_to_string(path).unwrap_or_else(|e| panic!("read {}: {}", path.display(), e))
}

#[test]
fn amplitude_emits_all_methods_and_agrees_across_routes() {
    let dir = scratch_dir("amplitude");
    let out = run(&["amplitude", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success(), "{:?}", out);
    let text = read(&dir.join("amplitude.csv"));
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("# diffract ") && header.contains("config="));
    assert_eq!(
        lines.next().unwrap(),
        "theta_s,method,re_f,im_f,sigma"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 181 * 3);

    // column-wise agreement of the resummed and multi-turn methods
    let mut multi = Vec::new();
    let mut resummed = Vec::new();
    for row in &rows {
        let cells: Vec<&str> = row.split(',').collect();
        let (theta, method) = (cells[0], cells[1]);
        if method == "multi_turn" {
            multi.push((theta.to_string(), cells[2].to_string(), cells[3].to_string()));
        } else if method == "resummed" {
            resummed.push((theta.to_string(), cells[2].to_string(), cells[3].to_string()));
        }
    }
    assert_eq!(multi.len(), 181);
    assert_eq!(resummed.len(), 181);
    for (m, r) in multi.iter().zip(&resummed) {
        assert_eq!(m.0, r.0);
        let (mre, mim): (f64, f64) = (m.1.parse().unwrap(), m.2.parse().unwrap());
        let (rre, rim): (f64, f64) = (r.1.parse().unwrap(), r.2.parse().unwrap());
        let diff = ((mre - rre).powi(2) + (mim - rim).powi(2)).sqrt();
        let scale = (rre * rre + rim * rim).sqrt();
        assert!(diff < 1e-8 * scale.max(1.0), "theta={}", m.0);
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir_a = scratch_dir("det-a");
    let dir_b = scratch_dir("det-b");
    for dir in [&dir_a, &dir_b] {
        let out = run(&["amplitude", "--out", dir.to_str().unwrap()]);
        assert!(out.status.success());
        let out = run(&["roots", "--out", dir.to_str().unwrap()]);
        assert!(out.status.success());
    }
    for name in ["amplitude.csv", "roots.csv"] {
        assert_eq!(
            read(&dir_a.join(name)),
            read(&dir_b.join(name)),
            "{} differs between runs",
            name
        );
    }
}

#[test]
fn undamped_config_warns_but_still_produces_resummed() {
    let dir = scratch_dir("undamped");
    let config = dir.join("config.json");
    let mut cfg: serde_json::Value =
        serde_json::from_str(&default_config_json()).unwrap();
    cfg["obstacle"]["gamma0"] = serde_json::json!(0.0);
    fs::write(&config, serde_json::to_string(&cfg).unwrap()).unwrap();
    let out = run(&[
        "amplitude",
        "--config",
        config.to_str().unwrap(),
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("undamped"),
        "expected warning on stderr, got: {}",
        stderr
    );
    let text = read(&dir.join("amplitude.csv"));
    assert!(text.lines().any(|l| l.contains(",resummed,")));
}

#[test]
fn malformed_and_unknown_key_configs_exit_2() {
    let dir = scratch_dir("badcfg");
    let config = dir.join("config.json");
    fs::write(&config, "{ not json").unwrap();
    let out = run(&[
        "amplitude",
        "--config",
        config.to_str().unwrap(),
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    let mut cfg: serde_json::Value = serde_json::from_str(&default_config_json()).unwrap();
    cfg["mystery_knob"] = serde_json::json!(true);
    fs::write(&config, serde_json::to_string(&cfg).unwrap()).unwrap();
    let out = run(&[
        "amplitude",
        "--config",
        config.to_str().unwrap(),
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["amplitude", "--config", "/nonexistent/x.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_format_carries_metadata() {
    let dir = scratch_dir("json");
    let out = run(&[
        "roots",
        "--format",
        "json",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(&read(&dir.join("roots.json"))).unwrap();
    assert_eq!(doc["tool"], "diffract");
    assert!(doc["config_hash"].as_str().unwrap().len() == 16);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for row in rows {
        let residual: f64 = row["residual"].as_str().unwrap().parse().unwrap();
        assert!(residual < 1e-10);
        let nu_im: f64 = row["nu_im"].as_str().unwrap().parse().unwrap();
        assert!(nu_im > 0.0);
    }
}

#[test]
fn resonance_table_contains_bound_states_and_line_crossings() {
    let dir = scratch_dir("resonances");
    let out = run(&["resonances", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success());
    let text = read(&dir.join("resonances.csv"));
    // I = 1, c0 = 20: bound states at E = -10, -9, -7, -4 and a boundary
    // case at l = 4.
    let mut bound: Vec<(u32, f64)> = Vec::new();
    let mut resonances: Vec<(u32, f64)> = Vec::new();
    for line in text.lines().skip(2) {
        let cells: Vec<&str> = line.split(',').collect();
        let ell: u32 = cells[1].parse().unwrap();
        let energy: f64 = cells[2].parse().unwrap();
        match cells[0] {
            "bound" => bound.push((ell, energy)),
            "boundary" => assert!((ell, energy.abs()) == (4, 0.0)),
            "resonance" => resonances.push((ell, energy)),
            other => panic!("unexpected kind {}", other),
        }
    }
    assert_eq!(bound.len(), 4);
    for (ell, energy) in &bound {
        let want = (f64::from(*ell) * f64::from(ell + 1) - 20.0) / 2.0;
        assert!((energy - want).abs() < 1e-12);
        assert!(*energy < 0.0);
    }
    // resonance energies strictly increasing in l
    assert!(!resonances.is_empty());
    for pair in resonances.windows(2) {
        assert!(pair[0].0 < pair[1].0);
        assert!(pair[0].1 < pair[1].1);
    }
    // profiles exist and are grid-sized
    let profiles = read(&dir.join("delta_profiles.csv"));
    assert_eq!(profiles.lines().count(), 2 + 11 * 2000);
}

#[test]
fn caustic_regime_flips_exactly_at_the_unit_circle() {
    let dir = scratch_dir("caustic");
    let out = run(&["caustic", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success());
    let text = read(&dir.join("caustic.csv"));
    let mut shadow_max_abs: f64 = 0.0;
    let mut shadow_profile: Vec<(f64, f64)> = Vec::new(); // (r, |psi|) at theta = 0
    let mut lit_profile: Vec<(f64, f64)> = Vec::new();
    for line in text.lines().skip(2) {
        let cells: Vec<&str> = line.split(',').collect();
        let r: f64 = cells[0].parse().unwrap();
        let theta: f64 = cells[1].parse().unwrap();
        let v: f64 = cells[3].parse().unwrap();
        let regime = cells[6];
        let expected = if (r - 1.0).abs() < 1e-9 {
            "parabolic"
        } else if r < 1.0 {
            "elliptic"
        } else {
            "hyperbolic"
        };
        assert_eq!(regime, expected, "r={}", r);
        assert_eq!(v < 0.0, r < 1.0 - 1e-9, "sign of v at r={}", r);
        let re: f64 = cells[4].parse().unwrap();
        let im: f64 = cells[5].parse().unwrap();
        let abs = (re * re + im * im).sqrt();
        if regime == "elliptic" {
            shadow_max_abs = shadow_max_abs.max(abs);
            if theta == 0.0 {
                shadow_profile.push((r, abs));
            }
        } else if theta == 0.0 {
            lit_profile.push((r, abs));
        }
    }
    // shadow field stays below the on-caustic magnitude k^{-1/2}
    assert!(shadow_max_abs <= 0.1f64.sqrt() + 1e-12);
    // ... and decays monotonically with depth into the shadow
    shadow_profile.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    for pair in shadow_profile.windows(2) {
        assert!(pair[0].1 < pair[1].1, "shadow decay broken at r={}", pair[1].0);
    }
    // the uniform-field maximum sits just on the lit side of the caustic,
    // at the Airy peak v ~ 1.019 k^{-2/3} (r ~ 1.17 for k = 10)
    let (peak_r, _) = lit_profile
        .iter()
        .fold((0.0, 0.0), |best, &(r, a)| if a > best.1 { (r, a) } else { best });
    assert!(
        peak_r > 1.0 && peak_r < 1.3,
        "uniform-field peak at r={} instead of just outside the caustic",
        peak_r
    );
}

#[test]
fn bound_states_table_shape() {
    let dir = scratch_dir("bound");
    let out = run(&["bound-states", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success());
    let text = read(&dir.join("bound_states.csv"));
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows.len(), 6 * 63);
    for row in rows {
        let cells: Vec<&str> = row.split(',').collect();
        let ell: f64 = cells[0].parse().unwrap();
        let momentum: f64 = cells[1].parse().unwrap();
        assert_eq!(momentum, ell + 0.5);
        let psi: f64 = cells[3].parse().unwrap();
        assert!(psi.is_finite());
    }
}

fn default_config_json() -> String {
    // a complete, valid scenario document for tests to perturb
    r#"{
  "obstacle": { "radius": 1.0, "wavenumber": 10.0, "gamma0": 0.3 },
  "theta_grid": { "start": 0.05, "stop": 3.09159265358979312, "count": 181 },
  "energy_grid": { "start": 0.05, "stop": 50.0, "count": 2000 },
  "r_grid": { "start": 0.5, "stop": 1.5, "count": 101 },
  "caustic_theta_count": 64,
  "resonance": { "inertia": 1.0, "intercept": 20.0, "beta": 0.05, "l_min": 0, "l_max": 10 },
  "bound_states": { "l_max": 5, "theta_count": 63 },
  "modes": {
    "nu0_source": "geometric",
    "turn_cutoff": 50,
    "caustic_tol": 1e-9,
    "root_tol": 1e-10,
    "root_count": 3
  }
}"#
    .to_string()
}

#[test]
fn resonance_pole_on_the_grid_exits_3() {
    // kR = 10.5 with gamma0 = 0 puts cos(pi nu0) = 0: the resummed form is
    // on a physical resonance pole at every angle.
    let dir = scratch_dir("pole");
    let config = dir.join("config.json");
    let mut cfg: serde_json::Value = serde_json::from_str(&default_config_json()).unwrap();
    cfg["obstacle"]["wavenumber"] = serde_json::json!(10.5);
    cfg["obstacle"]["gamma0"] = serde_json::json!(0.0);
    fs::write(&config, serde_json::to_string(&cfg).unwrap()).unwrap();
    let out = run(&[
        "amplitude",
        "--config",
        config.to_str().unwrap(),
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("resonance pole") || stderr.contains("grid points failed"));
}

#[test]
fn unattainable_root_tolerance_exits_4() {
    let dir = scratch_dir("noconv");
    let config = dir.join("config.json");
    let mut cfg: serde_json::Value = serde_json::from_str(&default_config_json()).unwrap();
    cfg["modes"]["root_tol"] = serde_json::json!(1e-30);
    fs::write(&config, serde_json::to_string(&cfg).unwrap()).unwrap();
    let out = run(&[
        "roots",
        "--config",
        config.to_str().unwrap(),
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn refined_nu0_mode_runs() {
    let dir = scratch_dir("refined");
    let config = dir.join("config.json");
    let mut cfg: serde_json::Value = serde_json::from_str(&default_config_json()).unwrap();
    cfg["modes"]["nu0_source"] = serde_json::json!("refined");
    fs::write(&config, serde_json::to_string(&cfg).unwrap()).unwrap();
    let out = run(&[
        "amplitude",
        "--config",
        config.to_str().unwrap(),
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{:?}", out);
    // the refined pole is more damped than the geometric one, so the
    // backward amplitudes shrink
    let text = read(&dir.join("amplitude.csv"));
    assert!(text.lines().count() > 100);
}
