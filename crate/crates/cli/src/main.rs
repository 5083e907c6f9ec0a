//! `diffract`: scans and file emission for the semiclassical diffraction
//! toolkit. Data goes to files under --out; diagnostics go to stderr.

mod commands;
mod config;
mod output;

use clap::{Parser, Subcommand};
use commands::CliError;
use config::ScenarioConfig;
use output::FileFormat;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "diffract",
    version,
    about = "Creeping-wave amplitudes, caustic fields, and orbiting resonances for a spherical obstacle"
)]
struct Cli {
    /// Scenario configuration (JSON). Defaults are used when omitted.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Output directory for emitted tables.
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,

    /// Output file format.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: FileFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scattering amplitudes (multi-turn, resummed, Legendre) over the
    /// theta grid.
    Amplitude,
    /// Resonance energies, extrapolated bound states, and phase-shift
    /// profiles on the energy grid.
    Resonances,
    /// Field map across the circular caustic with regime tags.
    Caustic,
    /// Angular bound-state wavefunction samples.
    BoundStates,
    /// Complex-order Hankel root table.
    Roots,
}

fn load_config(path: Option<&PathBuf>) -> Result<ScenarioConfig, CliError> {
    match path {
        None => Ok(ScenarioConfig::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Config(format!("cannot read {}: {}", p.display(), e)))?;
            ScenarioConfig::from_json(&text).map_err(|e| CliError::Config(e.to_string()))
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let cfg = load_config(cli.config.as_ref())?;
    if !cli.out.is_dir() {
        std::fs::create_dir_all(&cli.out)
            .map_err(|e| CliError::Config(format!("cannot create {}: {}", cli.out.display(), e)))?;
    }
    match cli.command {
        Command::Amplitude => commands::cmd_amplitude(&cfg, &cli.out, cli.format),
        Command::Resonances => commands::cmd_resonances(&cfg, &cli.out, cli.format),
        Command::Caustic => commands::cmd_caustic(&cfg, &cli.out, cli.format),
        Command::BoundStates => commands::cmd_bound_states(&cfg, &cli.out, cli.format),
        Command::Roots => commands::cmd_roots(&cfg, &cli.out, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code())
        }
    }
}
