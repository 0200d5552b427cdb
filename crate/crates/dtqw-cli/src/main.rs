//! `dtqw`: run quantum/classical walk experiments from declarative
//! configs or built-in presets.
//!
//! Exit codes: 0 success, 2 config error, 3 runtime error.

use clap::{Parser, Subcommand};
use dtqw::experiment::{self, presets, AnalysisSpec, ExperimentConfig};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_CONFIG: u8 = 2;
const EXIT_RUNTIME: u8 = 3;

#[derive(Parser)]
#[command(
    name = "dtqw",
    version,
    about = "Discrete-time quantum walks and classical random walks on multilayer networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment config file (TOML or JSON).
    Run {
        config: PathBuf,
        /// Output directory (default: config's `output`, then `$DTQW_OUT/{name}`, then `out/{name}`).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a named preset experiment.
    Preset {
        name: String,
        /// Replace the preset's seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Output directory (multi-config presets get one subdirectory per config).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Replace the step count (recurrence grids are clamped to it).
        #[arg(long)]
        steps: Option<usize>,
        /// Replace the trial count of decoherence analyses.
        #[arg(long)]
        trials: Option<usize>,
    },
    /// List the preset catalog.
    ListPresets,
    /// Check a config file without running anything.
    Validate { config: PathBuf },
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err((message, code)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), (String, u8)> {
    match cli.command {
        Command::Run { config, out } => {
            let config =
                experiment::load_config(&config).map_err(|e| (e.to_string(), EXIT_CONFIG))?;
            let out_dir = experiment::resolve_output_dir(&config, out.as_deref());
            run_one(&config, &out_dir)
        }
        Command::Preset {
            name,
            seed,
            out,
            steps,
            trials,
        } => {
            let preset = presets::find(&name).ok_or_else(|| {
                (
                    format!("unknown preset `{name}`; see `dtqw list-presets`"),
                    EXIT_CONFIG,
                )
            })?;
            let base = out.unwrap_or_else(|| {
                let root =
                    std::env::var(experiment::OUTPUT_ROOT_ENV).unwrap_or_else(|_| "out".into());
                Path::new(&root).join(preset.name)
            });
            let single = preset.configs.len() == 1;
            for mut config in preset.configs {
                apply_overrides(&mut config, seed, steps, trials);
                let out_dir = if single {
                    base.clone()
                } else {
                    base.join(&config.name)
                };
                run_one(&config, &out_dir)?;
            }
            Ok(())
        }
        Command::ListPresets => {
            for preset in presets::all() {
                let configs = preset.configs.len();
                let runs: usize = preset.configs.iter().map(|c| c.runs.len()).sum();
                println!(
                    "{:<12} {configs:>2} config(s), {runs:>2} run(s)",
                    preset.name
                );
                println!("             {}", preset.description);
            }
            Ok(())
        }
        Command::Validate { config } => {
            let parsed =
                experiment::load_config(&config).map_err(|e| (e.to_string(), EXIT_CONFIG))?;
            let validated =
                experiment::validate(&parsed).map_err(|e| (e.to_string(), EXIT_CONFIG))?;
            println!(
                "ok: `{}` ({} nodes, {} edges, {} layer(s), {} run(s), {} analysis step(s))",
                validated.config.name,
                validated.network.graph.vertex_count(),
                validated.network.graph.edge_count(),
                validated.network.membership.layer_count(),
                validated.config.runs.len(),
                validated.config.analyses.len()
            );
            Ok(())
        }
    }
}

fn run_one(config: &ExperimentConfig, out_dir: &Path) -> Result<(), (String, u8)> {
    let validated = experiment::validate(config).map_err(|e| (e.to_string(), EXIT_CONFIG))?;
    let summary = experiment::run(&validated, out_dir).map_err(|e| {
        let code = if e.is_config_error() {
            EXIT_CONFIG
        } else {
            EXIT_RUNTIME
        };
        (e.to_string(), code)
    })?;
    println!(
        "{}: wrote {} file(s) + summary.json to {}",
        summary.name,
        summary.outputs.len(),
        out_dir.display()
    );
    Ok(())
}

fn apply_overrides(
    config: &mut ExperimentConfig,
    seed: Option<u64>,
    steps: Option<usize>,
    trials: Option<usize>,
) {
    if let Some(seed) = seed {
        config.seed = seed;
    }
    if let Some(steps) = steps {
        config.steps = steps;
        for analysis in &mut config.analyses {
            if let AnalysisSpec::Polya { grid_max, .. } = analysis {
                *grid_max = (*grid_max).min(steps);
            }
        }
    }
    if let Some(trials) = trials {
        for analysis in &mut config.analyses {
            if let AnalysisSpec::Decoherence { trials: t, .. } = analysis {
                *t = trials;
            }
        }
    }
}
