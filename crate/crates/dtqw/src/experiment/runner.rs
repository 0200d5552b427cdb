//! Executes a validated experiment and writes its output files.
//!
//! All data files are written first, the summary last, so a present
//! `summary.json` marks a completed experiment.

use super::{
    eligible_edges, AnalysisSpec, EdgeSelector, InitialSpec, ValidatedExperiment, WalkerSpec,
};
use crate::analysis::{
    broken_link_monte_carlo, heatmap, layer_probability, polya_curve, polya_grid,
    time_avg_probability,
};
use crate::classical::{crw_evolve, ClassicalDistribution, TransitionMatrix};
use crate::coin::CoinAssignment;
use crate::error::Result;
use crate::quantum::{evolve, BrokenLinkPolicy};
use crate::series::ProbabilitySeries;
use crate::state::{BlockState, StateBackend};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::Path;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NetworkSummary {
    pub nodes: usize,
    pub edges: usize,
    pub layer_count: usize,
    /// `(generator description, layer nodes, layer edges)` per layer.
    pub layers: Vec<(String, usize, usize)>,
    pub interlayer_edge_count: usize,
    pub state_backend: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunRecord {
    pub label: String,
    pub walker: String,
    pub initial: String,
    /// Broken edges actually used by a decoherence analysis, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub broken_edges: Option<Vec<(usize, usize)>>,
}

/// Machine-readable record of one completed experiment.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunSummary {
    pub name: String,
    pub version: String,
    pub config_hash: String,
    pub seed: u64,
    pub steps: usize,
    pub network: NetworkSummary,
    pub runs: Vec<RunRecord>,
    /// Files written, relative to the output directory, in write order.
    pub outputs: Vec<String>,
    pub config: super::ExperimentConfig,
}

fn write_file(dir: &Path, name: &str, contents: &str, outputs: &mut Vec<String>) -> Result<()> {
    std::fs::write(dir.join(name), contents)?;
    outputs.push(name.to_string());
    Ok(())
}

fn distribution_csv(header: &str, values: &[f64]) -> String {
    let mut out = format!("node,{header}\n");
    for (i, v) in values.iter().enumerate() {
        out.push_str(&format!("{},{v}\n", i + 1));
    }
    out
}

/// Resolve the breakable edge set of a decoherence analysis. Random
/// selection draws without replacement from the experiment seed on
/// stream `u64::MAX`, independent of the trial streams.
fn resolve_breakable(
    selector: &EdgeSelector,
    experiment: &ValidatedExperiment,
) -> Vec<(usize, usize)> {
    match selector {
        EdgeSelector::Explicit { edges } => {
            let mut edges: Vec<_> = edges.iter().map(|&(i, j)| (i.min(j), i.max(j))).collect();
            edges.sort_unstable();
            edges.dedup();
            edges
        }
        EdgeSelector::Random { count, scope } => {
            let mut pool = eligible_edges(&experiment.network, *scope);
            let mut rng = ChaCha8Rng::seed_from_u64(experiment.config.seed);
            rng.set_stream(u64::MAX);
            for k in 0..*count {
                let pick = rng.gen_range(k..pool.len());
                pool.swap(k, pick);
            }
            let mut chosen: Vec<_> = pool[..*count].to_vec();
            chosen.sort_unstable();
            chosen
        }
    }
}

/// Run the experiment, writing per-analysis CSVs and a final
/// `summary.json` into `out_dir` (created if needed).
pub fn run(experiment: &ValidatedExperiment, out_dir: &Path) -> Result<RunSummary> {
    let config = &experiment.config;
    let network = &experiment.network;
    std::fs::create_dir_all(out_dir)?;
    let mut outputs = Vec::new();
    let mut run_records = Vec::new();

    for run in &config.runs {
        let mut record = RunRecord {
            label: run.label.clone(),
            walker: match &run.walker {
                WalkerSpec::Classical => "classical".to_string(),
                WalkerSpec::Quantum { coin } => format!("quantum {}", coin.name()),
            },
            initial: run.initial.describe(),
            broken_edges: None,
        };

        if let InitialSpec::Sweep { family } = run.initial {
            // Sweep runs exist for the heatmap analysis.
            for analysis in &config.analyses {
                if !matches!(analysis, AnalysisSpec::Heatmap) {
                    continue;
                }
                let coin = match &run.walker {
                    WalkerSpec::Quantum { coin } => Some(*coin),
                    WalkerSpec::Classical => None,
                };
                let map = heatmap(&network.table, family, coin, config.steps)?;
                write_file(
                    out_dir,
                    &format!("{}_heatmap.csv", run.label),
                    &map.to_csv(),
                    &mut outputs,
                )?;
                let sidecar = serde_json::json!({
                    "walker": map.walker(),
                    "init_family": family.name(),
                    "steps": map.steps(),
                    "seed": config.seed,
                    "nodes": map.node_count(),
                });
                write_file(
                    out_dir,
                    &format!("{}_heatmap.json", run.label),
                    &format!("{:#}\n", sidecar),
                    &mut outputs,
                )?;
            }
            run_records.push(record);
            continue;
        }

        // Pointwise runs share one base (unbroken) series.
        let start_node = run.initial.start_node().expect("validated pointwise run");
        let (series, quantum_setup): (ProbabilitySeries, Option<(BlockState, CoinAssignment)>) =
            match &run.walker {
                WalkerSpec::Classical => {
                    let omega = TransitionMatrix::unbiased(&network.table)?;
                    let d0 =
                        ClassicalDistribution::delta(network.table.vertex_count(), start_node)?;
                    let mut series = crw_evolve(&d0, &omega, config.steps)?;
                    series.meta.initial = Some(run.initial.describe());
                    (series, None)
                }
                WalkerSpec::Quantum { coin } => {
                    let coins = CoinAssignment::of_family(&network.table, *coin)?;
                    let table = network.table.clone();
                    let s0 = match run.initial {
                        InitialSpec::Localized { node, coin_label } => {
                            BlockState::localized(table, node, coin_label)?
                        }
                        InitialSpec::UniformCoin { node } => {
                            BlockState::uniform_superposition(table, node)?
                        }
                        InitialSpec::PhasedCoin { node } => {
                            BlockState::phased_superposition(table, node)?
                        }
                        _ => unreachable!("validated quantum pointwise run"),
                    };
                    let mut series = evolve(&s0, &coins, config.steps, None)?;
                    series.meta.initial = Some(run.initial.describe());
                    (series, Some((s0, coins)))
                }
            };

        for analysis in &config.analyses {
            match analysis {
                AnalysisSpec::Series => {
                    write_file(
                        out_dir,
                        &format!("{}_series.csv", run.label),
                        &series.to_csv(),
                        &mut outputs,
                    )?;
                }
                AnalysisSpec::LayerProb => {
                    let layers = layer_probability(&series, &network.membership)?;
                    write_file(
                        out_dir,
                        &format!("{}_layers.csv", run.label),
                        &layers.to_csv(),
                        &mut outputs,
                    )?;
                }
                AnalysisSpec::TimeAvg => {
                    let avg = time_avg_probability(&series);
                    write_file(
                        out_dir,
                        &format!("{}_time_avg.csv", run.label),
                        &distribution_csv("p_avg", &avg),
                        &mut outputs,
                    )?;
                }
                AnalysisSpec::Polya { grid_max, form } => {
                    let est = polya_curve(&series, start_node, &polya_grid(*grid_max), *form)?;
                    write_file(
                        out_dir,
                        &format!("{}_polya.csv", run.label),
                        &est.to_csv(),
                        &mut outputs,
                    )?;
                }
                AnalysisSpec::Heatmap => {}
                AnalysisSpec::Decoherence {
                    edges,
                    p_break,
                    trials,
                    archive_trials,
                } => {
                    let Some((s0, coins)) = &quantum_setup else {
                        continue; // classical runs have no coherence to lose
                    };
                    let breakable = resolve_breakable(edges, experiment);
                    let policy =
                        BrokenLinkPolicy::new(&network.table, &breakable, *p_break, config.seed)?;
                    let mc = broken_link_monte_carlo(
                        s0,
                        coins,
                        &policy,
                        *trials,
                        config.steps,
                        *archive_trials,
                    )?;
                    record.broken_edges = Some(breakable);
                    write_file(
                        out_dir,
                        &format!("{}_decoherence.csv", run.label),
                        &distribution_csv("p_mean", &mc.mean),
                        &mut outputs,
                    )?;
                    if let Some(per_trial) = &mc.per_trial {
                        let n = s0.support().vertex_count();
                        let mut text = String::from("trial");
                        for x in 1..=n {
                            text.push_str(&format!(",node_{x}"));
                        }
                        text.push('\n');
                        for (k, dist) in per_trial.iter().enumerate() {
                            text.push_str(&k.to_string());
                            for p in dist {
                                text.push_str(&format!(",{p}"));
                            }
                            text.push('\n');
                        }
                        write_file(
                            out_dir,
                            &format!("{}_trials.csv", run.label),
                            &text,
                            &mut outputs,
                        )?;
                    }
                }
            }
        }
        run_records.push(record);
    }

    let config_json = super::to_json(config)?;
    let summary = RunSummary {
        name: config.name.clone(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        config_hash: hex_digest(&config_json),
        seed: config.seed,
        steps: config.steps,
        network: NetworkSummary {
            nodes: network.graph.vertex_count(),
            edges: network.graph.edge_count(),
            layer_count: network.membership.layer_count(),
            layers: network.layer_details.clone(),
            interlayer_edge_count: network.interlayer_edges.len(),
            state_backend: match StateBackend::auto(&network.table) {
                StateBackend::Dense => "dense".to_string(),
                StateBackend::ArcList => "arc_list".to_string(),
            },
        },
        runs: run_records,
        outputs,
        config: config.clone(),
    };
    let mut summary_json = serde_json::to_string_pretty(&summary)
        .map_err(|e| crate::error::Error::Parse(e.to_string()))?;
    summary_json.push('\n');
    std::fs::write(out_dir.join("summary.json"), summary_json)?;
    Ok(summary)
}

fn hex_digest(text: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;
    use crate::analysis::PolyaForm;
    use crate::coin::CoinFamily;

    fn full_config() -> ExperimentConfig {
        ExperimentConfig {
            name: "runner-test".into(),
            steps: 20,
            seed: 3,
            output: None,
            network: NetworkSpec::Toy,
            runs: vec![
                RunSpec {
                    label: "crw".into(),
                    walker: WalkerSpec::Classical,
                    initial: InitialSpec::Node { node: 1 },
                },
                RunSpec {
                    label: "fourier".into(),
                    walker: WalkerSpec::Quantum {
                        coin: CoinFamily::Fourier,
                    },
                    initial: InitialSpec::Localized {
                        node: 1,
                        coin_label: 2,
                    },
                },
                RunSpec {
                    label: "sweep".into(),
                    walker: WalkerSpec::Quantum {
                        coin: CoinFamily::Grover,
                    },
                    initial: InitialSpec::Sweep {
                        family: SweepInit::UniformCoin,
                    },
                },
            ],
            analyses: vec![
                AnalysisSpec::Series,
                AnalysisSpec::LayerProb,
                AnalysisSpec::TimeAvg,
                AnalysisSpec::Heatmap,
                AnalysisSpec::Polya {
                    grid_max: 20,
                    form: PolyaForm::Product,
                },
                AnalysisSpec::Decoherence {
                    edges: EdgeSelector::Explicit {
                        edges: vec![(1, 3)],
                    },
                    p_break: 0.5,
                    trials: 4,
                    archive_trials: true,
                },
            ],
        }
    }

    #[test]
    fn runner_writes_expected_files() {
        let dir = tempfile::tempdir().unwrap();
        let validated = validate(&full_config()).unwrap();
        let summary = run(&validated, dir.path()).unwrap();
        let expected = [
            "crw_series.csv",
            "crw_layers.csv",
            "crw_time_avg.csv",
            "crw_polya.csv",
            "fourier_series.csv",
            "fourier_layers.csv",
            "fourier_time_avg.csv",
            "fourier_polya.csv",
            "fourier_decoherence.csv",
            "fourier_trials.csv",
            "sweep_heatmap.csv",
            "sweep_heatmap.json",
        ];
        for name in expected {
            assert!(dir.path().join(name).exists(), "{name} missing");
            assert!(
                summary.outputs.contains(&name.to_string()),
                "{name} not recorded"
            );
        }
        assert!(dir.path().join("summary.json").exists());
        assert_eq!(summary.network.nodes, 8);
        assert_eq!(summary.runs[1].broken_edges, Some(vec![(1, 3)]));
        // The summary parses back and echoes the config.
        let text = std::fs::read_to_string(dir.path().join("summary.json")).unwrap();
        let parsed: RunSummary = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.config, full_config());
        assert_eq!(parsed.config_hash.len(), 64);
    }

    #[test]
    fn reruns_are_byte_identical() {
        let dir_a = tempfile::tempdir().unwrap();
        let dir_b = tempfile::tempdir().unwrap();
        let validated = validate(&full_config()).unwrap();
        run(&validated, dir_a.path()).unwrap();
        run(&validated, dir_b.path()).unwrap();
        for entry in std::fs::read_dir(dir_a.path()).unwrap() {
            let name = entry.unwrap().file_name();
            let a = std::fs::read(dir_a.path().join(&name)).unwrap();
            let b = std::fs::read(dir_b.path().join(&name)).unwrap();
            assert_eq!(a, b, "{name:?} differs between reruns");
        }
    }

    #[test]
    fn empty_analyses_writes_summary_only() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = full_config();
        config.analyses.clear();
        let validated = validate(&config).unwrap();
        let summary = run(&validated, dir.path()).unwrap();
        assert!(summary.outputs.is_empty());
        let entries: Vec<_> = std::fs::read_dir(dir.path())
            .unwrap()
            .map(|e| e.unwrap().file_name().into_string().unwrap())
            .collect();
        assert_eq!(entries, vec!["summary.json"]);
    }

    #[test]
    fn random_edge_selection_is_deterministic_and_in_scope() {
        let mut config = full_config();
        config.analyses = vec![AnalysisSpec::Decoherence {
            edges: EdgeSelector::Random {
                count: 3,
                scope: EdgeScope::Intralayer,
            },
            p_break: 0.2,
            trials: 2,
            archive_trials: false,
        }];
        let validated = validate(&config).unwrap();
        let selector = EdgeSelector::Random {
            count: 3,
            scope: EdgeScope::Intralayer,
        };
        let a = resolve_breakable(&selector, &validated);
        let b = resolve_breakable(&selector, &validated);
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
        let intra = eligible_edges(&validated.network, EdgeScope::Intralayer);
        assert!(a.iter().all(|e| intra.contains(e)));
    }
}
