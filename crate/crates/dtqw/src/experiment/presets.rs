//! Named, ready-to-run experiment presets at desk scale.
//!
//! A preset bundles one or more configs: the synthetic-network presets
//! carry one config per layer combination. Every config is overridable
//! on the command line (seed, steps, trials, output directory).

use super::{
    AnalysisSpec, EdgeSelector, ExperimentConfig, InitialSpec, LayerSpec, NetworkSpec, RunSpec,
    WalkerSpec,
};
use crate::analysis::{PolyaForm, SweepInit};
use crate::coin::CoinFamily;

/// Default seed for preset runs; override with `--seed`.
pub const DEFAULT_SEED: u64 = 7;

/// Layer node count of the synthetic multiplexes.
pub const SYNTHETIC_LAYER_NODES: usize = 50;

/// Attachment count of the scale-free generator; logged in every
/// summary because it materially shapes the layer.
pub const SCALE_FREE_ATTACH: usize = 2;

#[derive(Debug, Clone)]
pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
    pub configs: Vec<ExperimentConfig>,
}

fn classical_run(label: &str, node: usize) -> RunSpec {
    RunSpec {
        label: label.into(),
        walker: WalkerSpec::Classical,
        initial: InitialSpec::Node { node },
    }
}

fn quantum_run(label: &str, coin: CoinFamily, initial: InitialSpec) -> RunSpec {
    RunSpec {
        label: label.into(),
        walker: WalkerSpec::Quantum { coin },
        initial,
    }
}

fn sweep_run(label: &str, walker: WalkerSpec, family: SweepInit) -> RunSpec {
    RunSpec {
        label: label.into(),
        walker,
        initial: InitialSpec::Sweep { family },
    }
}

fn config(name: &str, network: NetworkSpec, steps: usize) -> ExperimentConfig {
    ExperimentConfig {
        name: name.into(),
        steps,
        seed: DEFAULT_SEED,
        output: None,
        network,
        runs: Vec::new(),
        analyses: Vec::new(),
    }
}

fn sf_layer(seed: u64) -> LayerSpec {
    LayerSpec::ScaleFree {
        n: SYNTHETIC_LAYER_NODES,
        m_attach: SCALE_FREE_ATTACH,
        seed,
    }
}

fn cp_layer() -> LayerSpec {
    LayerSpec::Complete {
        n: SYNTHETIC_LAYER_NODES,
    }
}

fn star_layer() -> LayerSpec {
    LayerSpec::Star {
        n: SYNTHETIC_LAYER_NODES,
    }
}

/// The six two-layer synthetic multiplexes: every pairing of scale-free,
/// complete and star layers. The sf-sf pairing uses two different
/// generator seeds.
pub fn synthetic_networks() -> Vec<(&'static str, NetworkSpec)> {
    vec![
        (
            "sf-sf",
            NetworkSpec::Multiplex {
                layers: vec![sf_layer(1), sf_layer(2)],
            },
        ),
        (
            "sf-cp",
            NetworkSpec::Multiplex {
                layers: vec![sf_layer(1), cp_layer()],
            },
        ),
        (
            "sf-star",
            NetworkSpec::Multiplex {
                layers: vec![sf_layer(1), star_layer()],
            },
        ),
        (
            "cp-cp",
            NetworkSpec::Multiplex {
                layers: vec![cp_layer(), cp_layer()],
            },
        ),
        (
            "cp-star",
            NetworkSpec::Multiplex {
                layers: vec![cp_layer(), star_layer()],
            },
        ),
        (
            "star-star",
            NetworkSpec::Multiplex {
                layers: vec![star_layer(), star_layer()],
            },
        ),
    ]
}

fn heatmap_preset(
    name: &'static str,
    description: &'static str,
    walker: WalkerSpec,
    family: SweepInit,
) -> Preset {
    let mut c = config(name, NetworkSpec::Toy, 100);
    c.runs = vec![sweep_run("sweep", walker, family)];
    c.analyses = vec![AnalysisSpec::Heatmap];
    Preset {
        name,
        description,
        configs: vec![c],
    }
}

pub fn all() -> Vec<Preset> {
    let mut presets = Vec::new();

    let mut fig2 = config("fig2", NetworkSpec::Toy, 100);
    fig2.runs = vec![
        classical_run("crw", 1),
        quantum_run(
            "fourier-c3",
            CoinFamily::Fourier,
            InitialSpec::Localized {
                node: 1,
                coin_label: 3,
            },
        ),
        quantum_run(
            "fourier-c5",
            CoinFamily::Fourier,
            InitialSpec::Localized {
                node: 1,
                coin_label: 5,
            },
        ),
    ];
    fig2.analyses = vec![AnalysisSpec::LayerProb];
    presets.push(Preset {
        name: "fig2",
        description: "Layer occupation traces on the toy multiplex, 100 steps: classical \
                      walker from node 1 and Fourier walkers started along coins 3 and 5.",
        configs: vec![fig2],
    });

    presets.push(heatmap_preset(
        "fig3a",
        "Start-by-target heatmap on the toy multiplex: classical walker, distribution \
         after 100 steps.",
        WalkerSpec::Classical,
        SweepInit::Classical,
    ));
    presets.push(heatmap_preset(
        "fig3b",
        "Start-by-target heatmap on the toy multiplex: Fourier walker from the uniform \
         coin superposition, 100-step time average.",
        WalkerSpec::Quantum {
            coin: CoinFamily::Fourier,
        },
        SweepInit::UniformCoin,
    ));
    presets.push(heatmap_preset(
        "fig3c",
        "Start-by-target heatmap on the toy multiplex: Grover walker from the uniform \
         coin superposition, 100-step time average.",
        WalkerSpec::Quantum {
            coin: CoinFamily::Grover,
        },
        SweepInit::UniformCoin,
    ));
    presets.push(heatmap_preset(
        "fig3d",
        "Start-by-target heatmap on the toy multiplex: Fourier walker from the phased \
         coin superposition, 100-step time average.",
        WalkerSpec::Quantum {
            coin: CoinFamily::Fourier,
        },
        SweepInit::PhasedCoin,
    ));
    presets.push(heatmap_preset(
        "fig3e",
        "Start-by-target heatmap on the toy multiplex: Grover walker from the phased \
         coin superposition, 100-step time average.",
        WalkerSpec::Quantum {
            coin: CoinFamily::Grover,
        },
        SweepInit::PhasedCoin,
    ));

    let mut fig4 = config("fig4", NetworkSpec::Toy, 200);
    fig4.runs = vec![
        classical_run("crw", 1),
        quantum_run(
            "fourier",
            CoinFamily::Fourier,
            InitialSpec::UniformCoin { node: 1 },
        ),
        quantum_run(
            "grover",
            CoinFamily::Grover,
            InitialSpec::UniformCoin { node: 1 },
        ),
    ];
    fig4.analyses = vec![AnalysisSpec::Polya {
        grid_max: 200,
        form: PolyaForm::Product,
    }];
    presets.push(Preset {
        name: "fig4",
        description: "Truncated recurrence curves (product form, cutoffs 1,5,...,200) for \
                      classical, Fourier and Grover walkers from node 1 on the toy multiplex.",
        configs: vec![fig4],
    });

    let mut fig5 = config("fig5", NetworkSpec::Toy, 100);
    fig5.runs = vec![
        classical_run("crw", 1),
        quantum_run(
            "fourier",
            CoinFamily::Fourier,
            InitialSpec::Localized {
                node: 1,
                coin_label: 2,
            },
        ),
    ];
    fig5.analyses = vec![
        AnalysisSpec::Series,
        AnalysisSpec::Decoherence {
            edges: EdgeSelector::Explicit {
                edges: vec![(1, 3)],
            },
            p_break: 0.5,
            trials: 1000,
            archive_trials: false,
        },
    ];
    presets.push(Preset {
        name: "fig5",
        description: "Broken-link decoherence on the toy multiplex: edge (1,3) broken with \
                      probability 0.5 each step, Fourier mean over 1000 trials at 100 steps, \
                      with classical and unbroken baselines.",
        configs: vec![fig5],
    });

    let fourier_layers: Vec<ExperimentConfig> = synthetic_networks()
        .into_iter()
        .map(|(tag, network)| {
            let mut c = config(&format!("fig6-{tag}"), network, 100);
            c.runs = vec![quantum_run(
                "fourier",
                CoinFamily::Fourier,
                InitialSpec::UniformCoin { node: 1 },
            )];
            c.analyses = vec![AnalysisSpec::LayerProb];
            c
        })
        .collect();
    presets.push(Preset {
        name: "fig6",
        description: "Fourier layer occupation from node 1 on the six 100-node synthetic \
                      multiplexes (scale-free, complete, star pairings), 100 steps.",
        configs: fourier_layers,
    });

    let grover_layers: Vec<ExperimentConfig> = synthetic_networks()
        .into_iter()
        .map(|(tag, network)| {
            // The strongly periodic pairings get a longer horizon.
            let steps = if tag == "cp-cp" || tag == "star-star" {
                200
            } else {
                100
            };
            let mut c = config(&format!("fig7-{tag}"), network, steps);
            c.runs = vec![quantum_run(
                "grover",
                CoinFamily::Grover,
                InitialSpec::UniformCoin { node: 1 },
            )];
            c.analyses = vec![AnalysisSpec::LayerProb];
            c
        })
        .collect();
    presets.push(Preset {
        name: "fig7",
        description: "Grover layer occupation from node 1 on the six synthetic multiplexes; \
                      cp-cp and star-star extended to 200 steps to expose their oscillation.",
        configs: grover_layers,
    });

    let polya_synthetics: Vec<ExperimentConfig> = synthetic_networks()
        .into_iter()
        .map(|(tag, network)| {
            let mut c = config(&format!("fig8-{tag}"), network, 100);
            c.runs = vec![
                classical_run("crw", 1),
                quantum_run(
                    "fourier",
                    CoinFamily::Fourier,
                    InitialSpec::UniformCoin { node: 1 },
                ),
                quantum_run(
                    "grover",
                    CoinFamily::Grover,
                    InitialSpec::UniformCoin { node: 1 },
                ),
            ];
            c.analyses = vec![AnalysisSpec::Polya {
                grid_max: 100,
                form: PolyaForm::Product,
            }];
            c
        })
        .collect();
    presets.push(Preset {
        name: "fig8",
        description: "Truncated recurrence curves (product form, cutoffs 1,5,...,100) for \
                      classical, Fourier and Grover walkers on the six synthetic multiplexes.",
        configs: polya_synthetics,
    });

    let classical_synthetics: Vec<ExperimentConfig> = synthetic_networks()
        .into_iter()
        .map(|(tag, network)| {
            let mut c = config(&format!("appendix-c-{tag}"), network, 100);
            c.runs = vec![classical_run("crw", 1)];
            c.analyses = vec![AnalysisSpec::LayerProb];
            c
        })
        .collect();
    presets.push(Preset {
        name: "appendix-c",
        description: "Classical layer occupation baselines from node 1 on the six synthetic \
                      multiplexes, 100 steps.",
        configs: classical_synthetics,
    });

    presets
}

pub fn find(name: &str) -> Option<Preset> {
    all().into_iter().find(|p| p.name == name)
}
