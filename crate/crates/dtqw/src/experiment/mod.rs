//! Declarative experiment runner: parse a config, build the network,
//! run the walkers, emit CSV/JSON outputs.
//!
//! Configs are accepted in two equivalent encodings, TOML for hand
//! editing and JSON for machine generation. Outputs are deterministic:
//! identical config and seed give byte-identical files.

pub mod presets;
mod runner;

pub use runner::{run, NetworkSummary, RunRecord, RunSummary};

use crate::analysis::{PolyaForm, SweepInit};
use crate::coin::CoinFamily;
use crate::error::{Error, Result};
use crate::graph::{Graph, NeighborTable};
use crate::multilayer::{LayerMembership, MultilayerNetwork};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};
use std::sync::Arc;

/// Environment variable naming the default output root directory.
pub const OUTPUT_ROOT_ENV: &str = "DTQW_OUT";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub name: String,
    pub steps: usize,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    pub network: NetworkSpec,
    #[serde(default)]
    pub runs: Vec<RunSpec>,
    #[serde(default)]
    pub analyses: Vec<AnalysisSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum NetworkSpec {
    /// The built-in 8-node two-layer multiplex (complete + 4-cycle).
    Toy,
    /// Edge-list or sectioned multilayer file; the format is sniffed.
    File { path: String },
    /// Identity-coupled multiplex of generated layers.
    Multiplex { layers: Vec<LayerSpec> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum LayerSpec {
    Complete {
        n: usize,
    },
    Star {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    ScaleFree {
        n: usize,
        m_attach: usize,
        seed: u64,
    },
}

impl LayerSpec {
    pub fn build(&self) -> Result<Graph> {
        use crate::multilayer::generators;
        match *self {
            LayerSpec::Complete { n } => generators::complete(n),
            LayerSpec::Star { n } => generators::star(n),
            LayerSpec::Cycle { n } => generators::cycle(n),
            LayerSpec::ScaleFree { n, m_attach, seed } => generators::scale_free(n, m_attach, seed),
        }
    }

    pub fn describe(&self) -> String {
        match *self {
            LayerSpec::Complete { n } => format!("complete({n})"),
            LayerSpec::Star { n } => format!("star({n})"),
            LayerSpec::Cycle { n } => format!("cycle({n})"),
            LayerSpec::ScaleFree { n, m_attach, seed } => {
                format!("scale_free({n}, m_attach={m_attach}, seed={seed})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSpec {
    pub label: String,
    pub walker: WalkerSpec,
    pub initial: InitialSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum WalkerSpec {
    Classical,
    Quantum { coin: CoinFamily },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum InitialSpec {
    /// Classical delta distribution at a node.
    Node { node: usize },
    /// Quantum walker at `node` pointing along the edge to `coin_label`.
    Localized { node: usize, coin_label: usize },
    /// Uniform coin superposition at `node`.
    #[serde(rename = "phi1")]
    UniformCoin { node: usize },
    /// Phased coin superposition at `node`.
    #[serde(rename = "phi2")]
    PhasedCoin { node: usize },
    /// One walk per start node; consumed by the heatmap analysis.
    Sweep { family: SweepInit },
}

impl InitialSpec {
    pub fn describe(&self) -> String {
        match *self {
            InitialSpec::Node { node } => format!("node({node})"),
            InitialSpec::Localized { node, coin_label } => {
                format!("localized({node},{coin_label})")
            }
            InitialSpec::UniformCoin { node } => format!("phi1({node})"),
            InitialSpec::PhasedCoin { node } => format!("phi2({node})"),
            InitialSpec::Sweep { family } => format!("sweep({})", family.name()),
        }
    }

    pub fn start_node(&self) -> Option<usize> {
        match *self {
            InitialSpec::Node { node }
            | InitialSpec::Localized { node, .. }
            | InitialSpec::UniformCoin { node }
            | InitialSpec::PhasedCoin { node } => Some(node),
            InitialSpec::Sweep { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AnalysisSpec {
    /// Full probability series CSV per run.
    Series,
    /// Per-layer occupation trace CSV per run.
    LayerProb,
    /// Time-averaged distribution CSV per run.
    TimeAvg,
    /// Start-by-target matrix; applies to sweep runs.
    Heatmap,
    /// Truncated recurrence curve on the grid `{1, 5, ..., grid_max}`.
    Polya {
        grid_max: usize,
        #[serde(default = "default_polya_form")]
        form: PolyaForm,
    },
    /// Broken-link Monte Carlo mean over `trials` evolutions.
    Decoherence {
        edges: EdgeSelector,
        p_break: f64,
        trials: usize,
        #[serde(default)]
        archive_trials: bool,
    },
}

fn default_polya_form() -> PolyaForm {
    PolyaForm::Product
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum EdgeSelector {
    /// A fixed breakable edge set, global labels.
    Explicit { edges: Vec<(usize, usize)> },
    /// `count` distinct edges drawn uniformly from the given scope with
    /// the experiment seed (stream `u64::MAX`).
    Random { count: usize, scope: EdgeScope },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeScope {
    Any,
    Intralayer,
    Interlayer,
}

/// Parse a config from TOML or JSON; JSON is detected by a leading `{`.
pub fn parse_config(text: &str) -> Result<ExperimentConfig> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        serde_json::from_str(trimmed).map_err(|e| Error::Parse(format!("json config: {e}")))
    } else {
        toml::from_str(text).map_err(|e| Error::Parse(format!("toml config: {e}")))
    }
}

pub fn load_config(path: &Path) -> Result<ExperimentConfig> {
    let text = std::fs::read_to_string(path)?;
    parse_config(&text)
}

pub fn to_toml(config: &ExperimentConfig) -> Result<String> {
    toml::to_string(config).map_err(|e| Error::Parse(format!("toml encode: {e}")))
}

pub fn to_json(config: &ExperimentConfig) -> Result<String> {
    serde_json::to_string_pretty(config).map_err(|e| Error::Parse(format!("json encode: {e}")))
}

/// A network built from its spec, with everything the runner needs.
#[derive(Debug)]
pub struct BuiltNetwork {
    pub graph: Graph,
    pub table: Arc<NeighborTable>,
    pub membership: LayerMembership,
    /// One `(kind, n, m)` description per layer, for the summary.
    pub layer_details: Vec<(String, usize, usize)>,
    /// Interlayer edges in global labels; empty for single-layer graphs.
    pub interlayer_edges: Vec<(usize, usize)>,
}

impl BuiltNetwork {
    fn from_multilayer(m: &MultilayerNetwork, details: Vec<String>) -> Self {
        let graph = m.supra_adjacency();
        let table = Arc::new(graph.neighbor_table());
        let membership = m.membership();
        let layer_details = m
            .layers()
            .iter()
            .zip(details)
            .map(|(g, kind)| (kind, g.vertex_count(), g.edge_count()))
            .collect();
        let mut interlayer_edges = Vec::new();
        for c in m.couplings() {
            for &(i, j) in &c.edges {
                interlayer_edges
                    .push((m.global_label(c.layers.0, i), m.global_label(c.layers.1, j)));
            }
        }
        BuiltNetwork {
            graph,
            table,
            membership,
            layer_details,
            interlayer_edges,
        }
    }

    fn from_graph(graph: Graph, kind: String) -> Self {
        let table = Arc::new(graph.neighbor_table());
        let membership = LayerMembership::single(graph.vertex_count());
        let layer_details = vec![(kind, graph.vertex_count(), graph.edge_count())];
        BuiltNetwork {
            graph,
            table,
            membership,
            layer_details,
            interlayer_edges: Vec::new(),
        }
    }
}

pub fn build_network(spec: &NetworkSpec) -> Result<BuiltNetwork> {
    match spec {
        NetworkSpec::Toy => {
            let m = crate::multilayer::toy_multiplex();
            Ok(BuiltNetwork::from_multilayer(
                &m,
                vec!["complete(4)".into(), "cycle(4)".into()],
            ))
        }
        NetworkSpec::Multiplex { layers } => {
            if layers.is_empty() {
                return Err(Error::config("network.layers", "no layers given"));
            }
            let graphs = layers
                .iter()
                .map(LayerSpec::build)
                .collect::<Result<Vec<_>>>()?;
            let details = layers.iter().map(LayerSpec::describe).collect();
            if graphs.len() == 1 {
                let m = MultilayerNetwork::general(graphs, vec![])?;
                Ok(BuiltNetwork::from_multilayer(&m, details))
            } else {
                let m = MultilayerNetwork::multiplex(graphs)?;
                Ok(BuiltNetwork::from_multilayer(&m, details))
            }
        }
        NetworkSpec::File { path } => {
            let text = std::fs::read_to_string(path)?;
            if text.contains("[layer") {
                let m = MultilayerNetwork::parse(&text)?;
                let details = (1..=m.layer_count())
                    .map(|a| format!("file layer {a}"))
                    .collect();
                Ok(BuiltNetwork::from_multilayer(&m, details))
            } else {
                Ok(BuiltNetwork::from_graph(
                    Graph::from_edge_list(&text)?,
                    format!("file {path}"),
                ))
            }
        }
    }
}

/// A config checked against the network it names. Construction performs
/// every validation, so `run` starts from a clean slate.
#[derive(Debug)]
pub struct ValidatedExperiment {
    pub config: ExperimentConfig,
    pub network: BuiltNetwork,
}

fn label_ok(label: &str) -> bool {
    !label.is_empty()
        && label
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_')
}

pub fn validate(config: &ExperimentConfig) -> Result<ValidatedExperiment> {
    if config.name.is_empty() {
        return Err(Error::config("name", "must not be empty"));
    }
    let network = build_network(&config.network)?;
    let table = &network.table;
    let n = table.vertex_count();

    let mut labels = std::collections::HashSet::new();
    for (idx, run) in config.runs.iter().enumerate() {
        let field = format!("runs[{idx}]");
        if !label_ok(&run.label) {
            return Err(Error::config(
                &field,
                format!("label `{}` must be nonempty [A-Za-z0-9_-]", run.label),
            ));
        }
        if !labels.insert(run.label.clone()) {
            return Err(Error::config(
                &field,
                format!("duplicate label `{}`", run.label),
            ));
        }
        if let Some(node) = run.initial.start_node() {
            if node < 1 || node > n {
                return Err(Error::config(
                    &field,
                    format!("start node {node} out of range 1..={n}"),
                ));
            }
        }
        if let Some(x) = (1..=n).find(|&x| table.degree(x) == 0) {
            return Err(Error::config(
                &field,
                format!("network has isolated vertex {x}; no walk is defined there"),
            ));
        }
        match (&run.walker, &run.initial) {
            (WalkerSpec::Classical, InitialSpec::Node { .. }) => {}
            (WalkerSpec::Classical, InitialSpec::Sweep { family }) => {
                if *family != SweepInit::Classical {
                    return Err(Error::config(
                        &field,
                        "classical walker sweeps must use family = classical",
                    ));
                }
            }
            (WalkerSpec::Classical, other) => {
                return Err(Error::config(
                    &field,
                    format!(
                        "classical walker takes a plain node start, not {}",
                        other.describe()
                    ),
                ));
            }
            (WalkerSpec::Quantum { .. }, InitialSpec::Node { .. }) => {
                return Err(Error::config(
                    &field,
                    "quantum walker needs a coin state: localized, phi1 or phi2",
                ));
            }
            (WalkerSpec::Quantum { .. }, InitialSpec::Sweep { family }) => {
                if *family == SweepInit::Classical {
                    return Err(Error::config(
                        &field,
                        "quantum walker sweeps must use family phi1 or phi2",
                    ));
                }
                if *family == SweepInit::PhasedCoin {
                    if let Some(x) = (1..=n).find(|&x| table.degree(x) < 2) {
                        return Err(Error::config(
                            &field,
                            format!(
                                "phi2 sweep needs min degree 2, vertex {x} has {}",
                                table.degree(x)
                            ),
                        ));
                    }
                }
            }
            (WalkerSpec::Quantum { .. }, InitialSpec::Localized { node, coin_label }) => {
                if !table.is_adjacent(*node, *coin_label) {
                    return Err(Error::config(
                        &field,
                        format!("coin label {coin_label} is not a neighbor of node {node}"),
                    ));
                }
            }
            (WalkerSpec::Quantum { .. }, InitialSpec::PhasedCoin { node }) => {
                if table.degree(*node) < 2 {
                    return Err(Error::config(
                        &field,
                        format!("phi2 needs degree >= 2 at node {node}"),
                    ));
                }
            }
            (WalkerSpec::Quantum { .. }, InitialSpec::UniformCoin { .. }) => {}
        }
    }

    let has_sweep = config
        .runs
        .iter()
        .any(|r| matches!(r.initial, InitialSpec::Sweep { .. }));
    let has_quantum_pointwise = config.runs.iter().any(|r| {
        matches!(r.walker, WalkerSpec::Quantum { .. })
            && !matches!(r.initial, InitialSpec::Sweep { .. })
    });

    for (idx, analysis) in config.analyses.iter().enumerate() {
        let field = format!("analyses[{idx}]");
        match analysis {
            AnalysisSpec::Series | AnalysisSpec::LayerProb | AnalysisSpec::TimeAvg => {}
            AnalysisSpec::Heatmap => {
                if !has_sweep {
                    return Err(Error::config(
                        &field,
                        "heatmap analysis needs a run with a sweep initial state",
                    ));
                }
            }
            AnalysisSpec::Polya { grid_max, .. } => {
                if *grid_max < 1 {
                    return Err(Error::config(&field, "grid_max must be at least 1"));
                }
                if *grid_max > config.steps {
                    return Err(Error::config(
                        &field,
                        format!(
                            "grid_max {grid_max} exceeds the {} recorded steps",
                            config.steps
                        ),
                    ));
                }
            }
            AnalysisSpec::Decoherence {
                edges,
                p_break,
                trials,
                ..
            } => {
                if !(0.0..=1.0).contains(p_break) {
                    return Err(Error::config(
                        &field,
                        format!("p_break {p_break} outside [0, 1]"),
                    ));
                }
                if *trials < 1 {
                    return Err(Error::config(&field, "need at least one trial"));
                }
                if !has_quantum_pointwise {
                    return Err(Error::config(
                        &field,
                        "decoherence analysis needs a quantum run with a pointwise initial state",
                    ));
                }
                match edges {
                    EdgeSelector::Explicit { edges } => {
                        if edges.is_empty() {
                            return Err(Error::config(&field, "empty breakable edge set"));
                        }
                        for &(i, j) in edges {
                            if !table.is_adjacent(i, j) {
                                return Err(Error::config(
                                    &field,
                                    format!("({i}, {j}) is not an edge of the network"),
                                ));
                            }
                        }
                    }
                    EdgeSelector::Random { count, scope } => {
                        let eligible = eligible_edges(&network, *scope);
                        if *count < 1 || *count > eligible.len() {
                            return Err(Error::config(
                                &field,
                                format!(
                                    "count {count} outside 1..={} eligible {:?} edges",
                                    eligible.len(),
                                    scope
                                ),
                            ));
                        }
                    }
                }
            }
        }
    }

    Ok(ValidatedExperiment {
        config: config.clone(),
        network,
    })
}

/// Edges of the flattened network that fall in the given scope.
pub fn eligible_edges(network: &BuiltNetwork, scope: EdgeScope) -> Vec<(usize, usize)> {
    network
        .graph
        .edges()
        .iter()
        .copied()
        .filter(|&(i, j)| match scope {
            EdgeScope::Any => true,
            EdgeScope::Intralayer => {
                network.membership.layer_of(i) == network.membership.layer_of(j)
            }
            EdgeScope::Interlayer => {
                network.membership.layer_of(i) != network.membership.layer_of(j)
            }
        })
        .collect()
}

/// Output directory precedence: explicit override, then the config's
/// `output` field, then `$DTQW_OUT/<name>`, then `./out/<name>`.
pub fn resolve_output_dir(config: &ExperimentConfig, cli_out: Option<&Path>) -> PathBuf {
    if let Some(dir) = cli_out {
        return dir.to_path_buf();
    }
    if let Some(dir) = &config.output {
        return PathBuf::from(dir);
    }
    let root = std::env::var(OUTPUT_ROOT_ENV).unwrap_or_else(|_| "out".to_string());
    Path::new(&root).join(&config.name)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_config() -> ExperimentConfig {
        ExperimentConfig {
            name: "demo".into(),
            steps: 10,
            seed: 7,
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
                        coin_label: 3,
                    },
                },
            ],
            analyses: vec![AnalysisSpec::Series, AnalysisSpec::LayerProb],
        }
    }

    #[test]
    fn toml_and_json_round_trip() {
        let config = base_config();
        let toml_text = to_toml(&config).unwrap();
        assert_eq!(parse_config(&toml_text).unwrap(), config);
        let json_text = to_json(&config).unwrap();
        assert_eq!(parse_config(&json_text).unwrap(), config);
    }

    #[test]
    fn toml_wire_format_is_stable() {
        let mut config = base_config();
        config.analyses.push(AnalysisSpec::Polya {
            grid_max: 10,
            form: PolyaForm::Product,
        });
        config.analyses.push(AnalysisSpec::Decoherence {
            edges: EdgeSelector::Explicit {
                edges: vec![(1, 3)],
            },
            p_break: 0.5,
            trials: 4,
            archive_trials: false,
        });
        let text = to_toml(&config).unwrap();
        assert!(text.contains("kind = \"toy\""), "got:\n{text}");
        assert!(text.contains("[[runs]]"), "got:\n{text}");
        assert_eq!(parse_config(&text).unwrap(), config);
    }

    #[test]
    fn phi_tokens_in_wire_format() {
        let config = ExperimentConfig {
            name: "sweep".into(),
            steps: 5,
            seed: 1,
            output: None,
            network: NetworkSpec::Toy,
            runs: vec![RunSpec {
                label: "grover".into(),
                walker: WalkerSpec::Quantum {
                    coin: CoinFamily::Grover,
                },
                initial: InitialSpec::PhasedCoin { node: 1 },
            }],
            analyses: vec![],
        };
        let text = to_toml(&config).unwrap();
        assert!(text.contains("kind = \"phi2\""), "got:\n{text}");
        assert_eq!(parse_config(&text).unwrap(), config);
    }

    #[test]
    fn validate_accepts_base_config() {
        let v = validate(&base_config()).unwrap();
        assert_eq!(v.network.graph.vertex_count(), 8);
        assert_eq!(v.network.interlayer_edges.len(), 4);
    }

    #[test]
    fn validate_rejects_bad_runs() {
        let mut c = base_config();
        c.runs[1].initial = InitialSpec::Localized {
            node: 1,
            coin_label: 6,
        };
        assert!(matches!(validate(&c), Err(Error::Config { .. })));

        let mut c = base_config();
        c.runs[0].initial = InitialSpec::Node { node: 9 };
        assert!(matches!(validate(&c), Err(Error::Config { .. })));

        let mut c = base_config();
        c.runs[1].label = "crw".into();
        assert!(matches!(validate(&c), Err(Error::Config { .. })));

        let mut c = base_config();
        c.runs[0].initial = InitialSpec::UniformCoin { node: 1 };
        assert!(matches!(validate(&c), Err(Error::Config { .. })));
    }

    #[test]
    fn validate_rejects_phi2_sweep_on_degree_one_network() {
        let mut c = base_config();
        c.network = NetworkSpec::Multiplex {
            layers: vec![LayerSpec::Star { n: 4 }, LayerSpec::Star { n: 4 }],
        };
        c.runs = vec![RunSpec {
            label: "sweep".into(),
            walker: WalkerSpec::Quantum {
                coin: CoinFamily::Grover,
            },
            initial: InitialSpec::Sweep {
                family: SweepInit::PhasedCoin,
            },
        }];
        c.analyses = vec![AnalysisSpec::Heatmap];
        // Star leaves have degree 2 after the identity coupling, so this
        // passes...
        assert!(validate(&c).is_ok());
        // ...but a single star layer keeps its degree-1 leaves.
        c.network = NetworkSpec::Multiplex {
            layers: vec![LayerSpec::Star { n: 4 }],
        };
        let err = validate(&c);
        assert!(matches!(err, Err(Error::Config { .. })), "{err:?}");
    }

    #[test]
    fn validate_rejects_bad_analyses() {
        let mut c = base_config();
        c.analyses = vec![AnalysisSpec::Heatmap];
        assert!(matches!(validate(&c), Err(Error::Config { .. })));

        let mut c = base_config();
        c.analyses = vec![AnalysisSpec::Polya {
            grid_max: 50,
            form: PolyaForm::Product,
        }];
        assert!(matches!(validate(&c), Err(Error::Config { .. })));

        let mut c = base_config();
        c.analyses = vec![AnalysisSpec::Decoherence {
            edges: EdgeSelector::Explicit {
                edges: vec![(1, 6)],
            },
            p_break: 0.5,
            trials: 2,
            archive_trials: false,
        }];
        assert!(matches!(validate(&c), Err(Error::Config { .. })));

        let mut c = base_config();
        c.analyses = vec![AnalysisSpec::Decoherence {
            edges: EdgeSelector::Random {
                count: 100,
                scope: EdgeScope::Interlayer,
            },
            p_break: 0.5,
            trials: 2,
            archive_trials: false,
        }];
        assert!(matches!(validate(&c), Err(Error::Config { .. })));
    }

    #[test]
    fn eligible_edges_by_scope() {
        let network = build_network(&NetworkSpec::Toy).unwrap();
        assert_eq!(eligible_edges(&network, EdgeScope::Any).len(), 14);
        assert_eq!(eligible_edges(&network, EdgeScope::Intralayer).len(), 10);
        let inter = eligible_edges(&network, EdgeScope::Interlayer);
        assert_eq!(inter, vec![(1, 5), (2, 6), (3, 7), (4, 8)]);
    }

    #[test]
    fn output_dir_resolution() {
        let mut c = base_config();
        assert_eq!(
            resolve_output_dir(&c, Some(Path::new("explicit"))),
            PathBuf::from("explicit")
        );
        c.output = Some("from-config".into());
        assert_eq!(resolve_output_dir(&c, None), PathBuf::from("from-config"));
    }

    #[test]
    fn file_network_sniffs_format() {
        let dir = tempfile::tempdir().unwrap();
        let plain = dir.path().join("plain.edges");
        std::fs::write(&plain, "n 3\n1 2\n2 3\n").unwrap();
        let net = build_network(&NetworkSpec::File {
            path: plain.to_string_lossy().into_owned(),
        })
        .unwrap();
        assert_eq!(net.graph.vertex_count(), 3);
        assert_eq!(net.membership.layer_count(), 1);

        let layered = dir.path().join("layered.net");
        std::fs::write(
            &layered,
            "multiplex\n[layer 1]\nn 2\n1 2\n[layer 2]\nn 2\n1 2\n",
        )
        .unwrap();
        let net = build_network(&NetworkSpec::File {
            path: layered.to_string_lossy().into_owned(),
        })
        .unwrap();
        assert_eq!(net.graph.vertex_count(), 4);
        assert_eq!(net.membership.layer_count(), 2);
        assert_eq!(net.interlayer_edges, vec![(1, 3), (2, 4)]);
    }
}
