//! Discrete-time quantum walks and classical random walks on undirected
//! graphs and multilayer networks.
//!
//! The quantum walker's wave function lives on the directed arcs of a
//! graph and is stored as a complex amplitude matrix over the adjacency
//! support ([`state::BlockState`]). One step applies a per-vertex
//! unitary coin to each row, then the arc-reversal shift (a transpose on
//! the support); the global evolution operator is never materialized.
//! Coins come per vertex in Fourier, Grover or custom flavors, sized to
//! the vertex degree.
//!
//! Multilayer networks are built from layer graphs plus interlayer edge
//! sets and flattened to a supra-adjacency graph, on which both the
//! quantum and the classical engine run unchanged. The [`analysis`]
//! module derives layer occupation traces, time-averaged heatmaps,
//! truncated recurrence numbers and broken-link decoherence averages;
//! [`experiment`] wraps all of it behind declarative, reproducible
//! experiment configs with named presets.
//!
//! Vertices are labeled `1..=n` throughout, in the API and in every file
//! format.
//!
//! ```
//! use dtqw::*;
//! use std::sync::Arc;
//!
//! // Grover walk on the built-in two-layer network, tracked per layer.
//! let network = toy_multiplex();
//! let table = Arc::new(network.supra_adjacency().neighbor_table());
//! let coins = CoinAssignment::of_family(&table, CoinFamily::Grover)?;
//! let start = BlockState::uniform_superposition(table.clone(), 1)?;
//! let series = evolve(&start, &coins, 100, None)?;
//! let layers = layer_probability(&series, &network.membership())?;
//! assert_eq!(layers.layer(1)[0], 1.0); // the walk starts in the top layer
//! assert!(layers.layer(2).iter().any(|&p| p > 0.3)); // and leaks below
//! # Ok::<(), Error>(())
//! ```

pub mod analysis;
pub mod classical;
pub mod coin;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod multilayer;
pub mod numeric;
pub mod quantum;
pub mod series;
pub mod state;

pub use analysis::{
    broken_link_monte_carlo, dominant_period, heatmap, layer_probability, partial_polya,
    polya_curve, polya_grid, time_avg_probability, total_variation, Heatmap, LayerSeries,
    MonteCarloMean, Periodicity, PolyaEstimate, PolyaForm, SweepInit,
};
pub use classical::{crw_evolve, crw_step, ClassicalDistribution, TransitionMatrix};
pub use coin::{CoinAssignment, CoinFamily, CoinMatrix};
pub use error::{Error, Result};
pub use graph::{Graph, NeighborTable};
pub use multilayer::{toy_multiplex, LayerMembership, MultilayerNetwork};
pub use quantum::{evolve, step, step_back, BrokenLinkPolicy};
pub use series::{ProbabilitySeries, SeriesMeta, WalkerKind};
pub use state::{BlockState, StateBackend};
