//! Browser bindings for the walk engines: three operations behind
//! `wasm-bindgen`, each returning a JSON payload the demo page plots.
//!
//! Build for the web with
//! `wasm-pack build crates/dtqw-wasm --target web --out-dir ../../www/pkg`.
//!
//! The exported functions are thin wrappers over plain-Rust internals so
//! the crate also compiles and tests on native targets.

use dtqw::experiment::{self, presets, NetworkSpec};
use dtqw::{
    crw_evolve, evolve, layer_probability, polya_curve, polya_grid, BlockState,
    ClassicalDistribution, CoinAssignment, CoinFamily, Error, PolyaForm, Result, SweepInit,
    TransitionMatrix,
};
use wasm_bindgen::prelude::*;

/// Identifiers of the selectable networks, for populating the UI.
#[wasm_bindgen]
pub fn network_names() -> String {
    let mut names = vec!["toy".to_string()];
    names.extend(
        presets::synthetic_networks()
            .iter()
            .map(|(t, _)| t.to_string()),
    );
    serde_json::to_string(&names).unwrap()
}

/// Per-layer occupation trace of one walk.
///
/// `walker` is `classical` or `quantum`; quantum walks take a `coin`
/// (`fourier`/`grover`) and an `initial` of `localized` (with
/// `coin_label`), `phi1` or `phi2`. Returns
/// `{steps, node_count, walker, layers: [[f64]]}`.
#[wasm_bindgen]
pub fn layer_trace(
    network: &str,
    walker: &str,
    coin: &str,
    initial: &str,
    node: usize,
    coin_label: usize,
    steps: usize,
) -> std::result::Result<String, JsError> {
    layer_trace_impl(network, walker, coin, initial, node, coin_label, steps)
        .map_err(|e| JsError::new(&e.to_string()))
}

/// Start-by-target probability matrix on the 8-node toy multiplex.
///
/// `family` is `phi1`, `phi2` or `classical`; quantum sweeps take a
/// `coin`. Returns `{walker, steps, matrix: [[f64]]}`.
#[wasm_bindgen]
pub fn heatmap_grid(
    family: &str,
    coin: &str,
    steps: usize,
) -> std::result::Result<String, JsError> {
    heatmap_grid_impl(family, coin, steps).map_err(|e| JsError::new(&e.to_string()))
}

/// Product-form truncated recurrence curves for the three walkers from
/// node 1, on the grid `{1, 5, ..., t_max}`. Returns
/// `{grid, classical, fourier, grover}`.
#[wasm_bindgen]
pub fn recurrence_curves(network: &str, t_max: usize) -> std::result::Result<String, JsError> {
    recurrence_curves_impl(network, t_max).map_err(|e| JsError::new(&e.to_string()))
}

fn network_spec(name: &str) -> Result<NetworkSpec> {
    if name == "toy" {
        return Ok(NetworkSpec::Toy);
    }
    presets::synthetic_networks()
        .into_iter()
        .find(|(tag, _)| *tag == name)
        .map(|(_, spec)| spec)
        .ok_or_else(|| {
            Error::InvalidParameter(format!(
                "unknown network `{name}`; use toy, sf-sf, sf-cp, sf-star, cp-cp, cp-star or star-star"
            ))
        })
}

fn layer_trace_impl(
    network: &str,
    walker: &str,
    coin: &str,
    initial: &str,
    node: usize,
    coin_label: usize,
    steps: usize,
) -> Result<String> {
    let built = experiment::build_network(&network_spec(network)?)?;
    let (series, label) = match walker {
        "classical" => {
            let omega = TransitionMatrix::unbiased(&built.table)?;
            let d0 = ClassicalDistribution::delta(built.table.vertex_count(), node)?;
            (crw_evolve(&d0, &omega, steps)?, "classical".to_string())
        }
        "quantum" => {
            let family: CoinFamily = coin.parse()?;
            let coins = CoinAssignment::of_family(&built.table, family)?;
            let table = built.table.clone();
            let s0 = match initial {
                "localized" => BlockState::localized(table, node, coin_label)?,
                "phi1" => BlockState::uniform_superposition(table, node)?,
                "phi2" => BlockState::phased_superposition(table, node)?,
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown initial `{other}`; use localized, phi1 or phi2"
                    )))
                }
            };
            (
                evolve(&s0, &coins, steps, None)?,
                format!("{} {}", family.name(), initial),
            )
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown walker `{other}`; use classical or quantum"
            )))
        }
    };
    let layers = layer_probability(&series, &built.membership)?;
    let payload = serde_json::json!({
        "steps": steps,
        "node_count": series.node_count(),
        "walker": label,
        "layers": (1..=layers.layer_count())
            .map(|a| layers.layer(a).to_vec())
            .collect::<Vec<_>>(),
    });
    Ok(payload.to_string())
}

fn heatmap_grid_impl(family: &str, coin: &str, steps: usize) -> Result<String> {
    let built = experiment::build_network(&NetworkSpec::Toy)?;
    let (init, coin) = match family {
        "classical" => (SweepInit::Classical, None),
        "phi1" => (SweepInit::UniformCoin, Some(coin.parse::<CoinFamily>()?)),
        "phi2" => (SweepInit::PhasedCoin, Some(coin.parse::<CoinFamily>()?)),
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown sweep family `{other}`; use classical, phi1 or phi2"
            )))
        }
    };
    let map = dtqw::heatmap(&built.table, init, coin, steps)?;
    let n = map.node_count();
    let payload = serde_json::json!({
        "walker": map.walker(),
        "steps": map.steps(),
        "matrix": (1..=n).map(|x| map.row(x).to_vec()).collect::<Vec<_>>(),
    });
    Ok(payload.to_string())
}

fn recurrence_curves_impl(network: &str, t_max: usize) -> Result<String> {
    let built = experiment::build_network(&network_spec(network)?)?;
    let grid = polya_grid(t_max);

    let omega = TransitionMatrix::unbiased(&built.table)?;
    let d0 = ClassicalDistribution::delta(built.table.vertex_count(), 1)?;
    let crw = crw_evolve(&d0, &omega, t_max)?;
    let classical = polya_curve(&crw, 1, &grid, PolyaForm::Product)?;

    let mut quantum = Vec::new();
    for family in [CoinFamily::Fourier, CoinFamily::Grover] {
        let coins = CoinAssignment::of_family(&built.table, family)?;
        let s0 = BlockState::uniform_superposition(built.table.clone(), 1)?;
        let series = evolve(&s0, &coins, t_max, None)?;
        quantum.push(polya_curve(&series, 1, &grid, PolyaForm::Product)?);
    }
    let payload = serde_json::json!({
        "grid": grid,
        "classical": classical.values,
        "fourier": quantum[0].values,
        "grover": quantum[1].values,
    });
    Ok(payload.to_string())
}
