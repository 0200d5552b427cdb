//! Derived observables: layer occupation, time averages, heatmaps,
//! recurrence estimates, decoherence Monte Carlo and periodicity.

use crate::classical::{crw_evolve, ClassicalDistribution, TransitionMatrix};
use crate::coin::{CoinAssignment, CoinFamily};
use crate::error::{Error, Result};
use crate::graph::NeighborTable;
use crate::multilayer::LayerMembership;
use crate::numeric::{tolerance, CompensatedSum};
use crate::quantum::{evolve_with_rng, BrokenLinkPolicy};
use crate::series::ProbabilitySeries;
use crate::state::BlockState;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Per-layer occupation probabilities over time.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerSeries {
    /// `layers[a - 1][t]` is the probability of finding the walker in
    /// layer `a` at time `t`.
    layers: Vec<Vec<f64>>,
}

impl LayerSeries {
    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    pub fn len(&self) -> usize {
        self.layers.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn layer(&self, a: usize) -> &[f64] {
        &self.layers[a - 1]
    }

    /// CSV with header `t,layer_1,...,layer_l`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t");
        for a in 1..=self.layer_count() {
            out.push_str(&format!(",layer_{a}"));
        }
        out.push('\n');
        for t in 0..self.len() {
            out.push_str(&t.to_string());
            for layer in &self.layers {
                out.push_str(&format!(",{}", layer[t]));
            }
            out.push('\n');
        }
        out
    }
}

/// Sum node probabilities per layer at every time step.
pub fn layer_probability(
    series: &ProbabilitySeries,
    membership: &LayerMembership,
) -> Result<LayerSeries> {
    if membership.vertex_count() != series.node_count() {
        return Err(Error::MembershipMismatch {
            expected: series.node_count(),
            found: membership.vertex_count(),
        });
    }
    let l = membership.layer_count();
    let mut layers = vec![Vec::with_capacity(series.len()); l];
    for v in series.vectors() {
        let mut sums = vec![CompensatedSum::new(); l];
        for (i, &p) in v.iter().enumerate() {
            sums[membership.layer_of(i + 1) - 1].add(p);
        }
        for (layer, sum) in layers.iter_mut().zip(&sums) {
            layer.push(sum.value());
        }
    }
    Ok(LayerSeries { layers })
}

/// Mean probability vector over the first `T` vectors of the series,
/// where `T` is the series' step count (the final vector is excluded).
/// A series holding only an initial distribution averages to itself.
pub fn time_avg_probability(series: &ProbabilitySeries) -> Vec<f64> {
    let horizon = series.len().saturating_sub(1).max(1);
    let n = series.node_count();
    let mut avg = vec![0.0; n];
    for v in &series.vectors()[..horizon] {
        for (a, &p) in avg.iter_mut().zip(v) {
            *a += p;
        }
    }
    for a in &mut avg {
        *a /= horizon as f64;
    }
    avg
}

/// Which walker a heatmap sweeps over all start nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepInit {
    /// Uniform coin superposition at the start node.
    #[serde(rename = "phi1")]
    UniformCoin,
    /// Uniform magnitudes with `+i`/`-i` phases on the first/last slot.
    #[serde(rename = "phi2")]
    PhasedCoin,
    /// Classical delta distribution.
    Classical,
}

impl SweepInit {
    pub fn name(self) -> &'static str {
        match self {
            SweepInit::UniformCoin => "phi1",
            SweepInit::PhasedCoin => "phi2",
            SweepInit::Classical => "classical",
        }
    }
}

/// Start-node-by-target-node probability matrix.
///
/// Quantum rows are time-averaged probabilities over `steps` steps;
/// the classical row is the distribution after exactly `steps` steps.
#[derive(Debug, Clone, PartialEq)]
pub struct Heatmap {
    matrix: Vec<Vec<f64>>,
    steps: usize,
    walker: String,
}

impl Heatmap {
    pub fn node_count(&self) -> usize {
        self.matrix.len()
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    /// "classical", or "<coin> <init>" for quantum sweeps.
    pub fn walker(&self) -> &str {
        &self.walker
    }

    /// Row for start node `x`: a probability distribution over targets.
    pub fn row(&self, x: usize) -> &[f64] {
        &self.matrix[x - 1]
    }

    pub fn entry(&self, start: usize, target: usize) -> f64 {
        self.matrix[start - 1][target - 1]
    }

    /// Plain `n x n` CSV, no header.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.matrix {
            let cells: Vec<String> = row.iter().map(f64::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// Run one walk per start node and collect the rows of a [`Heatmap`].
///
/// Quantum sweeps need every vertex compatible with the initial-state
/// family; a phased sweep on a graph with a degree-1 vertex fails before
/// any evolution starts.
pub fn heatmap(
    table: &Arc<NeighborTable>,
    init: SweepInit,
    coin: Option<CoinFamily>,
    steps: usize,
) -> Result<Heatmap> {
    let n = table.vertex_count();
    let mut matrix = Vec::with_capacity(n);
    let walker = match init {
        SweepInit::Classical => "classical".to_string(),
        _ => {
            let family = coin.ok_or_else(|| {
                Error::InvalidParameter("quantum heatmap needs a coin family".into())
            })?;
            format!("{} {}", family.name(), init.name())
        }
    };
    match init {
        SweepInit::Classical => {
            let omega = TransitionMatrix::unbiased(table)?;
            for x in 1..=n {
                let d0 = ClassicalDistribution::delta(n, x)?;
                let series = crw_evolve(&d0, &omega, steps)?;
                matrix.push(series.at(steps).to_vec());
            }
        }
        SweepInit::UniformCoin | SweepInit::PhasedCoin => {
            if init == SweepInit::PhasedCoin {
                if let Some(x) = (1..=n).find(|&x| table.degree(x) < 2) {
                    return Err(Error::DegreeTooSmall {
                        vertex: x,
                        degree: table.degree(x),
                    });
                }
            }
            let coins = CoinAssignment::of_family(table, coin.unwrap())?;
            for x in 1..=n {
                let s0 = match init {
                    SweepInit::UniformCoin => BlockState::uniform_superposition(table.clone(), x)?,
                    _ => BlockState::phased_superposition(table.clone(), x)?,
                };
                let series = crate::quantum::evolve(&s0, &coins, steps, None)?;
                matrix.push(time_avg_probability(&series));
            }
        }
    }
    for (i, row) in matrix.iter().enumerate() {
        let sum: f64 = row.iter().sum();
        debug_assert!(
            (sum - 1.0).abs() <= tolerance::HEATMAP_ROW_SUM,
            "row {} sums to {sum}",
            i + 1
        );
    }
    Ok(Heatmap {
        matrix,
        steps,
        walker,
    })
}

/// The two truncated recurrence estimators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolyaForm {
    /// `1 - 1 / sum_t P(x0, t)`; undefined when the sum vanishes.
    Sum,
    /// `1 - prod_t (1 - P(x0, t))`; bounded in [0, 1] and non-decreasing.
    Product,
}

impl PolyaForm {
    pub fn name(self) -> &'static str {
        match self {
            PolyaForm::Sum => "sum",
            PolyaForm::Product => "product",
        }
    }
}

/// Truncated recurrence number from the return probabilities
/// `P(x0, t)` for `t = 1..=T_p`.
pub fn partial_polya(return_probs: &[f64], form: PolyaForm) -> Result<f64> {
    for &p in return_probs {
        if !(0.0..=1.0 + 1e-12).contains(&p) {
            return Err(Error::InvalidParameter(format!(
                "return probability {p} outside [0, 1]"
            )));
        }
    }
    match form {
        PolyaForm::Sum => {
            let mut sum = CompensatedSum::new();
            for &p in return_probs {
                sum.add(p);
            }
            let s = sum.value();
            if s == 0.0 {
                return Err(Error::UndefinedEstimate);
            }
            Ok(1.0 - 1.0 / s)
        }
        PolyaForm::Product => {
            let mut prod = 1.0;
            for &p in return_probs {
                prod *= 1.0 - p.min(1.0);
            }
            Ok(1.0 - prod)
        }
    }
}

/// Recurrence estimates over a grid of cutoffs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyaEstimate {
    pub origin: usize,
    pub form: PolyaForm,
    pub grid: Vec<usize>,
    pub values: Vec<f64>,
}

impl PolyaEstimate {
    /// CSV with header `t_p,polya_<form>`.
    pub fn to_csv(&self) -> String {
        let mut out = format!("t_p,polya_{}\n", self.form.name());
        for (tp, v) in self.grid.iter().zip(&self.values) {
            out.push_str(&format!("{tp},{v}\n"));
        }
        out
    }
}

/// The customary cutoff grid `{1, 5, 10, ..., max}`.
pub fn polya_grid(max: usize) -> Vec<usize> {
    let mut grid = vec![1];
    grid.extend((1..).map(|k| 5 * k).take_while(|&tp| tp <= max));
    grid
}

/// Evaluate the estimator at every cutoff in `grid` from one series.
pub fn polya_curve(
    series: &ProbabilitySeries,
    origin: usize,
    grid: &[usize],
    form: PolyaForm,
) -> Result<PolyaEstimate> {
    if grid.is_empty() || grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter(
            "cutoff grid must be strictly ascending and non-empty".into(),
        ));
    }
    let max = *grid.last().unwrap();
    if max > series.steps() {
        return Err(Error::SeriesTooShort {
            len: series.steps(),
            min: max,
        });
    }
    if *grid.first().unwrap() == 0 {
        return Err(Error::InvalidParameter("cutoff 0 is meaningless".into()));
    }
    let returns = series.return_probabilities(origin);
    let values = grid
        .iter()
        .map(|&tp| partial_polya(&returns[..tp], form))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyaEstimate {
        origin,
        form,
        grid: grid.to_vec(),
        values,
    })
}

/// Mean final distribution over independently seeded broken-link trials.
#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloMean {
    pub mean: Vec<f64>,
    pub trials: usize,
    /// Final distributions per trial, kept only on request.
    pub per_trial: Option<Vec<Vec<f64>>>,
}

/// Average the node distribution at `t = steps` over `trials`
/// independent evolutions under `policy`; trial `k` draws from stream
/// `k` of the policy's seed.
///
/// Trials may run concurrently (with the `parallel` feature), but the
/// mean is always accumulated in ascending trial order, so the result
/// is bit-identical regardless of scheduling.
pub fn broken_link_monte_carlo(
    initial: &BlockState,
    coins: &CoinAssignment,
    policy: &BrokenLinkPolicy,
    trials: usize,
    steps: usize,
    keep_trials: bool,
) -> Result<MonteCarloMean> {
    if trials == 0 {
        return Err(Error::InvalidParameter("need at least one trial".into()));
    }
    let run_trial = |k: usize| -> Result<Vec<f64>> {
        let rng = policy.rng_for_trial(k as u64);
        let series = evolve_with_rng(initial, coins, steps, Some(policy), Some(rng))?;
        Ok(series.at(steps).to_vec())
    };

    #[cfg(feature = "parallel")]
    let finals: Vec<Vec<f64>> = {
        use rayon::prelude::*;
        (0..trials)
            .into_par_iter()
            .map(run_trial)
            .collect::<Result<_>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let finals: Vec<Vec<f64>> = (0..trials).map(run_trial).collect::<Result<_>>()?;

    let n = initial.support().vertex_count();
    let mut sums = vec![CompensatedSum::new(); n];
    for dist in &finals {
        for (sum, &p) in sums.iter_mut().zip(dist) {
            sum.add(p);
        }
    }
    let mean: Vec<f64> = sums.iter().map(|s| s.value() / trials as f64).collect();
    let total: f64 = mean.iter().sum();
    debug_assert!((total - 1.0).abs() <= tolerance::MONTE_CARLO_NORM);
    Ok(MonteCarloMean {
        mean,
        trials,
        per_trial: keep_trials.then_some(finals),
    })
}

/// Half the L1 distance between two distributions.
pub fn total_variation(p: &[f64], q: &[f64]) -> f64 {
    debug_assert_eq!(p.len(), q.len());
    0.5 * p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>()
}

/// Outcome of autocorrelation-based period detection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Periodicity {
    Periodic { period: usize, strength: f64 },
    Aperiodic { strength: f64 },
}

impl Periodicity {
    pub fn strength(&self) -> f64 {
        match *self {
            Periodicity::Periodic { strength, .. } | Periodicity::Aperiodic { strength } => {
                strength
            }
        }
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self, Periodicity::Periodic { .. })
    }
}

/// Dominant period of a scalar time series: the lag in `2..=len/2` with
/// the highest mean-removed autocorrelation. Peaks are clamped to
/// `[0, 1]`; below 0.5 the series is flagged aperiodic. Needs at least
/// 16 samples.
pub fn dominant_period(values: &[f64]) -> Result<Periodicity> {
    const MIN_LEN: usize = 16;
    let len = values.len();
    if len < MIN_LEN {
        return Err(Error::SeriesTooShort { len, min: MIN_LEN });
    }
    let mean = values.iter().sum::<f64>() / len as f64;
    let centered: Vec<f64> = values.iter().map(|v| v - mean).collect();
    let variance: f64 = centered.iter().map(|v| v * v).sum();
    if variance < 1e-24 {
        // Constant series: no oscillation to speak of.
        return Ok(Periodicity::Aperiodic { strength: 0.0 });
    }
    let mut best_lag = 0;
    let mut best = f64::NEG_INFINITY;
    for lag in 2..=len / 2 {
        let corr: f64 = centered[..len - lag]
            .iter()
            .zip(&centered[lag..])
            .map(|(a, b)| a * b)
            .sum::<f64>()
            / variance;
        if corr > best {
            best = corr;
            best_lag = lag;
        }
    }
    let strength = best.clamp(0.0, 1.0);
    if strength >= tolerance::PERIODIC_STRENGTH_MIN {
        Ok(Periodicity::Periodic {
            period: best_lag,
            strength,
        })
    } else {
        Ok(Periodicity::Aperiodic { strength })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multilayer::toy_multiplex;
    use crate::quantum::evolve;
    use crate::series::WalkerKind;

    fn toy_table() -> Arc<NeighborTable> {
        Arc::new(toy_multiplex().supra_adjacency().neighbor_table())
    }

    fn toy_membership() -> LayerMembership {
        toy_multiplex().membership()
    }

    #[test]
    fn layer_probability_at_start() {
        let table = toy_table();
        let coins = CoinAssignment::of_family(&table, CoinFamily::Fourier).unwrap();
        let s0 = BlockState::localized(table, 1, 3).unwrap();
        let series = evolve(&s0, &coins, 0, None).unwrap();
        let layers = layer_probability(&series, &toy_membership()).unwrap();
        assert_eq!(layers.layer_count(), 2);
        assert_eq!(layers.layer(1)[0], 1.0);
        assert_eq!(layers.layer(2)[0], 0.0);
    }

    #[test]
    fn layer_probability_sums_to_one() {
        let table = toy_table();
        let coins = CoinAssignment::of_family(&table, CoinFamily::Fourier).unwrap();
        let s0 = BlockState::localized(table, 1, 5).unwrap();
        let series = evolve(&s0, &coins, 50, None).unwrap();
        let layers = layer_probability(&series, &toy_membership()).unwrap();
        for t in 0..=50 {
            let total = layers.layer(1)[t] + layers.layer(2)[t];
            assert!((total - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn layer_probability_rejects_wrong_membership() {
        let table = toy_table();
        let coins = CoinAssignment::of_family(&table, CoinFamily::Fourier).unwrap();
        let s0 = BlockState::localized(table, 1, 3).unwrap();
        let series = evolve(&s0, &coins, 1, None).unwrap();
        let wrong = LayerMembership::single(5);
        assert!(matches!(
            layer_probability(&series, &wrong),
            Err(Error::MembershipMismatch {
                expected: 8,
                found: 5
            })
        ));
    }

    #[test]
    fn time_avg_of_constant_series_is_constant() {
        let v = vec![0.25, 0.75];
        let series =
            ProbabilitySeries::new(WalkerKind::Classical, vec![v.clone(), v.clone(), v.clone()])
                .unwrap();
        assert_eq!(time_avg_probability(&series), v);
    }

    #[test]
    fn time_avg_with_one_step_is_the_initial_distribution() {
        let series =
            ProbabilitySeries::new(WalkerKind::Classical, vec![vec![1.0, 0.0], vec![0.5, 0.5]])
                .unwrap();
        assert_eq!(time_avg_probability(&series), vec![1.0, 0.0]);
    }

    #[test]
    fn time_avg_commutes_with_layer_aggregation() {
        let table = toy_table();
        let coins = CoinAssignment::of_family(&table, CoinFamily::Grover).unwrap();
        let s0 = BlockState::uniform_superposition(table, 1).unwrap();
        let series = evolve(&s0, &coins, 40, None).unwrap();
        let membership = toy_membership();
        let avg = time_avg_probability(&series);
        let layers = layer_probability(&series, &membership).unwrap();
        for a in 1..=2 {
            let layer_of_avg: f64 = avg
                .iter()
                .enumerate()
                .filter(|(i, _)| membership.layer_of(i + 1) == a)
                .map(|(_, p)| p)
                .sum();
            let trace = layers.layer(a);
            let horizon = series.len() - 1;
            let avg_of_layer: f64 = trace[..horizon].iter().sum::<f64>() / horizon as f64;
            assert!((layer_of_avg - avg_of_layer).abs() < 1e-12);
        }
    }

    #[test]
    fn heatmap_rows_are_distributions() {
        let table = toy_table();
        for (init, coin) in [
            (SweepInit::Classical, None),
            (SweepInit::UniformCoin, Some(CoinFamily::Fourier)),
            (SweepInit::PhasedCoin, Some(CoinFamily::Grover)),
        ] {
            let h = heatmap(&table, init, coin, 30).unwrap();
            assert_eq!(h.node_count(), 8);
            for x in 1..=8 {
                let sum: f64 = h.row(x).iter().sum();
                assert!((sum - 1.0).abs() < tolerance::HEATMAP_ROW_SUM);
            }
        }
    }

    #[test]
    fn heatmap_single_step_uniform_sweep_is_identity() {
        let table = toy_table();
        let h = heatmap(&table, SweepInit::UniformCoin, Some(CoinFamily::Fourier), 1).unwrap();
        for x in 1..=8 {
            for y in 1..=8 {
                let expect = if x == y { 1.0 } else { 0.0 };
                assert!((h.entry(x, y) - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn heatmap_phased_sweep_rejects_degree_one_nodes() {
        let table = Arc::new(
            crate::multilayer::generators::star(4)
                .unwrap()
                .neighbor_table(),
        );
        assert!(matches!(
            heatmap(&table, SweepInit::PhasedCoin, Some(CoinFamily::Grover), 10),
            Err(Error::DegreeTooSmall { .. })
        ));
    }

    #[test]
    fn classical_heatmap_concentrates_on_the_complete_layer() {
        let h = heatmap(&toy_table(), SweepInit::Classical, None, 100).unwrap();
        for x in 1..=8 {
            let top: f64 = (1..=4).map(|y| h.entry(x, y)).sum();
            assert!(top > 0.5, "row {x} top mass {top}");
        }
    }

    #[test]
    fn grover_localizes_harder_than_fourier_from_phased_starts() {
        let table = toy_table();
        let steps = 100;
        let grover = heatmap(
            &table,
            SweepInit::PhasedCoin,
            Some(CoinFamily::Grover),
            steps,
        )
        .unwrap();
        let fourier = heatmap(
            &table,
            SweepInit::PhasedCoin,
            Some(CoinFamily::Fourier),
            steps,
        )
        .unwrap();
        for x in 1..=8 {
            assert!(
                grover.entry(x, x) > fourier.entry(x, x),
                "start {x}: grover {:.4} <= fourier {:.4}",
                grover.entry(x, x),
                fourier.entry(x, x)
            );
        }
    }

    #[test]
    fn phased_start_confines_fourier_to_its_layer() {
        let table = toy_table();
        let phased = heatmap(
            &table,
            SweepInit::PhasedCoin,
            Some(CoinFamily::Fourier),
            100,
        )
        .unwrap();
        let uniform = heatmap(
            &table,
            SweepInit::UniformCoin,
            Some(CoinFamily::Fourier),
            100,
        )
        .unwrap();
        let same_layer = |h: &Heatmap, x: usize| -> f64 {
            let cols = if x <= 4 { 1..=4 } else { 5..=8 };
            cols.map(|c| h.entry(x, c)).sum()
        };
        // The cycle layer holds the phased walker where the uniform start
        // leaks most of its mass to the complete layer.
        for x in 5..=8 {
            assert!(
                same_layer(&phased, x) > same_layer(&uniform, x),
                "start {x}"
            );
        }
        let mean = |h: &Heatmap| -> f64 { (1..=8).map(|x| same_layer(h, x)).sum::<f64>() / 8.0 };
        assert!(mean(&phased) > mean(&uniform));
    }

    #[test]
    fn polya_trivial_values() {
        assert!(matches!(
            partial_polya(&[0.0, 0.0, 0.0], PolyaForm::Sum),
            Err(Error::UndefinedEstimate)
        ));
        assert_eq!(
            partial_polya(&[0.0, 0.0, 0.0], PolyaForm::Product).unwrap(),
            0.0
        );
        // Certain return at t=1 makes the walk recurrent regardless of
        // later values.
        assert_eq!(
            partial_polya(&[1.0, 0.2, 0.0], PolyaForm::Product).unwrap(),
            1.0
        );
        assert!(partial_polya(&[1.5], PolyaForm::Product).is_err());
        assert!(partial_polya(&[-0.1], PolyaForm::Sum).is_err());
    }

    #[test]
    fn polya_grid_convention() {
        assert_eq!(polya_grid(20), vec![1, 5, 10, 15, 20]);
        assert_eq!(polya_grid(1), vec![1]);
        assert_eq!(polya_grid(7), vec![1, 5]);
    }

    #[test]
    fn polya_curve_is_monotone_for_product_form() {
        let table = toy_table();
        let coins = CoinAssignment::of_family(&table, CoinFamily::Grover).unwrap();
        let s0 = BlockState::uniform_superposition(table, 1).unwrap();
        let series = evolve(&s0, &coins, 100, None).unwrap();
        let est = polya_curve(&series, 1, &polya_grid(100), PolyaForm::Product).unwrap();
        assert!(est.values.windows(2).all(|w| w[1] >= w[0] - 1e-15));
        assert!(est.values.iter().all(|&v| (0.0..=1.0).contains(&v)));
    }

    #[test]
    fn polya_curve_validates_grid() {
        let table = toy_table();
        let coins = CoinAssignment::of_family(&table, CoinFamily::Fourier).unwrap();
        let s0 = BlockState::uniform_superposition(table, 1).unwrap();
        let series = evolve(&s0, &coins, 10, None).unwrap();
        assert!(polya_curve(&series, 1, &[5, 3], PolyaForm::Product).is_err());
        assert!(polya_curve(&series, 1, &[], PolyaForm::Product).is_err());
        assert!(polya_curve(&series, 1, &[0, 5], PolyaForm::Product).is_err());
        assert!(matches!(
            polya_curve(&series, 1, &[1, 20], PolyaForm::Product),
            Err(Error::SeriesTooShort { .. })
        ));
    }

    #[test]
    fn monte_carlo_with_unbreakable_policy_matches_plain_walk() {
        let table = toy_table();
        let coins = CoinAssignment::of_family(&table, CoinFamily::Fourier).unwrap();
        let s0 = BlockState::localized(table.clone(), 1, 2).unwrap();
        let policy = BrokenLinkPolicy::new(&table, &[(1, 3)], 0.0, 11).unwrap();
        let mc = broken_link_monte_carlo(&s0, &coins, &policy, 8, 40, false).unwrap();
        let plain = evolve(&s0, &coins, 40, None).unwrap();
        assert_eq!(mc.mean, plain.at(40));
    }

    #[test]
    fn monte_carlo_single_trial_equals_that_trial() {
        let table = toy_table();
        let coins = CoinAssignment::of_family(&table, CoinFamily::Fourier).unwrap();
        let s0 = BlockState::localized(table.clone(), 1, 2).unwrap();
        let policy = BrokenLinkPolicy::new(&table, &[(1, 3)], 0.5, 21).unwrap();
        let mc = broken_link_monte_carlo(&s0, &coins, &policy, 1, 30, true).unwrap();
        let rng = policy.rng_for_trial(0);
        let direct = evolve_with_rng(&s0, &coins, 30, Some(&policy), Some(rng)).unwrap();
        assert_eq!(mc.mean, direct.at(30));
        assert_eq!(mc.per_trial.unwrap()[0], direct.at(30));
    }

    #[test]
    fn monte_carlo_mean_is_normalized_and_reproducible() {
        let table = toy_table();
        let coins = CoinAssignment::of_family(&table, CoinFamily::Fourier).unwrap();
        let s0 = BlockState::localized(table.clone(), 1, 2).unwrap();
        let policy = BrokenLinkPolicy::new(&table, &[(1, 3)], 0.5, 77).unwrap();
        let a = broken_link_monte_carlo(&s0, &coins, &policy, 64, 25, false).unwrap();
        let b = broken_link_monte_carlo(&s0, &coins, &policy, 64, 25, false).unwrap();
        assert_eq!(a.mean, b.mean);
        let sum: f64 = a.mean.iter().sum();
        assert!((sum - 1.0).abs() < tolerance::MONTE_CARLO_NORM);
        assert!(broken_link_monte_carlo(&s0, &coins, &policy, 0, 5, false).is_err());
    }

    #[test]
    fn total_variation_basics() {
        assert_eq!(total_variation(&[1.0, 0.0], &[1.0, 0.0]), 0.0);
        assert_eq!(total_variation(&[1.0, 0.0], &[0.0, 1.0]), 1.0);
        assert!((total_variation(&[0.6, 0.4], &[0.4, 0.6]) - 0.2).abs() < 1e-15);
    }

    #[test]
    fn dominant_period_finds_constructed_signal() {
        let series: Vec<f64> = (0..64)
            .map(|t| {
                let s = (std::f64::consts::PI * t as f64 / 4.0).sin();
                s * s
            })
            .collect();
        match dominant_period(&series).unwrap() {
            Periodicity::Periodic { period, strength } => {
                assert_eq!(period, 4);
                assert!(strength > 0.9, "strength {strength}");
            }
            other => panic!("expected periodic, got {other:?}"),
        }
    }

    #[test]
    fn dominant_period_flags_constant_series() {
        let series = vec![0.5; 32];
        assert_eq!(
            dominant_period(&series).unwrap(),
            Periodicity::Aperiodic { strength: 0.0 }
        );
    }

    #[test]
    fn dominant_period_needs_enough_samples() {
        assert!(matches!(
            dominant_period(&[0.1; 15]),
            Err(Error::SeriesTooShort { len: 15, min: 16 })
        ));
    }
}
