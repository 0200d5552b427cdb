//! The discrete-time quantum walk engine.
//!
//! One step is a per-vertex coin rotation followed by the arc-reversal
//! shift, realized directly on the amplitude matrix: the coin mixes each
//! row's supported entries through that vertex's unitary, the shift
//! transposes the result on the adjacency support. Neither the global
//! coin nor the global shift is ever materialized.
//!
//! A broken edge opts out of the transpose for one step: its two arc
//! amplitudes stay in place. That is still a permutation of the arcs, so
//! every step conserves probability, broken or not.

use crate::coin::CoinAssignment;
use crate::error::{Error, Result};
use crate::numeric::tolerance;
use crate::series::{ProbabilitySeries, SeriesMeta, WalkerKind};
use crate::state::{Amplitudes, BlockState};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Per-step random edge breaking.
///
/// At every step each breakable edge independently drops out of the
/// shift with probability `p_break`. Draws come from a ChaCha8 stream
/// seeded with `seed`; Monte Carlo trial `k` uses the same seed on
/// stream `k`, so trials are reproducible and independent of scheduling.
#[derive(Debug, Clone, PartialEq)]
pub struct BrokenLinkPolicy {
    breakable: Vec<(usize, usize)>,
    p_break: f64,
    seed: u64,
}

impl BrokenLinkPolicy {
    /// `breakable` must be a subset of the support's edges and `p_break`
    /// a probability. Edge pairs may be given in either order.
    pub fn new(
        support: &crate::graph::NeighborTable,
        breakable: &[(usize, usize)],
        p_break: f64,
        seed: u64,
    ) -> Result<Self> {
        if !(0.0..=1.0).contains(&p_break) {
            return Err(Error::InvalidParameter(format!(
                "p_break must lie in [0, 1], got {p_break}"
            )));
        }
        let mut edges = Vec::with_capacity(breakable.len());
        for &(i, j) in breakable {
            if !support.is_adjacent(i, j) {
                return Err(Error::NotAdjacent(i, j));
            }
            edges.push((i.min(j), i.max(j)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(BrokenLinkPolicy {
            breakable: edges,
            p_break,
            seed,
        })
    }

    pub fn breakable(&self) -> &[(usize, usize)] {
        &self.breakable
    }

    pub fn p_break(&self) -> f64 {
        self.p_break
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// The generator for one Monte Carlo trial: seed fixed, stream = trial
    /// index. A plain [`evolve`] uses trial 0.
    pub fn rng_for_trial(&self, trial: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial);
        rng
    }

    /// One Bernoulli draw per breakable edge, in ascending edge order.
    fn draw(&self, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
        self.breakable
            .iter()
            .copied()
            .filter(|_| rng.gen::<f64>() < self.p_break)
            .collect()
    }
}

fn is_broken(broken: &[(usize, usize)], x: usize, y: usize) -> bool {
    let key = (x.min(y), x.max(y));
    broken.contains(&key)
}

/// Coin phase: each row's supported amplitudes, read in ascending
/// neighbor order, are rotated by that vertex's coin.
fn coin_phase(state: &BlockState, coins: &CoinAssignment) -> Amplitudes {
    let table = &state.support;
    let n = table.vertex_count();
    match &state.amps {
        Amplitudes::Arcs(a) => {
            let mut out = vec![Complex64::new(0.0, 0.0); a.len()];
            for x in 1..=n {
                let off = table.arc_offset(x);
                let d = table.degree(x);
                coins
                    .coin(x)
                    .apply(&a[off..off + d], &mut out[off..off + d]);
            }
            Amplitudes::Arcs(out)
        }
        Amplitudes::Dense(a) => {
            let mut out = vec![Complex64::new(0.0, 0.0); a.len()];
            let mut v = Vec::new();
            let mut rotated = Vec::new();
            for x in 1..=n {
                let row = &a[(x - 1) * n..x * n];
                let neighbors = table.neighbors(x);
                v.clear();
                v.extend(neighbors.iter().map(|&y| row[y - 1]));
                rotated.clear();
                rotated.resize(neighbors.len(), Complex64::new(0.0, 0.0));
                coins.coin(x).apply(&v, &mut rotated);
                let out_row = &mut out[(x - 1) * n..x * n];
                for (&y, &amp) in neighbors.iter().zip(&rotated) {
                    out_row[y - 1] = amp;
                }
            }
            Amplitudes::Dense(out)
        }
    }
}

/// Shift phase: transpose on the adjacency support, except that both
/// arcs of a broken edge keep their amplitudes in place.
fn shift_phase(state: &BlockState, tilde: &Amplitudes, broken: &[(usize, usize)]) -> Amplitudes {
    let table = &state.support;
    let n = table.vertex_count();
    match tilde {
        Amplitudes::Arcs(t) => {
            let mut out = vec![Complex64::new(0.0, 0.0); t.len()];
            for x in 1..=n {
                let off = table.arc_offset(x);
                for (idx, &y) in table.neighbors(x).iter().enumerate() {
                    let src = if is_broken(broken, x, y) {
                        off + idx
                    } else {
                        let r = table.coin_index(y, x).expect("undirected support");
                        table.arc_offset(y) + (r - 1)
                    };
                    out[off + idx] = t[src];
                }
            }
            Amplitudes::Arcs(out)
        }
        Amplitudes::Dense(t) => {
            let mut out = vec![Complex64::new(0.0, 0.0); t.len()];
            for x in 1..=n {
                for &y in table.neighbors(x) {
                    let src = if is_broken(broken, x, y) {
                        (x - 1) * n + (y - 1)
                    } else {
                        (y - 1) * n + (x - 1)
                    };
                    out[(x - 1) * n + (y - 1)] = t[src];
                }
            }
            Amplitudes::Dense(out)
        }
    }
}

fn check_step_inputs(state: &BlockState, coins: &CoinAssignment) -> Result<f64> {
    let table = &state.support;
    let n = table.vertex_count();
    if coins.vertex_count() != n {
        return Err(Error::DimensionMismatch(format!(
            "{} coins for {n} vertices",
            coins.vertex_count()
        )));
    }
    for x in 1..=n {
        if coins.coin(x).dim() != table.degree(x) {
            return Err(Error::DimensionMismatch(format!(
                "coin at vertex {x} has dimension {}, degree is {}",
                coins.coin(x).dim(),
                table.degree(x)
            )));
        }
    }
    let norm = state.total_probability();
    if (norm - 1.0).abs() > tolerance::STEP_INPUT_NORM {
        return Err(Error::NonNormalizedInput { norm });
    }
    Ok(norm)
}

/// Advance the walker one step. `broken` lists edges excluded from the
/// shift for this step (empty slice: none).
pub fn step(
    state: &BlockState,
    coins: &CoinAssignment,
    broken: &[(usize, usize)],
) -> Result<BlockState> {
    let input_norm = check_step_inputs(state, coins)?;
    let tilde = coin_phase(state, coins);
    let amps = shift_phase(state, &tilde, broken);
    let out = BlockState {
        support: state.support.clone(),
        amps,
        time: state.time + 1,
    };
    debug_assert!((out.total_probability() - input_norm).abs() <= tolerance::SERIES_NORM);
    Ok(out)
}

/// The inverse of [`step`]: undo the shift (it is an involution), then
/// apply the inverse coins.
pub fn step_back(
    state: &BlockState,
    coins: &CoinAssignment,
    broken: &[(usize, usize)],
) -> Result<BlockState> {
    check_step_inputs(state, coins)?;
    let unshifted = BlockState {
        support: state.support.clone(),
        amps: shift_phase(state, &state.amps, broken),
        time: state.time.saturating_sub(1),
    };
    let amps = coin_phase(&unshifted, &coins.dagger());
    Ok(BlockState { amps, ..unshifted })
}

/// Run `steps` steps and record the node probabilities at every time,
/// breaking edges per `policy` when one is given.
pub fn evolve(
    initial: &BlockState,
    coins: &CoinAssignment,
    steps: usize,
    policy: Option<&BrokenLinkPolicy>,
) -> Result<ProbabilitySeries> {
    let rng = policy.map(|p| p.rng_for_trial(0));
    evolve_with_rng(initial, coins, steps, policy, rng)
}

/// As [`evolve`], with the draw stream supplied by the caller; the Monte
/// Carlo driver hands each trial its own stream.
pub(crate) fn evolve_with_rng(
    initial: &BlockState,
    coins: &CoinAssignment,
    steps: usize,
    policy: Option<&BrokenLinkPolicy>,
    mut rng: Option<ChaCha8Rng>,
) -> Result<ProbabilitySeries> {
    let mut vectors = Vec::with_capacity(steps + 1);
    vectors.push(initial.node_probability());
    let mut patterns = policy.map(|_| Vec::with_capacity(steps));
    let mut state = initial.clone();
    for _ in 0..steps {
        let broken = match (policy, rng.as_mut()) {
            (Some(p), Some(rng)) => p.draw(rng),
            _ => Vec::new(),
        };
        state = step(&state, coins, &broken)?;
        vectors.push(state.node_probability());
        if let Some(patterns) = patterns.as_mut() {
            patterns.push(broken);
        }
    }
    let mut series = ProbabilitySeries::new(WalkerKind::Quantum, vectors)?;
    series.meta = SeriesMeta {
        initial: None,
        coin: Some(coins.label().to_string()),
        seed: policy.map(|p| p.seed()),
        break_patterns: patterns,
    };
    Ok(series)
}
