//! Shared test machinery: an explicit dense evolution operator on the
//! arc space, independent of the engine's row-update implementation,
//! plus seeded random graphs, unitaries and states.
#![allow(dead_code)]

use dtqw::{BlockState, CoinAssignment, CoinMatrix, Graph, NeighborTable};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// The `2m` directed arcs `(x, y)` ordered by `(x, ascending y)`; the
/// basis the dense operators act on.
pub struct ArcBasis {
    pub arcs: Vec<(usize, usize)>,
}

impl ArcBasis {
    pub fn new(table: &NeighborTable) -> Self {
        let mut arcs = Vec::with_capacity(table.arc_count());
        for x in 1..=table.vertex_count() {
            for &y in table.neighbors(x) {
                arcs.push((x, y));
            }
        }
        ArcBasis { arcs }
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn index(&self, x: usize, y: usize) -> usize {
        self.arcs
            .iter()
            .position(|&a| a == (x, y))
            .expect("arc in basis")
    }
}

/// Flatten a block state to its arc-space column vector.
pub fn state_vector(state: &BlockState, basis: &ArcBasis) -> Vec<Complex64> {
    basis
        .arcs
        .iter()
        .map(|&(x, y)| state.amplitude(x, y))
        .collect()
}

/// The global coin operator as a dense block-diagonal matrix: block `x`
/// couples the arcs leaving `x` through that vertex's coin.
pub fn dense_coin(
    table: &NeighborTable,
    coins: &CoinAssignment,
    basis: &ArcBasis,
) -> Vec<Vec<Complex64>> {
    let dim = basis.len();
    let mut m = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for x in 1..=table.vertex_count() {
        let neighbors = table.neighbors(x);
        let coin = coins.coin(x);
        for (i, &yi) in neighbors.iter().enumerate() {
            let row = basis.index(x, yi);
            for (j, &yj) in neighbors.iter().enumerate() {
                m[row][basis.index(x, yj)] = coin.entry(i + 1, j + 1);
            }
        }
    }
    m
}

/// The arc-reversal shift as a dense permutation matrix: arc `(x, y)`
/// maps to `(y, x)`, except that both arcs of a broken edge map to
/// themselves.
pub fn dense_shift(basis: &ArcBasis, broken: &[(usize, usize)]) -> Vec<Vec<Complex64>> {
    let dim = basis.len();
    let mut m = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for (col, &(x, y)) in basis.arcs.iter().enumerate() {
        let key = (x.min(y), x.max(y));
        let row = if broken.contains(&key) {
            col
        } else {
            basis.index(y, x)
        };
        m[row][col] = Complex64::new(1.0, 0.0);
    }
    m
}

pub fn matvec(m: &[Vec<Complex64>], v: &[Complex64]) -> Vec<Complex64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// One oracle step: `psi -> S (C psi)` on the arc space.
pub fn oracle_step(
    psi: &[Complex64],
    coin: &[Vec<Complex64>],
    shift: &[Vec<Complex64>],
) -> Vec<Complex64> {
    matvec(shift, &matvec(coin, psi))
}

/// Random connected simple graph with `2..=max_n` vertices: a random
/// attachment tree plus extra edges.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(2..=max_n);
    let mut edges = Vec::new();
    for v in 2..=n {
        edges.push((rng.gen_range(1..v), v));
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            if !edges.contains(&(i, j)) && rng.gen::<f64>() < 0.3 {
                edges.push((i, j));
            }
        }
    }
    Graph::build(n, &edges).expect("valid random graph")
}

/// Haar-ish random unitary: complex Gaussian entries orthonormalized by
/// modified Gram-Schmidt, drawn again on the rare near-degenerate draw.
pub fn random_unitary(d: usize, rng: &mut ChaCha8Rng) -> CoinMatrix {
    'outer: loop {
        let mut cols: Vec<Vec<Complex64>> = (0..d)
            .map(|_| {
                (0..d)
                    .map(|_| Complex64::new(gaussian(rng), gaussian(rng)))
                    .collect()
            })
            .collect();
        for i in 0..d {
            for j in 0..i {
                let proj: Complex64 = cols[j]
                    .iter()
                    .zip(&cols[i])
                    .map(|(u, v)| u.conj() * v)
                    .sum();
                let (left, right) = cols.split_at_mut(i);
                for (target, &u) in right[0].iter_mut().zip(&left[j]) {
                    *target -= proj * u;
                }
            }
            let norm: f64 = cols[i].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm < 1e-6 {
                continue 'outer;
            }
            for z in &mut cols[i] {
                *z /= norm;
            }
        }
        let mut data = Vec::with_capacity(d * d);
        for r in 0..d {
            for c in cols.iter() {
                data.push(c[r]);
            }
        }
        let coin = CoinMatrix::from_entries(d, data).unwrap();
        if coin.unitarity_residual() <= 1e-13 {
            return coin;
        }
    }
}

fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller from two uniform draws.
    let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let v: f64 = rng.gen();
    (-2.0 * u.ln()).sqrt() * (2.0 * std::f64::consts::PI * v).cos()
}

pub fn random_coins(table: &NeighborTable, rng: &mut ChaCha8Rng) -> CoinAssignment {
    let coins = (1..=table.vertex_count())
        .map(|x| random_unitary(table.degree(x), rng))
        .collect();
    CoinAssignment::custom(table, coins).expect("random unitaries are valid coins")
}

/// Random normalized state supported on every arc.
pub fn random_state(table: &Arc<NeighborTable>, rng: &mut ChaCha8Rng) -> BlockState {
    let mut entries = Vec::with_capacity(table.arc_count());
    for x in 1..=table.vertex_count() {
        for &y in table.neighbors(x) {
            entries.push((x, y, Complex64::new(gaussian(rng), gaussian(rng))));
        }
    }
    let norm: f64 = entries
        .iter()
        .map(|(_, _, z)| z.norm_sqr())
        .sum::<f64>()
        .sqrt();
    for (_, _, z) in &mut entries {
        *z /= norm;
    }
    BlockState::from_entries(table.clone(), &entries).expect("normalized supported state")
}

/// Largest per-amplitude deviation between the engine state and an
/// oracle arc vector.
pub fn max_amplitude_error(state: &BlockState, psi: &[Complex64], basis: &ArcBasis) -> f64 {
    basis
        .arcs
        .iter()
        .zip(psi)
        .map(|(&(x, y), z)| (state.amplitude(x, y) - z).norm())
        .fold(0.0f64, f64::max)
}
