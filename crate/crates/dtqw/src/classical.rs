//! The classical random walk engine, the comparison baseline for every
//! quantum experiment.
//!
//! The distribution updates by summing incoming transitions over each
//! vertex's neighbors in ascending label order, with compensated
//! summation so 1000-step traces conserve probability to 1e-12.

use crate::error::{Error, Result};
use crate::graph::NeighborTable;
use crate::numeric::{tolerance, CompensatedSum};
use crate::series::{ProbabilitySeries, SeriesMeta, WalkerKind};

/// Row-stochastic transition matrix supported on the graph's edges:
/// `entry(x, y)` is the probability of moving from `x` to `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMatrix {
    n: usize,
    probs: Vec<f64>,
    /// For each vertex, the ascending list of vertices with a positive
    /// transition INTO it; drives the update's summation order.
    incoming: Vec<Vec<usize>>,
}

impl TransitionMatrix {
    /// The unbiased walk: probability `1/d_x` to each neighbor.
    pub fn unbiased(table: &NeighborTable) -> Result<Self> {
        let n = table.vertex_count();
        let mut probs = vec![0.0; n * n];
        for x in 1..=n {
            let d = table.degree(x);
            if d == 0 {
                return Err(Error::IsolatedVertex(x));
            }
            let p = 1.0 / d as f64;
            for &y in table.neighbors(x) {
                probs[(x - 1) * n + (y - 1)] = p;
            }
        }
        let incoming = incoming_lists(table, &probs, n);
        Ok(TransitionMatrix { n, probs, incoming })
    }

    /// Arbitrary biased walk on the same support. Rows must be
    /// stochastic within 1e-12 and vanish off the adjacency support.
    pub fn from_rows(table: &NeighborTable, rows: &[Vec<f64>]) -> Result<Self> {
        let n = table.vertex_count();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "expected {n} rows of {n} entries"
            )));
        }
        let mut probs = vec![0.0; n * n];
        for (i, row) in rows.iter().enumerate() {
            let x = i + 1;
            let mut sum = CompensatedSum::new();
            for (j, &p) in row.iter().enumerate() {
                let y = j + 1;
                if p < 0.0 {
                    return Err(Error::InvalidParameter(format!(
                        "negative transition probability at ({x}, {y})"
                    )));
                }
                if p > 0.0 && !table.is_adjacent(x, y) {
                    return Err(Error::UnsupportedTransition { from: x, to: y });
                }
                sum.add(p);
                probs[i * n + j] = p;
            }
            let total = sum.value();
            if (total - 1.0).abs() > tolerance::ROW_STOCHASTIC {
                return Err(Error::NotStochastic { row: x, sum: total });
            }
        }
        let incoming = incoming_lists(table, &probs, n);
        Ok(TransitionMatrix { n, probs, incoming })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Probability of moving from `x` to `y`.
    pub fn entry(&self, x: usize, y: usize) -> f64 {
        self.probs[(x - 1) * self.n + (y - 1)]
    }
}

fn incoming_lists(table: &NeighborTable, probs: &[f64], n: usize) -> Vec<Vec<usize>> {
    (1..=n)
        .map(|x| {
            table
                .neighbors(x)
                .iter()
                .copied()
                .filter(|&y| probs[(y - 1) * n + (x - 1)] > 0.0)
                .collect()
        })
        .collect()
}

/// A probability distribution over vertices at one time step.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalDistribution {
    probs: Vec<f64>,
    t: usize,
}

impl ClassicalDistribution {
    /// All mass on one vertex.
    pub fn delta(n: usize, x: usize) -> Result<Self> {
        if x < 1 || x > n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
        let mut probs = vec![0.0; n];
        probs[x - 1] = 1.0;
        Ok(ClassicalDistribution { probs, t: 0 })
    }

    pub fn from_probabilities(probs: Vec<f64>) -> Result<Self> {
        if probs.iter().any(|&p| p < 0.0) {
            return Err(Error::InvalidParameter("negative probability entry".into()));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > tolerance::CLASSICAL_NORM {
            return Err(Error::NonNormalizedInput { norm: sum });
        }
        Ok(ClassicalDistribution { probs, t: 0 })
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    pub fn probability(&self, x: usize) -> f64 {
        self.probs[x - 1]
    }

    pub fn time(&self) -> usize {
        self.t
    }
}

/// One update: `P(x, t) = sum over incoming neighbors y of
/// `entry(y, x) * P(y, t-1)`.
pub fn crw_step(dist: &ClassicalDistribution, omega: &TransitionMatrix) -> ClassicalDistribution {
    let n = omega.vertex_count();
    debug_assert_eq!(dist.probs.len(), n);
    let mut next = Vec::with_capacity(n);
    for x in 1..=n {
        let mut acc = CompensatedSum::new();
        for &y in &omega.incoming[x - 1] {
            acc.add(omega.entry(y, x) * dist.probs[y - 1]);
        }
        next.push(acc.value());
    }
    ClassicalDistribution {
        probs: next,
        t: dist.t + 1,
    }
}

/// Evolve `steps` steps, recording the distribution at every time.
pub fn crw_evolve(
    initial: &ClassicalDistribution,
    omega: &TransitionMatrix,
    steps: usize,
) -> Result<ProbabilitySeries> {
    let mut vectors = Vec::with_capacity(steps + 1);
    vectors.push(initial.probs.clone());
    let mut dist = initial.clone();
    for _ in 0..steps {
        dist = crw_step(&dist, omega);
        vectors.push(dist.probs.clone());
    }
    let mut series = ProbabilitySeries::new(WalkerKind::Classical, vectors)?;
    series.meta = SeriesMeta::default();
    Ok(series)
}
