//! Time-indexed families of node probability vectors, the common output
//! of both walk engines.

use crate::error::{Error, Result};
use crate::numeric::tolerance;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WalkerKind {
    Quantum,
    Classical,
}

/// Provenance carried alongside a series so its outputs can be rerun.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SeriesMeta {
    /// Human-readable initial-state descriptor, e.g. `localized(1,3)`.
    pub initial: Option<String>,
    /// Coin family label for quantum series.
    pub coin: Option<String>,
    /// RNG seed, when any randomness was involved.
    pub seed: Option<u64>,
    /// For broken-link runs: the edges that were broken at each step.
    pub break_patterns: Option<Vec<Vec<(usize, usize)>>>,
}

/// Probability vectors for `t = 0..=T`; every vector sums to 1 within
/// 1e-10.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilitySeries {
    vectors: Vec<Vec<f64>>,
    walker: WalkerKind,
    pub meta: SeriesMeta,
}

impl ProbabilitySeries {
    pub fn new(walker: WalkerKind, vectors: Vec<Vec<f64>>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::InvalidParameter("empty probability series".into()));
        }
        let n = vectors[0].len();
        for (t, v) in vectors.iter().enumerate() {
            if v.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "vector at t={t} has {} entries, expected {n}",
                    v.len()
                )));
            }
            let sum: f64 = v.iter().sum();
            if (sum - 1.0).abs() > tolerance::SERIES_NORM {
                return Err(Error::NonNormalizedInput { norm: sum });
            }
        }
        Ok(ProbabilitySeries {
            vectors,
            walker,
            meta: SeriesMeta::default(),
        })
    }

    pub fn walker(&self) -> WalkerKind {
        self.walker
    }

    /// Number of vectors, `T + 1`.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Number of steps `T`.
    pub fn steps(&self) -> usize {
        self.vectors.len() - 1
    }

    pub fn node_count(&self) -> usize {
        self.vectors[0].len()
    }

    pub fn at(&self, t: usize) -> &[f64] {
        &self.vectors[t]
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    pub fn probability(&self, x: usize, t: usize) -> f64 {
        self.vectors[t][x - 1]
    }

    /// `P(x0, t)` for `t = 1..=T`, the inputs of the recurrence
    /// estimators.
    pub fn return_probabilities(&self, x0: usize) -> Vec<f64> {
        self.vectors[1..].iter().map(|v| v[x0 - 1]).collect()
    }

    /// CSV with header `t,node_1,...,node_n`, one row per time step.
    pub fn to_csv(&self) -> String {
        let n = self.node_count();
        let mut out = String::from("t");
        for x in 1..=n {
            out.push_str(&format!(",node_{x}"));
        }
        out.push('\n');
        for (t, v) in self.vectors.iter().enumerate() {
            out.push_str(&t.to_string());
            for p in v {
                out.push_str(&format!(",{p}"));
            }
            out.push('\n');
        }
        out
    }
}
