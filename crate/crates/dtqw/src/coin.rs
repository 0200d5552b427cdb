//! Per-vertex coin operators.
//!
//! A walker at a vertex of degree `d` carries a `d`-dimensional internal
//! direction space indexed by the coin slots of [`NeighborTable`]
//! (`crate::graph::NeighborTable`). The coin is any unitary on that
//! space; the two named families are the discrete-Fourier coin and the
//! Grover reflection coin.

use crate::error::{Error, Result};
use crate::graph::NeighborTable;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Dense complex square matrix acting on one vertex's coin space.
/// Entry indices are 1-based, matching the coin-slot convention.
#[derive(Debug, Clone, PartialEq)]
pub struct CoinMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl CoinMatrix {
    /// Build from row-major entries; `data.len()` must be `dim * dim`.
    pub fn from_entries(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("coin dimension 0".into()));
        }
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "coin of dimension {dim} needs {} entries, got {}",
                dim * dim,
                data.len()
            )));
        }
        Ok(CoinMatrix { dim, data })
    }

    /// Discrete-Fourier coin: entry `(r, s)` is
    /// `exp(2 pi i (r-1)(s-1) / d) / sqrt(d)`.
    ///
    /// Quarter-turn phases are emitted exactly, so `fourier(2)` is the
    /// Hadamard matrix bit for bit.
    pub fn fourier(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter("coin dimension 0".into()));
        }
        // sqrt(1/d) is one correctly-rounded op from the exact ratio, so
        // the d=2 coin is the Hadamard matrix bit for bit.
        let scale = (1.0 / d as f64).sqrt();
        let mut data = Vec::with_capacity(d * d);
        for r in 0..d {
            for s in 0..d {
                data.push(root_of_unity(r * s, d) * scale);
            }
        }
        Ok(CoinMatrix { dim: d, data })
    }

    /// Grover coin: `(2 - d) / d` on the diagonal, `2 / d` elsewhere.
    pub fn grover(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter("coin dimension 0".into()));
        }
        let diag = (2.0 - d as f64) / d as f64;
        let off = 2.0 / d as f64;
        let mut data = Vec::with_capacity(d * d);
        for r in 0..d {
            for s in 0..d {
                let v = if r == s { diag } else { off };
                data.push(Complex64::new(v, 0.0));
            }
        }
        Ok(CoinMatrix { dim: d, data })
    }

    pub fn identity(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter("coin dimension 0".into()));
        }
        let mut data = vec![Complex64::new(0.0, 0.0); d * d];
        for r in 0..d {
            data[r * d + r] = Complex64::new(1.0, 0.0);
        }
        Ok(CoinMatrix { dim: d, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at 1-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.data[(row - 1) * self.dim + (col - 1)]
    }

    pub fn dagger(&self) -> Self {
        let d = self.dim;
        let mut data = Vec::with_capacity(d * d);
        for r in 0..d {
            for s in 0..d {
                data.push(self.data[s * d + r].conj());
            }
        }
        CoinMatrix { dim: d, data }
    }

    /// Largest entry magnitude of `C C† - I`.
    pub fn unitarity_residual(&self) -> f64 {
        let d = self.dim;
        let mut worst: f64 = 0.0;
        for r in 0..d {
            for s in 0..d {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..d {
                    acc += self.data[r * d + k] * self.data[s * d + k].conj();
                }
                let expect = if r == s { 1.0 } else { 0.0 };
                worst = worst.max((acc - expect).norm());
            }
        }
        worst
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_residual() <= tol
    }

    /// `out = C v`, accumulating row sums in ascending column order.
    pub(crate) fn apply(&self, v: &[Complex64], out: &mut [Complex64]) {
        let d = self.dim;
        debug_assert_eq!(v.len(), d);
        debug_assert_eq!(out.len(), d);
        for (i, slot) in out.iter_mut().enumerate() {
            let row = &self.data[i * d..(i + 1) * d];
            let mut acc = Complex64::new(0.0, 0.0);
            for (c, amp) in row.iter().zip(v) {
                acc += c * amp;
            }
            *slot = acc;
        }
    }
}

/// `exp(2 pi i k / d)` with the four quarter turns emitted exactly.
fn root_of_unity(k: usize, d: usize) -> Complex64 {
    let k = k % d;
    if (4 * k).is_multiple_of(d) {
        match 4 * k / d {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    } else {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / d as f64;
        Complex64::new(theta.cos(), theta.sin())
    }
}

/// The named coin families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoinFamily {
    Fourier,
    Grover,
}

impl CoinFamily {
    pub fn name(self) -> &'static str {
        match self {
            CoinFamily::Fourier => "fourier",
            CoinFamily::Grover => "grover",
        }
    }

    pub fn matrix(self, d: usize) -> Result<CoinMatrix> {
        match self {
            CoinFamily::Fourier => CoinMatrix::fourier(d),
            CoinFamily::Grover => CoinMatrix::grover(d),
        }
    }
}

impl std::str::FromStr for CoinFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fourier" => Ok(CoinFamily::Fourier),
            "grover" => Ok(CoinFamily::Grover),
            other => Err(Error::InvalidParameter(format!(
                "unknown coin family `{other}` (expected fourier or grover)"
            ))),
        }
    }
}

/// One unitary per vertex, sized to that vertex's degree.
#[derive(Debug, Clone, PartialEq)]
pub struct CoinAssignment {
    coins: Vec<CoinMatrix>,
    label: String,
}

impl CoinAssignment {
    /// Coins of the given family at every vertex. Fails on any isolated
    /// vertex, whose coin space would be zero-dimensional.
    pub fn of_family(table: &NeighborTable, family: CoinFamily) -> Result<Self> {
        let coins = (1..=table.vertex_count())
            .map(|x| {
                let d = table.degree(x);
                if d == 0 {
                    return Err(Error::IsolatedVertex(x));
                }
                family.matrix(d)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CoinAssignment {
            coins,
            label: family.name().to_string(),
        })
    }

    /// Caller-supplied coins, one per vertex in label order. Each must
    /// match its vertex's degree and be unitary within 1e-12.
    pub fn custom(table: &NeighborTable, coins: Vec<CoinMatrix>) -> Result<Self> {
        let n = table.vertex_count();
        if coins.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "need {n} coins, got {}",
                coins.len()
            )));
        }
        for (idx, coin) in coins.iter().enumerate() {
            let x = idx + 1;
            let d = table.degree(x);
            if d == 0 {
                return Err(Error::IsolatedVertex(x));
            }
            if coin.dim() != d {
                return Err(Error::DimensionMismatch(format!(
                    "coin at vertex {x} has dimension {}, degree is {d}",
                    coin.dim()
                )));
            }
            let residual = coin.unitarity_residual();
            if residual > crate::numeric::tolerance::COIN_UNITARITY {
                return Err(Error::NonUnitaryCoin {
                    vertex: x,
                    residual,
                });
            }
        }
        Ok(CoinAssignment {
            coins,
            label: "custom".to_string(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.coins.len()
    }

    pub fn coin(&self, x: usize) -> &CoinMatrix {
        &self.coins[x - 1]
    }

    /// "fourier", "grover", or "custom"; recorded in series metadata.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// The inverse assignment (conjugate transpose of every coin).
    pub fn dagger(&self) -> Self {
        CoinAssignment {
            coins: self.coins.iter().map(CoinMatrix::dagger).collect(),
            label: format!("{}-dagger", self.label),
        }
    }
}
