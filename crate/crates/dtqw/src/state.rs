//! The walker's wave function as a complex amplitude matrix over the
//! adjacency support.
//!
//! Row `x`, column `y` holds the amplitude of "position `x`, direction
//! `y`"; entries off the adjacency support are identically zero, so the
//! effective dimension is the arc count `2m`. Two storage backends exist:
//! a dense `n x n` matrix and a flat arc list. The arc list is selected
//! automatically for sparse graphs (`2m < n^2 / 4`); both backends run
//! the identical arithmetic in the identical order, so probabilities
//! agree bit for bit.

use crate::error::{Error, Result};
use crate::graph::NeighborTable;
use crate::numeric::tolerance;
use num_complex::Complex64;
use std::io::{Read, Write};
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateBackend {
    Dense,
    ArcList,
}

impl StateBackend {
    /// Dense by default; arc list once the support is sparse enough
    /// (`2m < n^2 / 4`).
    pub fn auto(table: &NeighborTable) -> Self {
        let n = table.vertex_count();
        if 4 * table.arc_count() < n * n {
            StateBackend::ArcList
        } else {
            StateBackend::Dense
        }
    }

    pub(crate) fn tag(self) -> u8 {
        match self {
            StateBackend::Dense => 0,
            StateBackend::ArcList => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Amplitudes {
    /// `n * n` row-major; off-support entries stay zero.
    Dense(Vec<Complex64>),
    /// Flat arc layout: vertex `x` owns `arc_offset(x) .. + degree(x)`.
    Arcs(Vec<Complex64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlockState {
    pub(crate) support: Arc<NeighborTable>,
    pub(crate) amps: Amplitudes,
    pub(crate) time: u64,
}

impl BlockState {
    fn blank(support: Arc<NeighborTable>, backend: StateBackend) -> Self {
        let n = support.vertex_count();
        let amps = match backend {
            StateBackend::Dense => Amplitudes::Dense(vec![Complex64::new(0.0, 0.0); n * n]),
            StateBackend::ArcList => {
                Amplitudes::Arcs(vec![Complex64::new(0.0, 0.0); support.arc_count()])
            }
        };
        BlockState {
            support,
            amps,
            time: 0,
        }
    }

    fn set(&mut self, x: usize, y: usize, value: Complex64) {
        let n = self.support.vertex_count();
        match &mut self.amps {
            Amplitudes::Dense(a) => a[(x - 1) * n + (y - 1)] = value,
            Amplitudes::Arcs(a) => {
                let r = self
                    .support
                    .coin_index(x, y)
                    .expect("set() called off the adjacency support");
                a[self.support.arc_offset(x) + (r - 1)] = value;
            }
        }
    }

    /// Walker at vertex `x` pointing along the edge to neighbor `c`.
    pub fn localized(support: Arc<NeighborTable>, x: usize, c: usize) -> Result<Self> {
        check_vertex(&support, x)?;
        if support.coin_index(x, c).is_none() {
            return Err(Error::NotAdjacent(x, c));
        }
        let backend = StateBackend::auto(&support);
        let mut s = Self::blank(support, backend);
        s.set(x, c, Complex64::new(1.0, 0.0));
        Ok(s)
    }

    /// Walker at `x` with the uniform coin superposition
    /// `1/sqrt(d) * sum_r |f_x(r)>`.
    pub fn uniform_superposition(support: Arc<NeighborTable>, x: usize) -> Result<Self> {
        check_vertex(&support, x)?;
        let d = support.degree(x);
        if d == 0 {
            return Err(Error::IsolatedVertex(x));
        }
        let amp = Complex64::new((1.0 / d as f64).sqrt(), 0.0);
        let backend = StateBackend::auto(&support);
        let mut s = Self::blank(support.clone(), backend);
        for &y in support.neighbors(x) {
            s.set(x, y, amp);
        }
        Ok(s)
    }

    /// Walker at `x` with equal coin magnitudes but phases `+i` on the
    /// first slot and `-i` on the last:
    /// `(i|f_x(1)> + sum_{1<r<d} |f_x(r)> - i|f_x(d)>) / sqrt(d)`.
    ///
    /// Needs degree at least 2; at degree 1 the first and last slot
    /// coincide and the expression is contradictory, so it is rejected
    /// rather than silently substituted.
    pub fn phased_superposition(support: Arc<NeighborTable>, x: usize) -> Result<Self> {
        check_vertex(&support, x)?;
        let d = support.degree(x);
        if d < 2 {
            return Err(Error::DegreeTooSmall {
                vertex: x,
                degree: d,
            });
        }
        let scale = (1.0 / d as f64).sqrt();
        let backend = StateBackend::auto(&support);
        let mut s = Self::blank(support.clone(), backend);
        for (idx, &y) in support.neighbors(x).iter().enumerate() {
            let amp = if idx == 0 {
                Complex64::new(0.0, scale)
            } else if idx == d - 1 {
                Complex64::new(0.0, -scale)
            } else {
                Complex64::new(scale, 0.0)
            };
            s.set(x, y, amp);
        }
        Ok(s)
    }

    /// Build from explicit `(x, y, amplitude)` entries. Every entry must
    /// sit on the adjacency support, appear once, and the total must be
    /// normalized within 1e-8.
    pub fn from_entries(
        support: Arc<NeighborTable>,
        entries: &[(usize, usize, Complex64)],
    ) -> Result<Self> {
        let backend = StateBackend::auto(&support);
        let mut s = Self::blank(support.clone(), backend);
        let mut seen = std::collections::HashSet::new();
        for &(x, y, amp) in entries {
            check_vertex(&support, x)?;
            if support.coin_index(x, y).is_none() {
                return Err(Error::NotAdjacent(x, y));
            }
            if !seen.insert((x, y)) {
                return Err(Error::InvalidParameter(format!(
                    "amplitude ({x}, {y}) given twice"
                )));
            }
            s.set(x, y, amp);
        }
        let norm = s.total_probability();
        if (norm - 1.0).abs() > tolerance::STEP_INPUT_NORM {
            return Err(Error::NonNormalizedInput { norm });
        }
        Ok(s)
    }

    pub fn support(&self) -> &Arc<NeighborTable> {
        &self.support
    }

    pub fn backend(&self) -> StateBackend {
        match self.amps {
            Amplitudes::Dense(_) => StateBackend::Dense,
            Amplitudes::Arcs(_) => StateBackend::ArcList,
        }
    }

    /// Steps taken since the initial state.
    pub fn time(&self) -> u64 {
        self.time
    }

    /// Amplitude at `(x, y)`; zero off the adjacency support.
    pub fn amplitude(&self, x: usize, y: usize) -> Complex64 {
        let n = self.support.vertex_count();
        match &self.amps {
            Amplitudes::Dense(a) => a[(x - 1) * n + (y - 1)],
            Amplitudes::Arcs(a) => match self.support.coin_index(x, y) {
                Some(r) => a[self.support.arc_offset(x) + (r - 1)],
                None => Complex64::new(0.0, 0.0),
            },
        }
    }

    /// Convert to the requested storage backend.
    pub fn with_backend(&self, backend: StateBackend) -> Self {
        if self.backend() == backend {
            return self.clone();
        }
        let mut out = Self::blank(self.support.clone(), backend);
        out.time = self.time;
        for x in 1..=self.support.vertex_count() {
            for &y in self.support.neighbors(x) {
                out.set(x, y, self.amplitude(x, y));
            }
        }
        out
    }

    /// Per-vertex probability: row sums of the squared magnitudes.
    pub fn node_probability(&self) -> Vec<f64> {
        let n = self.support.vertex_count();
        let mut probs = Vec::with_capacity(n);
        match &self.amps {
            Amplitudes::Arcs(a) => {
                for x in 1..=n {
                    let off = self.support.arc_offset(x);
                    let d = self.support.degree(x);
                    probs.push(a[off..off + d].iter().map(|z| z.norm_sqr()).sum());
                }
            }
            Amplitudes::Dense(a) => {
                for x in 1..=n {
                    let row = &a[(x - 1) * n..x * n];
                    probs.push(
                        self.support
                            .neighbors(x)
                            .iter()
                            .map(|&y| row[y - 1].norm_sqr())
                            .sum(),
                    );
                }
            }
        }
        probs
    }

    pub fn total_probability(&self) -> f64 {
        self.node_probability().iter().sum()
    }

    /// Checkpoint format, all integers little-endian:
    ///
    /// | bytes | field                                   |
    /// |-------|-----------------------------------------|
    /// | 4     | magic `b"DTQW"`                         |
    /// | 1     | layout version, currently 1             |
    /// | 1     | backend tag: 0 dense, 1 arc list        |
    /// | 8     | vertex count `n` (u64)                  |
    /// | 8     | time step `t` (u64)                     |
    /// | 16*2m | supported arcs in row-major order, each |
    /// |       | a `(re, im)` pair of f64                |
    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        w.write_all(b"DTQW")?;
        w.write_all(&[1u8, self.backend().tag()])?;
        w.write_all(&(self.support.vertex_count() as u64).to_le_bytes())?;
        w.write_all(&self.time.to_le_bytes())?;
        for x in 1..=self.support.vertex_count() {
            for &y in self.support.neighbors(x) {
                let amp = self.amplitude(x, y);
                w.write_all(&amp.re.to_le_bytes())?;
                w.write_all(&amp.im.to_le_bytes())?;
            }
        }
        Ok(())
    }

    /// Read a checkpoint written by [`write_to`](Self::write_to). The
    /// support must match the one the state was saved against.
    pub fn read_from<R: Read>(r: &mut R, support: Arc<NeighborTable>) -> Result<Self> {
        let mut magic = [0u8; 4];
        r.read_exact(&mut magic)?;
        if &magic != b"DTQW" {
            return Err(Error::Parse("bad checkpoint magic".into()));
        }
        let mut header = [0u8; 2];
        r.read_exact(&mut header)?;
        if header[0] != 1 {
            return Err(Error::Parse(format!(
                "unsupported checkpoint version {}",
                header[0]
            )));
        }
        let backend = match header[1] {
            0 => StateBackend::Dense,
            1 => StateBackend::ArcList,
            tag => return Err(Error::Parse(format!("unknown backend tag {tag}"))),
        };
        let mut u64buf = [0u8; 8];
        r.read_exact(&mut u64buf)?;
        let n = u64::from_le_bytes(u64buf) as usize;
        if n != support.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "checkpoint has {n} vertices, support has {}",
                support.vertex_count()
            )));
        }
        r.read_exact(&mut u64buf)?;
        let time = u64::from_le_bytes(u64buf);
        let mut state = Self::blank(support.clone(), backend);
        state.time = time;
        let mut f64buf = [0u8; 8];
        for x in 1..=n {
            for &y in support.neighbors(x) {
                r.read_exact(&mut f64buf)?;
                let re = f64::from_le_bytes(f64buf);
                r.read_exact(&mut f64buf)?;
                let im = f64::from_le_bytes(f64buf);
                state.set(x, y, Complex64::new(re, im));
            }
        }
        Ok(state)
    }
}

fn check_vertex(support: &NeighborTable, x: usize) -> Result<()> {
    let n = support.vertex_count();
    if x < 1 || x > n {
        return Err(Error::VertexOutOfRange { vertex: x, n });
    }
    Ok(())
}
