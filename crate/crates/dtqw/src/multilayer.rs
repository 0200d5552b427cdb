//! Multilayer and multiplex networks: layer graphs plus intersecting
//! edge sets, flattened to a single supra-adjacency [`Graph`] for the
//! walk engines.
//!
//! Layer `a` (1-based, in list order) occupies the global labels
//! `offset_a + 1 ..= offset_a + n_a`, so a two-layer multiplex on 4-node
//! layers uses labels 1-4 for the top layer and 5-8 for the bottom one.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Interlayer edge sets keyed by their (unordered) layer pair.
pub type InterlayerEdges = Vec<((usize, usize), Vec<(usize, usize)>)>;

/// Interlayer edge set between one (unordered) pair of layers.
/// Endpoints are local labels inside their respective layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerCoupling {
    /// `(a, b)` with `a < b`, 1-based layer indices.
    pub layers: (usize, usize),
    /// `(i, j)` with `i` in layer `a` and `j` in layer `b`.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilayerNetwork {
    layers: Vec<Graph>,
    couplings: Vec<LayerCoupling>,
    offsets: Vec<usize>,
}

impl MultilayerNetwork {
    /// Multiplex coupling: every pair of adjacent layers in list order is
    /// joined by the identity coupling `{(i, i)}`. All layers must have
    /// the same node count.
    pub fn multiplex(layers: Vec<Graph>) -> Result<Self> {
        if layers.len() < 2 {
            return Err(Error::InvalidParameter(
                "multiplex coupling needs at least 2 layers".into(),
            ));
        }
        let n = layers[0].vertex_count();
        for (idx, layer) in layers.iter().enumerate() {
            if layer.vertex_count() != n {
                return Err(Error::LayerSizeMismatch {
                    layer: idx + 1,
                    expected: n,
                    found: layer.vertex_count(),
                });
            }
        }
        let couplings = (1..layers.len())
            .map(|a| LayerCoupling {
                layers: (a, a + 1),
                edges: (1..=n).map(|i| (i, i)).collect(),
            })
            .collect();
        Ok(Self::assemble(layers, couplings))
    }

    /// Arbitrary interlayer topology. Coupling keys may name the layer
    /// pair in either order; edges are normalized to the `(a, b)` with
    /// `a < b` orientation.
    pub fn general(layers: Vec<Graph>, interlayer: InterlayerEdges) -> Result<Self> {
        if layers.is_empty() {
            return Err(Error::InvalidParameter("need at least one layer".into()));
        }
        let l = layers.len();
        let mut couplings: Vec<LayerCoupling> = Vec::new();
        for ((a, b), edges) in interlayer {
            if a == b {
                return Err(Error::SelfPairing(a));
            }
            for layer in [a, b] {
                if layer < 1 || layer > l {
                    return Err(Error::VertexOutOfRange {
                        vertex: layer,
                        n: l,
                    });
                }
            }
            let flip = a > b;
            let (a, b) = if flip { (b, a) } else { (a, b) };
            let (na, nb) = (layers[a - 1].vertex_count(), layers[b - 1].vertex_count());
            let mut normalized = Vec::with_capacity(edges.len());
            for (i, j) in edges {
                let (i, j) = if flip { (j, i) } else { (i, j) };
                if i < 1 || i > na {
                    return Err(Error::VertexOutOfRange { vertex: i, n: na });
                }
                if j < 1 || j > nb {
                    return Err(Error::VertexOutOfRange { vertex: j, n: nb });
                }
                normalized.push((i, j));
            }
            normalized.sort_unstable();
            if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
            if let Some(existing) = couplings.iter_mut().find(|c| c.layers == (a, b)) {
                existing.edges.extend(normalized);
                existing.edges.sort_unstable();
                if let Some(w) = existing.edges.windows(2).find(|w| w[0] == w[1]) {
                    return Err(Error::DuplicateEdge(w[0].0, w[0].1));
                }
            } else {
                couplings.push(LayerCoupling {
                    layers: (a, b),
                    edges: normalized,
                });
            }
        }
        couplings.sort_by_key(|c| c.layers);
        Ok(Self::assemble(layers, couplings))
    }

    fn assemble(layers: Vec<Graph>, couplings: Vec<LayerCoupling>) -> Self {
        let mut offsets = Vec::with_capacity(layers.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for layer in &layers {
            acc += layer.vertex_count();
            offsets.push(acc);
        }
        MultilayerNetwork {
            layers,
            couplings,
            offsets,
        }
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    pub fn layer(&self, a: usize) -> &Graph {
        &self.layers[a - 1]
    }

    pub fn layers(&self) -> &[Graph] {
        &self.layers
    }

    pub fn couplings(&self) -> &[LayerCoupling] {
        &self.couplings
    }

    /// Total node count of the flattened network.
    pub fn vertex_count(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// Global label of local node `i` in layer `a`.
    pub fn global_label(&self, a: usize, i: usize) -> usize {
        self.offsets[a - 1] + i
    }

    /// Flatten to the supra-adjacency graph: layer adjacencies on the
    /// diagonal blocks, interlayer couplings off-diagonal.
    pub fn supra_adjacency(&self) -> Graph {
        let mut edges = Vec::new();
        for (a, layer) in self.layers.iter().enumerate() {
            let off = self.offsets[a];
            edges.extend(layer.edges().iter().map(|&(i, j)| (off + i, off + j)));
        }
        for c in &self.couplings {
            let (oa, ob) = (self.offsets[c.layers.0 - 1], self.offsets[c.layers.1 - 1]);
            edges.extend(c.edges.iter().map(|&(i, j)| (oa + i, ob + j)));
        }
        Graph::build(self.vertex_count(), &edges)
            .expect("disjoint layer label ranges cannot collide")
    }

    pub fn membership(&self) -> LayerMembership {
        let mut layer_of = Vec::with_capacity(self.vertex_count());
        for (a, layer) in self.layers.iter().enumerate() {
            layer_of.extend(std::iter::repeat_n(a + 1, layer.vertex_count()));
        }
        LayerMembership { layer_of }
    }

    /// Parse the sectioned multilayer format:
    ///
    /// ```text
    /// # comments allowed anywhere
    /// multiplex          # optional: identity-couple adjacent layers
    /// [layer 1]
    /// n 4
    /// 1 2
    /// [layer 2]
    /// ...
    /// [interlayer 1 2]   # only without the multiplex directive
    /// 1 1
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        enum Section {
            None,
            Layer,
            Interlayer,
        }
        let mut multiplex = false;
        let mut layer_bodies: Vec<(usize, String)> = Vec::new();
        let mut inter_bodies: InterlayerEdges = Vec::new();
        let mut section = Section::None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
            if line == "multiplex" {
                multiplex = true;
                continue;
            }
            if let Some(header) = line.strip_prefix('[') {
                let header = header
                    .strip_suffix(']')
                    .ok_or_else(|| bad("unterminated section header".into()))?;
                let tokens: Vec<&str> = header.split_whitespace().collect();
                section = match tokens.as_slice() {
                    ["layer", k] => {
                        let k: usize = k
                            .parse()
                            .map_err(|_| bad(format!("bad layer index `{k}`")))?;
                        if k != layer_bodies.len() + 1 {
                            return Err(bad(format!(
                                "layer sections must be numbered in order; expected {}",
                                layer_bodies.len() + 1
                            )));
                        }
                        layer_bodies.push((k, String::new()));
                        Section::Layer
                    }
                    ["interlayer", a, b] => {
                        let a: usize = a
                            .parse()
                            .map_err(|_| bad(format!("bad layer index `{a}`")))?;
                        let b: usize = b
                            .parse()
                            .map_err(|_| bad(format!("bad layer index `{b}`")))?;
                        inter_bodies.push(((a, b), Vec::new()));
                        Section::Interlayer
                    }
                    _ => return Err(bad(format!("unknown section `[{header}]`"))),
                };
                continue;
            }
            match section {
                Section::None => {
                    return Err(bad("data before any section header".into()));
                }
                Section::Layer => {
                    let body = &mut layer_bodies.last_mut().unwrap().1;
                    body.push_str(line);
                    body.push('\n');
                }
                Section::Interlayer => {
                    let mut tokens = line.split_whitespace();
                    let parse = |s: Option<&str>| {
                        s.and_then(|s| s.parse::<usize>().ok())
                            .ok_or_else(|| bad("expected `i j`".into()))
                    };
                    let i = parse(tokens.next())?;
                    let j = parse(tokens.next())?;
                    if tokens.next().is_some() {
                        return Err(bad("expected exactly two labels".into()));
                    }
                    inter_bodies.last_mut().unwrap().1.push((i, j));
                }
            }
        }
        if layer_bodies.is_empty() {
            return Err(Error::Parse("no [layer k] sections".into()));
        }
        let layers = layer_bodies
            .into_iter()
            .map(|(_, body)| Graph::from_edge_list(&body))
            .collect::<Result<Vec<_>>>()?;
        if multiplex {
            if !inter_bodies.is_empty() {
                return Err(Error::Parse(
                    "the multiplex directive and [interlayer] sections are mutually exclusive"
                        .into(),
                ));
            }
            MultilayerNetwork::multiplex(layers)
        } else {
            MultilayerNetwork::general(layers, inter_bodies)
        }
    }

    /// Render in the format [`parse`](Self::parse) accepts.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (a, layer) in self.layers.iter().enumerate() {
            out.push_str(&format!("[layer {}]\n", a + 1));
            out.push_str(&layer.to_edge_list());
        }
        for c in &self.couplings {
            out.push_str(&format!("[interlayer {} {}]\n", c.layers.0, c.layers.1));
            for &(i, j) in &c.edges {
                out.push_str(&format!("{i} {j}\n"));
            }
        }
        out
    }
}

/// Total map from global node label to 1-based layer index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerMembership {
    layer_of: Vec<usize>,
}

impl LayerMembership {
    pub fn vertex_count(&self) -> usize {
        self.layer_of.len()
    }

    pub fn layer_of(&self, global: usize) -> usize {
        self.layer_of[global - 1]
    }

    pub fn layer_count(&self) -> usize {
        self.layer_of.iter().copied().max().unwrap_or(0)
    }

    /// Single-layer membership for a plain graph.
    pub fn single(n: usize) -> Self {
        LayerMembership {
            layer_of: vec![1; n],
        }
    }
}

/// The 8-node two-layer multiplex used throughout the tests and presets:
/// a complete top layer and a 4-cycle bottom layer on 4 nodes each.
pub fn toy_multiplex() -> MultilayerNetwork {
    let top = generators::complete(4).unwrap();
    let bottom = generators::cycle(4).unwrap();
    MultilayerNetwork::multiplex(vec![top, bottom]).unwrap()
}

/// Deterministic layer generators.
pub mod generators {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Complete graph on `n >= 2` vertices.
    pub fn complete(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "complete graph needs n >= 2, got {n}"
            )));
        }
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for i in 1..=n {
            for j in (i + 1)..=n {
                edges.push((i, j));
            }
        }
        Graph::build(n, &edges)
    }

    /// Star on `n >= 2` vertices with the hub at node 1.
    pub fn star(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "star graph needs n >= 2, got {n}"
            )));
        }
        let edges: Vec<_> = (2..=n).map(|k| (1, k)).collect();
        Graph::build(n, &edges)
    }

    /// Cycle on `n >= 3` vertices: 1-2-...-n-1.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle graph needs n >= 3, got {n}"
            )));
        }
        let mut edges: Vec<_> = (1..n).map(|k| (k, k + 1)).collect();
        edges.push((1, n));
        Graph::build(n, &edges)
    }

    /// Preferential-attachment scale-free graph, reproducible from `seed`.
    ///
    /// Starts from a complete graph on `m_attach + 1` nodes; every further
    /// node attaches `m_attach` edges to distinct existing nodes sampled
    /// proportionally to their current degree, without replacement. The
    /// stream of draws is fixed by a ChaCha8 generator seeded with `seed`,
    /// so identical arguments give a bit-identical edge set.
    pub fn scale_free(n: usize, m_attach: usize, seed: u64) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "scale-free graph needs n >= 2, got {n}"
            )));
        }
        if m_attach < 1 || m_attach >= n {
            return Err(Error::InvalidParameter(format!(
                "attachment count must satisfy 1 <= m_attach < n, got {m_attach}"
            )));
        }
        let seed_nodes = m_attach + 1;
        let mut edges = Vec::new();
        for i in 1..=seed_nodes {
            for j in (i + 1)..=seed_nodes {
                edges.push((i, j));
            }
        }
        let mut degrees = vec![m_attach; seed_nodes];
        let mut degree_total = m_attach * seed_nodes;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for v in (seed_nodes + 1)..=n {
            let mut chosen: Vec<usize> = Vec::with_capacity(m_attach);
            let mut remaining = degree_total;
            for _ in 0..m_attach {
                let mut r = rng.gen_range(1..=remaining);
                let mut pick = 0;
                for (idx, &d) in degrees.iter().enumerate() {
                    let node = idx + 1;
                    if chosen.contains(&node) {
                        continue;
                    }
                    if r <= d {
                        pick = node;
                        break;
                    }
                    r -= d;
                }
                debug_assert!(pick > 0);
                remaining -= degrees[pick - 1];
                chosen.push(pick);
            }
            for &t in &chosen {
                edges.push((t, v));
                degrees[t - 1] += 1;
            }
            degrees.push(m_attach);
            degree_total += 2 * m_attach;
        }
        Graph::build(n, &edges)
    }
}
