//! Undirected simple graphs and the neighbor labeling the walk engines
//! build their coin spaces on.
//!
//! Vertices are labeled `1..=n` everywhere in this crate, including file
//! formats. A graph stores its adjacency both as a dense 0/1 matrix and,
//! via [`NeighborTable`], as ascending neighbor lists; the table is the
//! authority for iteration order.

use crate::error::{Error, Result};

/// Finite undirected simple graph: no self-loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<bool>,
}

impl Graph {
    /// Build a graph on `n` vertices from an edge list.
    ///
    /// Edges may be given in either endpoint order. A repeated pair (in
    /// any order) is a hard error rather than being collapsed, so bad
    /// network files fail loudly.
    pub fn build(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "graph needs at least one vertex".into(),
            ));
        }
        let mut adj = vec![false; n * n];
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(i, j) in edge_list {
            if i == j {
                return Err(Error::SelfLoop(i));
            }
            for v in [i, j] {
                if v < 1 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            let (a, b) = if i < j { (i, j) } else { (j, i) };
            if adj[(a - 1) * n + (b - 1)] {
                return Err(Error::DuplicateEdge(a, b));
            }
            adj[(a - 1) * n + (b - 1)] = true;
            adj[(b - 1) * n + (a - 1)] = true;
            edges.push((a, b));
        }
        edges.sort_unstable();
        Ok(Graph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges normalized to `(min, max)` and sorted ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && i <= self.n && j <= self.n && self.adj[(i - 1) * self.n + (j - 1)]
    }

    /// Row sum of the adjacency matrix.
    pub fn degree(&self, x: usize) -> usize {
        assert!(x >= 1 && x <= self.n, "vertex {x} out of range");
        (1..=self.n).filter(|&y| self.is_adjacent(x, y)).count()
    }

    pub fn neighbor_table(&self) -> NeighborTable {
        NeighborTable::from_graph(self)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let table = self.neighbor_table();
        let mut seen = vec![false; self.n];
        let mut stack = vec![1usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in table.neighbors(x) {
                if !seen[y - 1] {
                    seen[y - 1] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.n
    }

    /// Parse the plain-text edge-list format: one `i j` pair per line,
    /// `#` starts a comment, and an optional first non-comment line
    /// `n <count>` declares the vertex count (otherwise the maximum label
    /// seen is used).
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut declared_n: Option<usize> = None;
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut first_data_line = true;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let a = tokens.next().unwrap();
            if first_data_line && a == "n" {
                let count = tokens.next().ok_or_else(|| {
                    Error::Parse(format!("line {}: `n` needs a count", lineno + 1))
                })?;
                declared_n = Some(count.parse().map_err(|_| {
                    Error::Parse(format!("line {}: bad vertex count `{count}`", lineno + 1))
                })?);
                first_data_line = false;
                continue;
            }
            first_data_line = false;
            let b = tokens
                .next()
                .ok_or_else(|| Error::Parse(format!("line {}: expected `i j`", lineno + 1)))?;
            if tokens.next().is_some() {
                return Err(Error::Parse(format!(
                    "line {}: expected exactly two labels",
                    lineno + 1
                )));
            }
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {}: bad label `{s}`", lineno + 1)))
            };
            pairs.push((parse(a)?, parse(b)?));
        }
        let n = match declared_n {
            Some(n) => n,
            None => pairs
                .iter()
                .map(|&(a, b)| a.max(b))
                .max()
                .ok_or_else(|| Error::Parse("empty edge list and no `n` line".into()))?,
        };
        Graph::build(n, &pairs)
    }

    /// Render in the same edge-list format `from_edge_list` accepts.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for &(i, j) in &self.edges {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }
}

/// Ascending neighbor lists `B_x` with the induced labeling bijection:
/// coin slot `r` of vertex `x` refers to the `r`-th smallest neighbor.
///
/// Also carries the arc offsets used by the walk engine: vertex `x` owns
/// the arc range `arc_offset(x) .. arc_offset(x) + degree(x)` in a flat
/// length-`2m` layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborTable {
    neighbors: Vec<Vec<usize>>,
    offsets: Vec<usize>,
}

impl NeighborTable {
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut neighbors = vec![Vec::new(); n];
        for &(i, j) in g.edges() {
            neighbors[i - 1].push(j);
            neighbors[j - 1].push(i);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0;
        offsets.push(0);
        for list in &neighbors {
            acc += list.len();
            offsets.push(acc);
        }
        NeighborTable { neighbors, offsets }
    }

    pub fn vertex_count(&self) -> usize {
        self.neighbors.len()
    }

    /// `B_x`, ascending.
    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.neighbors[x - 1]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.neighbors[x - 1].len()
    }

    /// The labeling bijection: the `r`-th smallest neighbor of `x`,
    /// `r` in `1..=degree(x)`.
    pub fn label(&self, x: usize, r: usize) -> usize {
        self.neighbors[x - 1][r - 1]
    }

    /// Inverse of [`label`](Self::label): the coin slot `r` with
    /// `label(x, r) == y`, if `y` is a neighbor of `x`.
    pub fn coin_index(&self, x: usize, y: usize) -> Option<usize> {
        self.neighbors[x - 1].binary_search(&y).ok().map(|i| i + 1)
    }

    pub fn is_adjacent(&self, x: usize, y: usize) -> bool {
        self.coin_index(x, y).is_some()
    }

    /// Start of vertex `x`'s slice in the flat arc layout.
    pub fn arc_offset(&self, x: usize) -> usize {
        self.offsets[x - 1]
    }

    /// Total number of directed arcs, `2m`; the walker's state dimension.
    pub fn arc_count(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn min_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Rebuild the graph from the incidence recorded in the table.
    pub fn to_graph(&self) -> Graph {
        let n = self.vertex_count();
        let mut edges = Vec::new();
        for x in 1..=n {
            for &y in self.neighbors(x) {
                if x < y {
                    edges.push((x, y));
                }
            }
        }
        Graph::build(n, &edges).expect("table incidence is a valid simple graph")
    }
}
