//! Small simple undirected graphs stored as one 64-bit neighbor mask per vertex.

mod canon;
mod graph6;

pub use canon::{brute_force_canonical_form, CanonicalForm, MAX_CANON_N};
pub use graph6::{from_graph6, to_graph6};

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_N: usize = 64;

/// An immutable simple undirected graph on at most 64 vertices.
///
/// Row `v` of the adjacency holds the neighbor set N(v) as a bit mask. Rows are
/// symmetric and the diagonal is always clear.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from raw neighbor masks, validating symmetry.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_N {
            return Err(Error::VertexCount(n));
        }
        let mask = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 63 - (row & !mask).leading_zeros() as usize,
                    n,
                });
            }
            let mut rest = row;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if rows[u] & bit(v) == 0 {
                    return Err(Error::Parse(format!("asymmetric adjacency at ({v},{u})")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Unchecked constructor for rows already known to be valid.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { n: rows.len(), adj: rows }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> DegreeSequence {
        DegreeSequence(self.adj.iter().map(|r| r.count_ones() as usize).collect())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    /// Ir(G) = max degree minus min degree.
    pub fn irregularity(&self) -> usize {
        self.max_degree() - self.min_degree()
    }

    pub fn is_regular(&self) -> bool {
        self.irregularity() == 0
    }

    /// Edges as `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in BitIter(self.adj[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_mask(0) == full_mask(self.n)
    }

    /// Vertex mask of the connected component containing `v`.
    pub fn component_mask(&self, v: usize) -> u64 {
        let mut seen = bit(v);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in BitIter(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// G ∨ H: disjoint copies plus every cross edge. `h` is shifted past `self`.
    pub fn join(&self, h: &Graph) -> Result<Graph> {
        self.combine(h, true)
    }

    /// G ∪ H on disjoint vertex sets.
    pub fn disjoint_union(&self, h: &Graph) -> Result<Graph> {
        self.combine(h, false)
    }

    fn combine(&self, h: &Graph, cross: bool) -> Result<Graph> {
        let n = self.n + h.n;
        if n > MAX_N {
            return Err(Error::SizeOverflow(n));
        }
        let low = full_mask(self.n);
        let high = full_mask(n) & !low;
        let mut rows = Vec::with_capacity(n);
        for &r in &self.adj {
            rows.push(r | if cross { high } else { 0 });
        }
        for &r in &h.adj {
            rows.push((r << self.n) | if cross { low } else { 0 });
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    pub fn complement(&self) -> Graph {
        let all = full_mask(self.n);
        let rows = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &r)| !r & all & !bit(v))
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    /// Copy with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut rows = self.adj.clone();
        rows[u] |= bit(v);
        rows[v] |= bit(u);
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Copy with the edge `uv` removed (no-op when absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut rows = self.adj.clone();
        rows[u] &= !bit(v);
        rows[v] &= !bit(u);
        Ok(Graph::from_rows_unchecked(rows))
    }

    pub(crate) fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    /// Subgraph induced by `vertices`, relabelled 0.. in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut rows = vec![0u64; vertices.len()];
        if vertices.is_empty() {
            return Err(Error::VertexCount(0));
        }
        for (i, &a) in vertices.iter().enumerate() {
            if a >= self.n {
                return Err(Error::VertexOutOfRange { vertex: a, n: self.n });
            }
            for (j, &b) in vertices.iter().enumerate() {
                if i != j && self.has_edge(a, b) {
                    rows[i] |= bit(j);
                }
            }
        }
        Graph::from_rows(rows)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Parse("permutation length mismatch".into()));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::Parse("not a permutation".into()));
            }
            seen |= bit(p);
        }
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for v in BitIter(self.adj[u]) {
                rows[perm[u]] |= bit(perm[v]);
            }
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.has_edge(u, v) as i64).collect())
            .collect()
    }

    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        CanonicalForm::of(self)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }

    pub fn to_graph6(&self) -> String {
        to_graph6(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        from_graph6(text)
    }
}

impl std::str::FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        from_graph6(s)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Degrees of a graph, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn max(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn min(&self) -> usize {
        self.0.iter().copied().min().unwrap_or(0)
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Degrees sorted in non-increasing order.
    pub fn sorted_desc(&self) -> Vec<usize> {
        let mut d = self.0.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}
