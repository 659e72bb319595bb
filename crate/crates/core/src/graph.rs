//! Immutable simple undirected graphs and the combinatorial primitives the
//! spectral and coloring code is built on.
//!
//! Vertices are dense indices `0..n`. Adjacency is stored twice: as sorted
//! neighbor lists for iteration and as bitset rows for constant-time pair
//! queries and word-parallel set counts.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Structural identity of a graph: equal for graphs with the same vertex
/// count and edge set.
pub type Fingerprint = u64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    neighbors: Vec<Vec<usize>>,
    edge_count: usize,
    fingerprint: Fingerprint,
}

/// How two distinct vertices relate through their neighborhoods.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    /// Adjacent, and `N(v) \ {w} = N(w) \ {v}`.
    Twin,
    /// Non-adjacent with identical neighborhoods.
    Duplicate,
    Neither,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Repeated edges (in
    /// either orientation) are collapsed.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let words = n.div_ceil(64);
        let mut rows = vec![0u64; n * words];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u * words + v / 64] |= 1 << (v % 64);
            rows[v * words + u / 64] |= 1 << (u % 64);
        }
        Ok(Self::from_rows(n, words, rows))
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edge_list(n, &[])
    }

    fn from_rows(n: usize, words: usize, rows: Vec<u64>) -> Self {
        let neighbors: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let row = &rows[v * words..(v + 1) * words];
                let mut out = Vec::new();
                for (w, &word) in row.iter().enumerate() {
                    let mut bits = word;
                    while bits != 0 {
                        let b = bits.trailing_zeros() as usize;
                        out.push(w * 64 + b);
                        bits &= bits - 1;
                    }
                }
                out
            })
            .collect();
        let edge_count = neighbors.iter().map(Vec::len).sum::<usize>() / 2;

        // FNV-1a over (n, sorted edges)
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut mix = |x: u64| {
            for byte in x.to_le_bytes() {
                h ^= byte as u64;
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        };
        mix(n as u64);
        for (u, nb) in neighbors.iter().enumerate() {
            for &v in nb.iter().filter(|&&v| v > u) {
                mix(u as u64);
                mix(v as u64);
            }
        }

        Graph { n, words, rows, neighbors, edge_count, fingerprint: h }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn fingerprint(&self) -> Fingerprint {
        self.fingerprint
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors.iter().enumerate().flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Number of neighbors of `v` inside `subset`.
    pub fn neighbors_in(&self, v: usize, subset: &VertexSubset) -> usize {
        self.row(v).iter().zip(&subset.mask).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Number of connected components (breadth-first search).
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        let mut components = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.neighbors[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        components
    }

    /// `e(U1, U2)`: the number of edges `{u, v}` with `u ∈ U1` and `v ∈ U2`.
    /// Each edge is counted once even when both endpoints lie in `U1 ∩ U2`.
    pub fn edge_count_between(&self, u1: &VertexSubset, u2: &VertexSubset) -> Result<usize> {
        self.owns(u1)?;
        self.owns(u2)?;
        Ok(self
            .edges()
            .filter(|&(a, b)| (u1.contains(a) && u2.contains(b)) || (u1.contains(b) && u2.contains(a)))
            .count())
    }

    pub fn is_independent_set(&self, u: &VertexSubset) -> Result<bool> {
        self.owns(u)?;
        Ok(u.iter().all(|v| self.neighbors_in(v, u) == 0))
    }

    pub fn classify_pair(&self, v: usize, w: usize) -> Result<PairKind> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        if v == w {
            return Err(Error::SameVertex(v));
        }
        let same = (0..self.n).filter(|&u| u != v && u != w).all(|u| self.adjacent(v, u) == self.adjacent(w, u));
        Ok(match (same, self.adjacent(v, w)) {
            (true, true) => PairKind::Twin,
            (true, false) => PairKind::Duplicate,
            _ => PairKind::Neither,
        })
    }

    /// Subgraph induced by `u`, together with the old→new index map
    /// (`None` for vertices outside `u`). New indices follow the old order.
    pub fn induced_subgraph(&self, u: &VertexSubset) -> Result<(Graph, Vec<Option<usize>>)> {
        self.owns(u)?;
        if u.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut relabel = vec![None; self.n];
        for (new, old) in u.iter().enumerate() {
            relabel[old] = Some(new);
        }
        let edges: Vec<(usize, usize)> = self.edges().filter_map(|(a, b)| Some((relabel[a]?, relabel[b]?))).collect();
        Ok((Graph::from_edge_list(u.len(), &edges)?, relabel))
    }

    pub fn min_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some(d)` if every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        self.neighbors.iter().all(|nb| nb.len() == d).then_some(d)
    }

    /// First vertex of degree zero, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.neighbors[v].is_empty())
    }

    pub(crate) fn require_positive_degrees(&self) -> Result<()> {
        match self.isolated_vertex() {
            Some(v) => Err(Error::IsolatedVertex(v)),
            None => Ok(()),
        }
    }

    fn owns(&self, u: &VertexSubset) -> Result<()> {
        if u.parent == self.fingerprint && u.n == self.n {
            Ok(())
        } else {
            Err(Error::ForeignObject)
        }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges: Vec<(usize, usize)> =
            self.edges().chain(other.edges().map(|(a, b)| (a + shift, b + shift))).collect();
        Graph::from_edge_list(self.n + other.n, &edges).expect("union of valid graphs")
    }

    /// Complement graph (no loops).
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edge_list(self.n, &edges).expect("complement of valid graph")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: perm.len() });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Domain("relabeling is not a permutation".into()));
            }
        }
        let edges: Vec<_> = self.edges().map(|(a, b)| (perm[a], perm[b])).collect();
        Graph::from_edge_list(self.n, &edges)
    }

    /// Edge-list text: `n m` on the first line, then one `u v` per line.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        let (line, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
        let (n, m) = parse_pair(line, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            edges.push(parse_pair(line, l)?);
        }
        if edges.len() != m {
            return Err(Error::Parse { line, msg: format!("header announces {m} edges, found {}", edges.len()) });
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Graphviz DOT, undirected, no attributes.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

fn parse_pair(line: usize, s: &str) -> Result<(usize, usize)> {
    let mut it =
        s.split_whitespace().map(|t| t.parse::<usize>().map_err(|e| Error::Parse { line, msg: format!("`{t}`: {e}") }));
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::Parse { line, msg: "expected two integers".into() }),
    }
}

/// A set of vertices of one particular graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSubset {
    parent: Fingerprint,
    n: usize,
    members: Vec<usize>,
    mask: Vec<u64>,
}

impl VertexSubset {
    pub fn new(g: &Graph, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = vec![0u64; g.words];
        let mut members = Vec::new();
        for v in vertices {
            g.check_vertex(v)?;
            let bit = 1u64 << (v % 64);
            if mask[v / 64] & bit != 0 {
                return Err(Error::DuplicateVertex(v));
            }
            mask[v / 64] |= bit;
            members.push(v);
        }
        members.sort_unstable();
        Ok(VertexSubset { parent: g.fingerprint, n: g.n, members, mask })
    }

    pub fn all(g: &Graph) -> Self {
        Self::new(g, 0..g.n()).expect("all vertices are valid")
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.mask[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn is_disjoint(&self, other: &VertexSubset) -> bool {
        self.mask.iter().zip(&other.mask).all(|(a, b)| a & b == 0)
    }

    pub(crate) fn parent(&self) -> Fingerprint {
        self.parent
    }
}
