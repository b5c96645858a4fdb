//! Finite simple undirected graphs on the vertex set `0..n`.

mod build;
mod delete;
mod extremal;
mod graph6;
mod random;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use build::{complete, cycle, disjoint_union, empty, join, path, star};
pub use delete::{delete, Deleted, DeletionSpec};
pub use extremal::{build_extremal, ExtremalParams, ExtremalWitness};
pub use graph6::{
    emit_graph6, parse_graph6, parse_graph6_bytes, Graph6Error, Graph6ErrorKind, GRAPH6_MAX_N,
};
pub use random::{generate_random, generate_with};

/// An undirected edge with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loop {a}-{b}");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = Error;

    fn try_from([a, b]: [usize; 2]) -> Result<Self> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        Ok(Edge::new(a, b))
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask_iter(mask).collect())
    }

    /// Panics if some member is `>= 64`.
    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| {
            assert!(v < 64, "vertex {v} does not fit a 64-bit mask");
            m | 1 << v
        })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Applies `map` to every member and re-sorts.
    pub fn relabel(&self, map: &[usize]) -> VertexSet {
        self.iter().map(|v| map[v]).collect()
    }

    /// Fails with the first member that is `>= n`.
    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&v| v >= n) {
            Some(&vertex) => Err(Error::VertexOutOfRange { vertex, n }),
            None => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(a: [usize; N]) -> Self {
        a.into_iter().collect()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

/// Iterates the set bits of `mask` in increasing order.
pub fn mask_iter(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Finite simple undirected graph stored as adjacency bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// endpoints outside `0..n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if !g.insert_edge(a, b) {
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
        }
        Ok(g)
    }

    /// Returns false if the edge was already present.
    pub(crate) fn insert_edge(&mut self, a: usize, b: usize) -> bool {
        debug_assert!(a != b && a < self.n && b < self.n);
        if self.has_edge(a, b) {
            return false;
        }
        self.rows[a * self.words + b / 64] |= 1 << (b % 64);
        self.rows[b * self.words + a / 64] |= 1 << (a % 64);
        self.edge_count += 1;
        true
    }

    pub(crate) fn remove_edge(&mut self, a: usize, b: usize) -> bool {
        if !self.has_edge(a, b) {
            return false;
        }
        self.rows[a * self.words + b / 64] &= !(1 << (b % 64));
        self.rows[b * self.words + a / 64] &= !(1 << (a % 64));
        self.edge_count -= 1;
        true
    }

    /// Copy of the graph with `e` added.
    pub fn with_edge(&self, e: Edge) -> Result<Graph> {
        self.check_vertex(e.v)?;
        let mut g = self.clone();
        if !g.insert_edge(e.u, e.v) {
            return Err(Error::DuplicateEdge(e.u, e.v));
        }
        Ok(g)
    }

    /// Copy of the graph with `e` removed; vertex labels are unchanged.
    pub fn without_edge(&self, e: Edge) -> Result<Graph> {
        let mut g = self.clone();
        if e.v >= self.n || !g.remove_edge(e.u, e.v) {
            return Err(Error::NotAnEdge(e.u, e.v));
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.rows[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| mask_iter(w).map(move |b| i * 64 + b))
    }

    /// Neighborhood as a bit mask. Only meaningful when `order() <= 64`.
    #[inline]
    pub fn adj_mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[v * self.words]
    }

    /// Mask with one bit per vertex. Panics above 64 vertices.
    pub fn full_mask(&self) -> u64 {
        assert!(self.n <= 64, "graph too large for mask operations");
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        (0..self.n)
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| Edge { u, v })
            })
            .collect()
    }

    /// `δ(G)`; zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n;
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        let mut stack = Vec::new();
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for y in self.neighbors(x) {
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        stack.push(y);
                    } else if color[y] == color[x] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `d_{G-S}(x)` for `x ∉ S`.
    pub fn degree_avoiding(&self, x: usize, removed: &[bool]) -> usize {
        self.neighbors(x).filter(|&y| !removed[y]).count()
    }

    /// Indicator vector of `s`.
    pub fn indicator(&self, s: &VertexSet) -> Result<Vec<bool>> {
        s.check_range(self.n)?;
        let mut ind = vec![false; self.n];
        for v in s.iter() {
            ind[v] = true;
        }
        Ok(ind)
    }

    /// `i(G-S)`: vertices outside `s` with no neighbor outside `s`.
    pub fn isolated_count(&self, s: &VertexSet) -> Result<usize> {
        Ok(self.isolated_vertices(s)?.len())
    }

    /// The isolated vertices of `G-S`.
    pub fn isolated_vertices(&self, s: &VertexSet) -> Result<VertexSet> {
        let removed = self.indicator(s)?;
        Ok((0..self.n)
            .filter(|&x| !removed[x] && self.degree_avoiding(x, &removed) == 0)
            .collect())
    }

    /// `i(G)`.
    pub fn isolated(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 0).count()
    }

    /// `i(G-S)` with `s` given as a mask of removed vertices.
    #[inline]
    pub fn isolated_count_mask(&self, removed: u64) -> u32 {
        let alive = self.full_mask() & !removed;
        mask_iter(alive)
            .filter(|&v| self.adj_mask(v) & alive == 0)
            .count() as u32
    }

    /// Union of the neighborhoods of `s`.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        s.iter().flat_map(|v| self.neighbors(v)).collect()
    }

    /// Connected components, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
