//! Simple undirected graphs on vertex ids `0..n`.
//!
//! Adjacency is stored as one bit row per vertex, so membership tests and
//! neighbourhood intersections are word operations. All vertex ids are
//! 0-based.

use std::fmt;

use thiserror::Error;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} already present")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
    #[error("vertex {0} listed twice in subset")]
    DuplicateVertex(usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            m: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        if n >= 3 {
            for i in 0..n {
                g.insert_unchecked(i, (i + 1) % n);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.insert_unchecked(i - 1, i);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    /// Number of 64-bit words per adjacency row.
    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    fn set_bit(&mut self, u: usize, v: usize, on: bool) {
        let w = u * self.words + v / 64;
        if on {
            self.rows[w] |= 1 << (v % 64);
        } else {
            self.rows[w] &= !(1 << (v % 64));
        }
    }

    fn insert_unchecked(&mut self, u: usize, v: usize) {
        self.set_bit(u, v, true);
        self.set_bit(v, u, true);
        self.m += 1;
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.insert_unchecked(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        self.set_bit(u, v, false);
        self.set_bit(v, u, false);
        self.m -= 1;
        Ok(())
    }

    /// Out-of-range ids are simply not adjacent to anything.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.neighbors(u).filter(move |&w| self.has_edge(v, w))
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// The common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degrees = (0..self.n).map(|v| self.degree(v));
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn complement(&self) -> Graph {
        let mut h = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    h.insert_unchecked(u, v);
                }
            }
        }
        h
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "relabeling must cover every vertex");
        let mut h = Graph::new(self.n);
        for (u, v) in self.edges() {
            h.insert_unchecked(perm[u], perm[v]);
        }
        h
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut h = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            h.insert_unchecked(u, v);
        }
        for (u, v) in other.edges() {
            h.insert_unchecked(u + shift, v + shift);
        }
        h
    }

    /// True iff a search from vertex 0 reaches every vertex. Graphs on zero or
    /// one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }

    /// The subgraph induced by `subset`.
    ///
    /// Vertices keep their relative order: the i-th smallest id of `subset`
    /// becomes vertex `i`. The returned map sends each old id to its new id.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        let mut relabel = vec![None; self.n];
        for &v in subset {
            self.check_vertex(v)?;
            if relabel[v].is_some() {
                return Err(GraphError::DuplicateVertex(v));
            }
            relabel[v] = Some(0);
        }
        let mut next = 0;
        let mut kept = Vec::with_capacity(subset.len());
        for (v, slot) in relabel.iter_mut().enumerate() {
            if slot.is_some() {
                *slot = Some(next);
                kept.push(v);
                next += 1;
            }
        }
        let mut h = Graph::new(kept.len());
        for (i, &u) in kept.iter().enumerate() {
            for &v in &kept[i + 1..] {
                if self.has_edge(u, v) {
                    h.insert_unchecked(i, relabel[v].unwrap());
                }
            }
        }
        Ok((h, relabel))
    }

    /// Removes vertex `v`, relabeling the remaining vertices in order.
    pub fn without_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let rest: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced_subgraph(&rest)?.0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}
