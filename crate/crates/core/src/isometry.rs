//! Isometric subgraphs and distance-preserving (dp) checks.
//!
//! Only induced subgraphs are searched. If some subgraph `H` on vertex set
//! `S` is isometric then `d_G <= d_G[S] <= d_H = d_G` on `S`, so the induced
//! subgraph `G[S]` is isometric as well; nothing is lost.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::distance::{bfs, distance_matrix, Distance};
use crate::graph::{Graph, GraphError};

/// Largest order the bitmask subset search supports.
pub const MAX_BRUTEFORCE_N: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsometryError {
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("exhaustive dp search supports at most {MAX_BRUTEFORCE_N} vertices, got {0}")]
    TooLarge(usize),
    #[error("certificate has no subset for order {0}")]
    MissingOrder(usize),
    #[error("certificate subset for order {order} has {size} vertices")]
    WrongSize { order: usize, size: usize },
    #[error("certificate lists order {order}, but the graph has only {n} vertices")]
    UnexpectedOrder { order: usize, n: usize },
    #[error("certificate line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One vertex subset per order `k = 1..=n`, each claimed to induce an
/// isometric subgraph. The subsets need not be nested.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DpCertificate {
    per_order: BTreeMap<usize, Vec<usize>>,
}

impl DpCertificate {
    pub fn new() -> Self {
        Self::default()
    }

    /// Stores `subset` (sorted) under its own size.
    pub fn insert(&mut self, mut subset: Vec<usize>) {
        subset.sort_unstable();
        self.per_order.insert(subset.len(), subset);
    }

    /// Stores `subset` under an explicit order, which the verifier checks.
    pub fn insert_at(&mut self, order: usize, mut subset: Vec<usize>) {
        subset.sort_unstable();
        self.per_order.insert(order, subset);
    }

    /// Prefix chain `{0}, {0,1}, ..., {0..n-1}`.
    pub fn prefix_chain(n: usize) -> Self {
        let mut cert = Self::new();
        for k in 1..=n {
            cert.insert((0..k).collect());
        }
        cert
    }

    /// Certificate obtained by deleting `removal_order` one vertex at a time
    /// from the vertex set `0..n`.
    pub fn from_removal_sequence(n: usize, removal_order: &[usize]) -> Self {
        let mut alive = vec![true; n];
        let mut cert = Self::new();
        cert.insert((0..n).collect());
        for &v in removal_order {
            alive[v] = false;
            let rest: Vec<usize> = (0..n).filter(|&u| alive[u]).collect();
            if !rest.is_empty() {
                cert.insert(rest);
            }
        }
        cert
    }

    pub fn get(&self, order: usize) -> Option<&[usize]> {
        self.per_order.get(&order).map(Vec::as_slice)
    }

    pub fn orders(&self) -> impl Iterator<Item = (usize, &[usize])> + '_ {
        self.per_order.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    pub fn len(&self) -> usize {
        self.per_order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.per_order.is_empty()
    }

    /// Maps every vertex id through `f`.
    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> Self {
        let mut cert = Self::new();
        for (&k, s) in &self.per_order {
            cert.insert_at(k, s.iter().map(|&v| f(v)).collect());
        }
        cert
    }

    /// One line per order, ascending: `k: v1 v2 ... vk`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, s) in &self.per_order {
            let _ = writeln!(out, "{k}: {}", s.iter().join(" "));
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self, IsometryError> {
        let mut cert = Self::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| IsometryError::Parse { line: line_no, message };
            let (key, rest) = line.split_once(':').ok_or_else(|| err("expected \"k: v1 ... vk\"".into()))?;
            let order: usize = key.trim().parse().map_err(|_| err(format!("bad order {:?}", key.trim())))?;
            let subset = rest
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| err(format!("bad vertex {t:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if cert.per_order.contains_key(&order) {
                return Err(err(format!("order {order} listed twice")));
            }
            cert.insert_at(order, subset);
        }
        Ok(cert)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderWitness {
    pub order: usize,
    /// Lexicographically first isometric subset of this order, if any.
    pub subset: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DpReport {
    pub is_dp: bool,
    /// Ascending by order.
    pub witnesses: Vec<OrderWitness>,
    /// Largest order with no isometric subset (the search runs from `n` down).
    pub first_failing_order: Option<usize>,
}

impl DpReport {
    pub fn witness(&self, order: usize) -> Option<&[usize]> {
        self.witnesses.get(order.checked_sub(1)?)?.subset.as_deref()
    }

    pub fn to_certificate(&self) -> Option<DpCertificate> {
        let mut cert = DpCertificate::new();
        for w in &self.witnesses {
            cert.insert(w.subset.clone()?);
        }
        Some(cert)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateVerdict {
    pub valid: bool,
    pub first_failing_order: Option<usize>,
}

/// Subset isometry on graphs of at most 64 vertices, by comparing breadth-first
/// layers inside the subset against the distance rings of the whole graph.
pub(crate) struct MaskChecker {
    adj: Vec<u64>,
    /// `rings[u][d]` = vertices at distance exactly `d` from `u`.
    rings: Vec<Vec<u64>>,
    reach: Vec<u64>,
}

fn mask_bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(b)
    })
}

impl MaskChecker {
    pub(crate) fn new(g: &Graph) -> Result<Self, IsometryError> {
        let n = g.n();
        if n > MAX_BRUTEFORCE_N {
            return Err(IsometryError::TooLarge(n));
        }
        let adj = (0..n).map(|v| g.row(v)[0]).collect();
        let dm = distance_matrix(g);
        let mut rings = Vec::with_capacity(n);
        let mut reach = Vec::with_capacity(n);
        for u in 0..n {
            let mut r: Vec<u64> = Vec::new();
            let mut all = 0u64;
            for (v, d) in dm.row(u).iter().enumerate() {
                if let Distance::Finite(d) = *d {
                    let d = d as usize;
                    if r.len() <= d {
                        r.resize(d + 1, 0);
                    }
                    r[d] |= 1 << v;
                    all |= 1 << v;
                }
            }
            rings.push(r);
            reach.push(all);
        }
        Ok(MaskChecker { adj, rings, reach })
    }

    pub(crate) fn is_isometric(&self, s: u64) -> bool {
        for u in mask_bits(s) {
            let ring = &self.rings[u];
            let mut visited = 1u64 << u;
            let mut frontier = visited;
            let mut level = 1;
            loop {
                let expected = ring.get(level).map_or(0, |r| r & s);
                let mut next = 0u64;
                for v in mask_bits(frontier) {
                    next |= self.adj[v];
                }
                next &= s & !visited;
                if next != expected {
                    return false;
                }
                if next == 0 {
                    break;
                }
                visited |= next;
                frontier = next;
                level += 1;
            }
            if visited != s & self.reach[u] {
                return false;
            }
        }
        true
    }

    /// Lexicographically first isometric subset of size `k`.
    pub(crate) fn find_witness(&self, n: usize, k: usize) -> Option<Vec<usize>> {
        (0..n).combinations(k).find(|c| self.is_isometric(c.iter().fold(0, |m, &v| m | 1 << v)))
    }
}

fn check_subset(g: &Graph, s: &[usize]) -> Result<(), IsometryError> {
    if s.is_empty() {
        return Err(IsometryError::EmptySubset);
    }
    let mut seen = vec![false; g.n()];
    for &v in s {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() }.into());
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(GraphError::DuplicateVertex(v).into());
        }
    }
    Ok(())
}

/// Whether the subgraph induced by `s` preserves every pairwise distance of
/// `g`.
pub fn is_isometric(g: &Graph, s: &[usize]) -> Result<bool, IsometryError> {
    check_subset(g, s)?;
    if g.n() <= MAX_BRUTEFORCE_N {
        let checker = MaskChecker::new(g)?;
        return Ok(checker.is_isometric(s.iter().fold(0, |m, &v| m | 1 << v)));
    }
    let (h, relabel) = g.induced_subgraph(s)?;
    for &u in s {
        let dg = bfs(g, u);
        let dh = bfs(&h, relabel[u].unwrap());
        if s.iter().any(|&v| dg[v] != dh[relabel[v].unwrap()]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every two nonadjacent neighbours of `v` have a common neighbour other than
/// `v`. When this holds, deleting `v` keeps all distances among the others.
pub fn lemma_condition_holds(g: &Graph, v: usize) -> Result<bool, IsometryError> {
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() }.into());
    }
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) && !g.common_neighbors(x, y).any(|w| w != v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exhaustive dp check: for each order from `n` down to 1, the
/// lexicographically first isometric subset, or proof by exhaustion that
/// none exists.
pub fn is_dp_bruteforce(g: &Graph) -> Result<DpReport, IsometryError> {
    let n = g.n();
    if !g.is_connected() {
        return Err(IsometryError::Disconnected);
    }
    let checker = MaskChecker::new(g)?;
    let mut witnesses = Vec::with_capacity(n);
    let mut first_failing_order = None;
    for k in (1..=n).rev() {
        let subset = checker.find_witness(n, k);
        if subset.is_none() && first_failing_order.is_none() {
            first_failing_order = Some(k);
        }
        witnesses.push(OrderWitness { order: k, subset });
    }
    witnesses.reverse();
    Ok(DpReport { is_dp: first_failing_order.is_none(), witnesses, first_failing_order })
}

/// Same search as [`is_dp_bruteforce`], stopping at the first order without
/// a witness.
pub fn is_distance_preserving(g: &Graph) -> Result<bool, IsometryError> {
    let n = g.n();
    if !g.is_connected() {
        return Err(IsometryError::Disconnected);
    }
    let checker = MaskChecker::new(g)?;
    Ok((1..=n).rev().all(|k| checker.find_witness(n, k).is_some()))
}

/// Checks the certificate's shape against `g`, then every subset from order
/// `n` down to 1.
pub fn verify_certificate(g: &Graph, cert: &DpCertificate) -> Result<CertificateVerdict, IsometryError> {
    let n = g.n();
    if let Some((&order, _)) = cert.per_order.iter().find(|(&k, _)| k == 0 || k > n) {
        return Err(IsometryError::UnexpectedOrder { order, n });
    }
    for k in 1..=n {
        let s = cert.get(k).ok_or(IsometryError::MissingOrder(k))?;
        if s.len() != k {
            return Err(IsometryError::WrongSize { order: k, size: s.len() });
        }
        check_subset(g, s)?;
    }
    let fast = (n <= MAX_BRUTEFORCE_N).then(|| MaskChecker::new(g)).transpose()?;
    for k in (1..=n).rev() {
        let s = cert.get(k).unwrap();
        let ok = match &fast {
            Some(checker) => checker.is_isometric(s.iter().fold(0, |m, &v| m | 1 << v)),
            None => is_isometric(g, s)?,
        };
        if !ok {
            return Ok(CertificateVerdict { valid: false, first_failing_order: Some(k) });
        }
    }
    Ok(CertificateVerdict { valid: true, first_failing_order: None })
}
