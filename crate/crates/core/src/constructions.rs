//! Graph operations and the regular dp builder.
//!
//! [`build_regular_dp`] produces, for every admissible `(n, r)`, a connected
//! `r`-regular graph on `n` vertices together with a deletion certificate:
//! an isometric vertex subset of every order. Every arbitrary choice is made
//! deterministically (lowest vertex id, then lowest second endpoint), and the
//! certificate is checked before the builder returns.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError};
use crate::isometry::{is_dp_bruteforce, verify_certificate, DpCertificate, IsometryError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("({n}, {r}) is inadmissible: need r >= 3, n >= r + 1, and n even when r is odd")]
    Inadmissible { n: usize, r: usize },
    #[error("circulant graph needs 0 <= r < n and n even when r is odd, got n = {n}, r = {r}")]
    InvalidCirculant { n: usize, r: usize },
    #[error("direct sum chain needs at least one block")]
    EmptyChain,
    #[error("block {block}: {message}")]
    BadBlock { block: usize, message: String },
    #[error("certificate for ({n}, {r}) rejected at order {order}")]
    CertificateRejected { n: usize, r: usize, order: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Isometry(#[from] IsometryError),
}

/// A pair `(n, r)` for which an `r`-regular dp graph on `n` vertices exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AdmissiblePair {
    n: usize,
    r: usize,
}

impl AdmissiblePair {
    pub fn new(n: usize, r: usize) -> Result<Self, ConstructionError> {
        if is_admissible(n, r) {
            Ok(AdmissiblePair { n, r })
        } else {
            Err(ConstructionError::Inadmissible { n, r })
        }
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn r(self) -> usize {
        self.r
    }
}

pub fn is_admissible(n: usize, r: usize) -> bool {
    r >= 3 && n > r && (r.is_multiple_of(2) || n.is_multiple_of(2))
}

/// A named group of vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Part {
    pub name: String,
    pub vertices: Vec<usize>,
}

/// A graph together with the bookkeeping of how it was assembled.
///
/// `parts` partition the vertex set, `labels[v]` is the unique label of
/// vertex `v`, and `removed_edges` lists the edges deleted by direct sums
/// (or other edge removals) in the ids of the final graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TaggedGraph {
    #[serde(skip)]
    pub graph: Graph,
    pub parts: Vec<Part>,
    pub labels: Vec<String>,
    pub removed_edges: Vec<Edge>,
}

impl TaggedGraph {
    /// Wraps `graph` as a single part; vertex labels are `name[i]`.
    pub fn single(graph: Graph, name: &str) -> Self {
        let n = graph.n();
        TaggedGraph {
            graph,
            parts: vec![Part { name: name.to_string(), vertices: (0..n).collect() }],
            labels: (0..n).map(|i| format!("{name}[{i}]")).collect(),
            removed_edges: Vec::new(),
        }
    }

    pub fn part(&self, name: &str) -> Option<&[usize]> {
        self.parts.iter().find(|p| p.name == name).map(|p| p.vertices.as_slice())
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn shifted(&self, shift: usize, prefix: &str) -> (Vec<Part>, Vec<String>, Vec<Edge>) {
        let parts = self
            .parts
            .iter()
            .map(|p| Part {
                name: format!("{prefix}{}", p.name),
                vertices: p.vertices.iter().map(|v| v + shift).collect(),
            })
            .collect();
        let labels = self.labels.iter().map(|l| format!("{prefix}{l}")).collect();
        let removed = self.removed_edges.iter().map(|&(a, b)| (a + shift, b + shift)).collect();
        (parts, labels, removed)
    }
}

/// Circulant graph on `0..n`: `i ~ j` when their circular distance is at most
/// `r / 2`, plus the diameters `i ~ i + n/2` when `r` is odd. `r`-regular.
pub fn circulant(n: usize, r: usize) -> Result<Graph, ConstructionError> {
    if r >= n || (r % 2 == 1 && n % 2 == 1) {
        return Err(ConstructionError::InvalidCirculant { n, r });
    }
    let mut g = Graph::new(n);
    for i in 0..n {
        for step in 1..=r / 2 {
            let j = (i + step) % n;
            if !g.has_edge(i, j) {
                g.add_edge(i, j)?;
            }
        }
        if r % 2 == 1 && i < n / 2 {
            g.add_edge(i, i + n / 2)?;
        }
    }
    Ok(g)
}

fn join_tagged(g: &TaggedGraph, h: &TaggedGraph) -> TaggedGraph {
    let shift = g.graph.n();
    let mut graph = g.graph.disjoint_union(&h.graph);
    for u in 0..shift {
        for v in shift..graph.n() {
            graph.add_edge(u, v).expect("cross edges are new");
        }
    }
    let (hp, hl, hr) = h.shifted(shift, "");
    TaggedGraph {
        graph,
        parts: g.parts.iter().cloned().chain(hp).collect(),
        labels: g.labels.iter().cloned().chain(hl).collect(),
        removed_edges: g.removed_edges.iter().copied().chain(hr).collect(),
    }
}

/// Join: disjoint union plus every edge between the two sides. Vertices of
/// `h` are shifted by `g.n()`. The parts are named `left` and `right`; the
/// edges between them form the underlying bipartite graph.
pub fn join(g: &Graph, h: &Graph) -> TaggedGraph {
    join_tagged(&TaggedGraph::single(g.clone(), "left"), &TaggedGraph::single(h.clone(), "right"))
}

/// The added edges of a join, i.e. those running between `left` and `right`.
pub fn underlying_bipartite_edges(joined: &TaggedGraph) -> Vec<Edge> {
    let (Some(left), Some(right)) = (joined.parts.first(), joined.parts.get(1)) else {
        return Vec::new();
    };
    let mut left_side = vec![false; joined.graph.n()];
    left.vertices.iter().for_each(|&v| left_side[v] = true);
    let mut right_side = vec![false; joined.graph.n()];
    right.vertices.iter().for_each(|&v| right_side[v] = true);
    joined
        .graph
        .edges()
        .filter(|&(a, b)| (left_side[a] && right_side[b]) || (left_side[b] && right_side[a]))
        .collect()
}

/// One summand of a direct sum chain. The first block only needs an
/// `out_edge`, the last only an `in_edge`, middle blocks need both and the
/// two must be vertex-disjoint.
#[derive(Debug, Clone)]
pub struct ChainBlock {
    pub graph: TaggedGraph,
    pub in_edge: Option<Edge>,
    pub out_edge: Option<Edge>,
}

impl ChainBlock {
    pub fn new(graph: Graph, in_edge: Option<Edge>, out_edge: Option<Edge>) -> Self {
        ChainBlock { graph: TaggedGraph::single(graph, "block"), in_edge, out_edge }
    }
}

/// Chains blocks left to right. Block `i`'s out edge `(a, r)` and block
/// `i+1`'s in edge `(b, s)` are removed and replaced by `ab` and `rs`; every
/// vertex keeps its degree. Parts are prefixed `H{i}.`, labels likewise.
pub fn direct_sum_chain(blocks: &[ChainBlock]) -> Result<TaggedGraph, ConstructionError> {
    let last = blocks.len().checked_sub(1).ok_or(ConstructionError::EmptyChain)?;
    if last == 0 {
        return Ok(blocks[0].graph.clone());
    }
    let bad = |block: usize, message: &str| ConstructionError::BadBlock { block, message: message.to_string() };
    let mut offsets = Vec::with_capacity(blocks.len());
    let mut total = 0;
    for (i, b) in blocks.iter().enumerate() {
        let g = &b.graph.graph;
        let needs_in = i > 0;
        let needs_out = i < last;
        if needs_in && b.in_edge.is_none() {
            return Err(bad(i, "missing in edge"));
        }
        if needs_out && b.out_edge.is_none() {
            return Err(bad(i, "missing out edge"));
        }
        for (edge, wanted) in [(b.in_edge, needs_in), (b.out_edge, needs_out)] {
            if let (Some((x, y)), true) = (edge, wanted) {
                if !g.has_edge(x, y) {
                    return Err(bad(i, &format!("designated edge {x}-{y} is not an edge of the block")));
                }
            }
        }
        if let (true, true, Some((a, b2)), Some((c, d))) = (needs_in, needs_out, b.in_edge, b.out_edge) {
            if a == c || a == d || b2 == c || b2 == d {
                return Err(bad(i, "in and out edges share a vertex"));
            }
        }
        offsets.push(total);
        total += g.n();
    }

    let mut graph = Graph::new(total);
    let mut parts = Vec::new();
    let mut labels = Vec::with_capacity(total);
    let mut removed_edges = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        let (p, l, r) = b.graph.shifted(offsets[i], &format!("H{i}."));
        parts.extend(p);
        labels.extend(l);
        removed_edges.extend(r);
        for (x, y) in b.graph.graph.edges() {
            graph.add_edge(x + offsets[i], y + offsets[i])?;
        }
    }
    for i in 0..last {
        let (a, r) = blocks[i].out_edge.unwrap();
        let (b, s) = blocks[i + 1].in_edge.unwrap();
        let (a, r) = (a + offsets[i], r + offsets[i]);
        let (b, s) = (b + offsets[i + 1], s + offsets[i + 1]);
        graph.remove_edge(a, r)?;
        graph.remove_edge(b, s)?;
        graph.add_edge(a, b)?;
        graph.add_edge(r, s)?;
        removed_edges.push((a.min(r), a.max(r)));
        removed_edges.push((b.min(s), b.max(s)));
    }
    Ok(TaggedGraph { graph, parts, labels, removed_edges })
}

/// Direct sum of two graphs: removes `e_g = (u, x)` and `e_h = (v, y)`, then
/// adds `uv` and `xy`. Vertices of `h` are shifted by `g.n()`.
pub fn direct_sum(g: &Graph, e_g: Edge, h: &Graph, e_h: Edge) -> Result<TaggedGraph, ConstructionError> {
    let blocks = [
        ChainBlock { graph: TaggedGraph::single(g.clone(), "G"), in_edge: None, out_edge: Some(e_g) },
        ChainBlock { graph: TaggedGraph::single(h.clone(), "H"), in_edge: Some(e_h), out_edge: None },
    ];
    direct_sum_chain(&blocks)
}

/// Which branch of the builder produced a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConstructionCase {
    /// `r >= 4`, `r + 1 <= n <= 2r`: circulant joined with an independent set.
    Join,
    /// `r >= 4` even, `n = 2r + 1`: `K_{r,r}` minus a matching plus an external vertex.
    ExternalVertex,
    /// `r >= 4`, `n >= 2r + 2`: a small block followed by copies of `K_{r+1}`.
    DirectSumChain,
    /// `r = 3`, `n >= 8`: the twisted ladder.
    Ladder,
    /// `r = 3`, `n` in `{4, 6}`: `K_4` or `K_{3,3}`.
    SmallCubic,
}

#[derive(Debug, Clone)]
pub struct RegularDpConstruction {
    pub tagged: TaggedGraph,
    pub certificate: DpCertificate,
    pub case: ConstructionCase,
}

impl RegularDpConstruction {
    pub fn graph(&self) -> &Graph {
        &self.tagged.graph
    }
}

/// Greedy peeling of a two-part join: repeatedly delete the lowest
/// unprotected vertex of the currently larger part (ties go to `second`),
/// until `stop` vertices remain. Returns the deletion order.
fn peel_two_parts(first: &[usize], second: &[usize], protected: &[usize], stop: usize) -> Vec<usize> {
    let mut parts = [first.to_vec(), second.to_vec()];
    let mut removed = Vec::new();
    while parts[0].len() + parts[1].len() > stop {
        let preferred = usize::from(parts[1].len() >= parts[0].len());
        let pick = [preferred, 1 - preferred].into_iter().find_map(|p| {
            parts[p].iter().position(|v| !protected.contains(v)).map(|i| (p, i))
        });
        let Some((p, i)) = pick else { break };
        removed.push(parts[p].remove(i));
    }
    removed
}

/// Subsets of `0..n` left after each prefix of `removal`.
fn shrinking_sets(base: &[usize], removal: &[usize]) -> Vec<Vec<usize>> {
    let mut current = base.to_vec();
    let mut out = Vec::with_capacity(removal.len());
    for v in removal {
        current.retain(|u| u != v);
        out.push(current.clone());
    }
    out
}

fn join_case(n: usize, r: usize) -> Result<TaggedGraph, ConstructionError> {
    let circ = TaggedGraph::single(circulant(r, 2 * r - n)?, "circulant");
    let indep = TaggedGraph::single(Graph::new(n - r), "independent");
    Ok(join_tagged(&circ, &indep))
}

/// Local ids used by the external-vertex graph on `2r + 1` vertices.
struct ExternalLayout {
    r: usize,
}

impl ExternalLayout {
    fn left(&self, i: usize) -> usize {
        i
    }
    fn right(&self, i: usize) -> usize {
        self.r + i
    }
    fn external(&self) -> usize {
        2 * self.r
    }
    fn half(&self) -> usize {
        self.r / 2
    }
}

fn external_case(r: usize) -> Result<TaggedGraph, ConstructionError> {
    let lay = ExternalLayout { r };
    let mut graph = Graph::complete_bipartite(r, r);
    let mut removed = Vec::new();
    for i in 0..lay.half() {
        graph.remove_edge(lay.left(i), lay.right(i))?;
        removed.push((lay.left(i), lay.right(i)));
    }
    let mut graph_x = Graph::new(2 * r + 1);
    for (a, b) in graph.edges() {
        graph_x.add_edge(a, b)?;
    }
    for i in 0..lay.half() {
        graph_x.add_edge(lay.left(i), lay.external())?;
        graph_x.add_edge(lay.right(i), lay.external())?;
    }
    let mut labels: Vec<String> = (0..r).map(|i| format!("left[{i}]")).collect();
    labels.extend((0..r).map(|i| format!("right[{i}]")));
    labels.push("x".to_string());
    Ok(TaggedGraph {
        graph: graph_x,
        parts: vec![
            Part { name: "left".into(), vertices: (0..r).map(|i| lay.left(i)).collect() },
            Part { name: "right".into(), vertices: (0..r).map(|i| lay.right(i)).collect() },
            Part { name: "external".into(), vertices: vec![lay.external()] },
        ],
        labels,
        removed_edges: removed,
    })
}

/// Isometric subsets of the external-vertex graph, largest first, from order
/// `2r` down to `stop`. With `protect` set, left[r/2] and right[r/2] are
/// never deleted.
fn external_plan(r: usize, protect: bool, stop: usize) -> Vec<Vec<usize>> {
    let lay = ExternalLayout { r };
    let m = lay.half();
    let all: Vec<usize> = (0..=2 * r).collect();
    if protect && r == 4 {
        // Only the two protected vertices lie outside N(x), so x goes early.
        let removal = [lay.left(1), lay.right(0), lay.external(), lay.right(1), lay.left(0)];
        let mut plan = shrinking_sets(&all, &removal);
        plan.retain(|s| s.len() >= stop);
        return plan;
    }
    // Peel N(x) down to left[0] and right[0].
    let mut removal: Vec<usize> = (1..m).flat_map(|i| [lay.left(i), lay.right(i)]).collect();
    // Then one non-neighbour of x from each side.
    let skip = if protect { m + 1 } else { m };
    removal.extend([lay.left(skip), lay.right(skip)]);
    let mut plan = shrinking_sets(&all, &removal);
    // Order r: everything outside x and N(x), a K_{r/2, r/2}.
    let left_rest: Vec<usize> = (m..r).map(|i| lay.left(i)).collect();
    let right_rest: Vec<usize> = (m..r).map(|i| lay.right(i)).collect();
    let mut core: Vec<usize> = left_rest.iter().chain(&right_rest).copied().collect();
    core.sort_unstable();
    if core.len() >= stop {
        plan.push(core.clone());
    }
    let protected: Vec<usize> = if protect { vec![lay.left(m), lay.right(m)] } else { Vec::new() };
    let peel = peel_two_parts(&left_rest, &right_rest, &protected, stop);
    plan.extend(shrinking_sets(&core, &peel));
    plan.retain(|s| s.len() >= stop);
    plan
}

fn ladder_case(n: usize) -> Result<(TaggedGraph, DpCertificate), ConstructionError> {
    let k = n / 2;
    let u = |j: usize| j - 1;
    let v = |j: usize| k + j - 1;
    let mut g = Graph::new(n);
    for j in 1..k {
        g.add_edge(u(j), u(j + 1))?;
        g.add_edge(v(j), v(j + 1))?;
    }
    for j in (1..=k).filter(|&j| j != 2 && j != k - 1) {
        g.add_edge(u(j), v(j))?;
    }
    for (a, b) in [(u(1), v(2)), (u(2), v(1)), (u(k - 1), v(k)), (u(k), v(k - 1))] {
        g.add_edge(a, b)?;
    }
    let mut labels: Vec<String> = (1..=k).map(|j| format!("u{j}")).collect();
    labels.extend((1..=k).map(|j| format!("v{j}")));
    let tagged = TaggedGraph {
        graph: g,
        parts: vec![
            Part { name: "u".into(), vertices: (1..=k).map(u).collect() },
            Part { name: "v".into(), vertices: (1..=k).map(v).collect() },
        ],
        labels,
        removed_edges: vec![(u(2), v(2)), (u(k - 1), v(k - 1))],
    };

    let mut removal_sets: Vec<Vec<usize>> = vec![
        vec![u(1)],
        vec![u(1), u(k)],
        vec![u(1), v(1), u(2)],
        vec![u(1), v(1), u(2), u(k)],
        vec![u(1), v(1), u(2), v(2), u(k)],
        vec![u(1), v(1), u(2), v(k - 1), u(k), v(k)],
    ];
    let mut acc = removal_sets.last().unwrap().clone();
    // u_{k-1} hangs off u_{k-2} once v_{k-1} and v_k are gone, so the u run goes downward.
    for w in (3..k).rev().map(u).chain((2..k - 1).map(v)) {
        acc.push(w);
        removal_sets.push(acc.clone());
    }
    let mut cert = DpCertificate::new();
    cert.insert((0..n).collect());
    for removed in removal_sets.iter().filter(|s| s.len() < n) {
        cert.insert((0..n).filter(|w| !removed.contains(w)).collect());
    }
    if k == 4 {
        // The sixth set leaves {u3, v2}, which are not adjacent.
        cert.insert(vec![u(1), u(2)]);
    }
    Ok((tagged, cert))
}

/// The graph on `s` vertices used for `r + 1 <= s <= 2r + 1`, with the
/// designated out edge `(u, x)` for chaining: an underlying-bipartite edge,
/// chosen with both endpoints outside N(x) in the external-vertex case.
fn small_block(s: usize, r: usize) -> Result<(TaggedGraph, Edge), ConstructionError> {
    if s == 2 * r + 1 {
        let lay = ExternalLayout { r };
        Ok((external_case(r)?, (lay.left(lay.half()), lay.right(lay.half()))))
    } else {
        Ok((join_case(s, r)?, (0, r)))
    }
}

/// Isometric subsets of the small block that keep both endpoints of the out
/// edge, from `s - 1` vertices down to 4.
fn small_block_plan(s: usize, r: usize, (u, x): Edge) -> Vec<Vec<usize>> {
    if s == 2 * r + 1 {
        external_plan(r, true, 4)
    } else {
        let all: Vec<usize> = (0..s).collect();
        let circ: Vec<usize> = (0..r).collect();
        let indep: Vec<usize> = (r..s).collect();
        // For s = 2r - 1 the circulant is a matching and u, x share one neighbour.
        let g = circulant(r, 2 * r - s).expect("admissible block");
        let mut keep = vec![u, x];
        keep.extend(g.neighbors(u).max());
        shrinking_sets(&all, &peel_two_parts(&circ, &indep, &keep, 4))
    }
}

fn chain_case(n: usize, r: usize) -> Result<(TaggedGraph, DpCertificate), ConstructionError> {
    let q = n / (r + 1);
    let t = n % (r + 1);
    let p = q - 1;
    let s = t + r + 1;
    let (h0, (u, x)) = small_block(s, r)?;
    let mut blocks = vec![ChainBlock { graph: h0, in_edge: None, out_edge: Some((u, x)) }];
    for i in 1..=p {
        blocks.push(ChainBlock {
            graph: TaggedGraph::single(Graph::complete(r + 1), "clique"),
            in_edge: Some((0, 1)),
            out_edge: (i < p).then_some((2, 3)),
        });
    }
    let tagged = direct_sum_chain(&blocks)?;

    let block = |i: usize| -> Vec<usize> {
        let start = s + (i - 1) * (r + 1);
        (start..start + r + 1).collect()
    };
    let blocks_from = |i: usize| -> Vec<usize> { (i..=p).flat_map(block).collect() };
    let local = |i: usize, j: usize| s + (i - 1) * (r + 1) + j;
    let union = |a: &[usize], b: &[usize]| -> Vec<usize> { a.iter().chain(b).copied().collect() };
    let without = |set: Vec<usize>, gone: &[usize]| -> Vec<usize> { set.into_iter().filter(|v| !gone.contains(v)).collect() };

    let mut cert = DpCertificate::new();
    cert.insert((0..n).collect());
    // Shrink H0 around u and x, keeping the cliques intact.
    let h0_plan = small_block_plan(s, r, (u, x));
    for sub in &h0_plan {
        cert.insert(union(sub, &blocks_from(1)));
    }
    let h0_core = h0_plan.last().cloned().unwrap_or_else(|| (0..s).collect());
    // Two vertices of H_p away from its in edge, to cover the orders skipped next.
    let tail = [local(p, 2), local(p, 3)];
    cert.insert(without(union(&h0_core, &blocks_from(1)), &tail[..1]));
    cert.insert(without(union(&h0_core, &blocks_from(1)), &tail));
    cert.insert(union(&[u], &blocks_from(1)));
    cert.insert(blocks_from(1));

    // Dismantle H_1 .. H_{p-1} the same way, their in-edge vertices first.
    for i in 1..p {
        let rest = blocks_from(i + 1);
        let order: Vec<usize> = [0, 1].into_iter().chain(4..=r).map(|j| local(i, j)).take(r - 3).collect();
        let sets = shrinking_sets(&block(i), &order);
        for sub in &sets {
            cert.insert(union(sub, &rest));
        }
        let core = sets.last().cloned().unwrap_or_else(|| block(i));
        cert.insert(without(union(&core, &rest), &tail[..1]));
        cert.insert(without(union(&core, &rest), &tail));
        cert.insert(union(&[local(i, 2)], &rest));
        cert.insert(rest);
    }
    // The last clique loses its in-edge vertex first, leaving K_r.
    let last_order: Vec<usize> = (0..r).map(|j| local(p, j)).collect();
    for sub in shrinking_sets(&block(p), &last_order) {
        cert.insert(sub);
    }
    Ok((tagged, cert))
}

fn small_cubic_case(n: usize) -> Result<(TaggedGraph, DpCertificate), ConstructionError> {
    if n == 4 {
        return Ok((TaggedGraph::single(Graph::complete(4), "clique"), DpCertificate::prefix_chain(4)));
    }
    let tagged = join_tagged(
        &TaggedGraph::single(Graph::new(3), "left"),
        &TaggedGraph::single(Graph::new(3), "right"),
    );
    let removal = peel_two_parts(&[0, 1, 2], &[3, 4, 5], &[], 1);
    Ok((tagged, DpCertificate::from_removal_sequence(6, &removal)))
}

/// Builds an `r`-regular dp graph on `n` vertices with its certificate.
pub fn build_regular_dp(n: usize, r: usize) -> Result<RegularDpConstruction, ConstructionError> {
    AdmissiblePair::new(n, r)?;
    let (tagged, certificate, case) = if r == 3 {
        if n >= 8 {
            let (t, c) = ladder_case(n)?;
            (t, c, ConstructionCase::Ladder)
        } else {
            let (t, c) = small_cubic_case(n)?;
            if !is_dp_bruteforce(&t.graph)?.is_dp {
                return Err(ConstructionError::CertificateRejected { n, r, order: 0 });
            }
            (t, c, ConstructionCase::SmallCubic)
        }
    } else if n <= 2 * r {
        let tagged = join_case(n, r)?;
        let circ: Vec<usize> = (0..r).collect();
        let indep: Vec<usize> = (r..n).collect();
        let removal = peel_two_parts(&circ, &indep, &[], 1);
        (tagged, DpCertificate::from_removal_sequence(n, &removal), ConstructionCase::Join)
    } else if n == 2 * r + 1 {
        let tagged = external_case(r)?;
        let mut cert = DpCertificate::new();
        cert.insert((0..n).collect());
        for sub in external_plan(r, false, 1) {
            cert.insert(sub);
        }
        (tagged, cert, ConstructionCase::ExternalVertex)
    } else {
        let (t, c) = chain_case(n, r)?;
        (t, c, ConstructionCase::DirectSumChain)
    };
    let verdict = verify_certificate(&tagged.graph, &certificate)?;
    if let Some(order) = verdict.first_failing_order {
        return Err(ConstructionError::CertificateRejected { n, r, order });
    }
    Ok(RegularDpConstruction { tagged, certificate, case })
}
