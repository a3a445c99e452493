//! Exact canonical labeling.
//!
//! Individualization-refinement search over ordered partitions. Every leaf
//! of the search tree is a discrete partition, read as a relabeling of the
//! graph; the canonical form is the lexicographically largest relabeled
//! adjacency string over all leaves. Automorphisms discovered at equivalent
//! leaves prune the tree: children in the same orbit of the pointwise
//! stabilizer of the current path are skipped, and a leaf equivalent to the
//! first leaf abandons its whole branch back to the common ancestor.

use std::collections::VecDeque;
use std::fmt;

use crate::graph::Graph;

/// Byte string identifying an isomorphism class.
///
/// Layout: the vertex count as 4 big-endian bytes, then the upper triangle of
/// the canonically relabeled adjacency matrix in column-major order (columns
/// `1..n`, rows top-down), packed most-significant bit first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn n(&self) -> usize {
        u32::from_be_bytes(self.0[..4].try_into().unwrap()) as usize
    }

    /// The canonical representative of the class.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let bits = &self.0[4..];
        let mut g = Graph::new(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k / 8] >> (7 - k % 8) & 1 == 1 {
                    g.add_edge(i, j).expect("canonical bits describe a simple graph");
                }
                k += 1;
            }
        }
        g
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone)]
struct Partition {
    /// Position -> vertex.
    lab: Vec<usize>,
    /// Cell start -> one past the cell's last position. Only meaningful at
    /// cell starts.
    cell_end: Vec<usize>,
    /// Vertex -> start of the cell containing it.
    cell_of: Vec<usize>,
    cells: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut cell_end = vec![0; n];
        if n > 0 {
            cell_end[0] = n;
        }
        Partition {
            lab: (0..n).collect(),
            cell_end,
            cell_of: vec![0; n],
            cells: usize::from(n > 0),
        }
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    fn first_nonsingleton(&self) -> Option<usize> {
        let mut start = 0;
        while start < self.lab.len() {
            let end = self.cell_end[start];
            if end - start > 1 {
                return Some(start);
            }
            start = end;
        }
        None
    }

    /// Splits `v` off the front of its cell and refines. Returns the new
    /// partition; `self` is untouched.
    fn individualize(&self, g: &Graph, v: usize) -> Partition {
        let mut p = self.clone();
        let start = p.cell_of[v];
        let end = p.cell_end[start];
        let pos = (start..end).find(|&i| p.lab[i] == v).unwrap();
        p.lab.swap(start, pos);
        p.cell_end[start] = start + 1;
        p.cell_end[start + 1] = end;
        for i in start + 1..end {
            let u = p.lab[i];
            p.cell_of[u] = start + 1;
        }
        p.cells += 1;
        p.refine(g, VecDeque::from([start]));
        p
    }

    /// Equitable refinement driven by a queue of splitter cells.
    fn refine(&mut self, g: &Graph, mut queue: VecDeque<usize>) {
        let n = self.lab.len();
        let words = g.words();
        let mut in_queue = vec![false; n];
        for &s in &queue {
            in_queue[s] = true;
        }
        let mut mask = vec![0u64; words];
        let mut scratch: Vec<(u32, usize)> = Vec::with_capacity(n);
        while let Some(splitter) = queue.pop_front() {
            if self.is_discrete() {
                return;
            }
            in_queue[splitter] = false;
            mask.iter_mut().for_each(|w| *w = 0);
            for &v in &self.lab[splitter..self.cell_end[splitter]] {
                mask[v / 64] |= 1 << (v % 64);
            }
            let mut start = 0;
            while start < n {
                let end = self.cell_end[start];
                if end - start > 1 {
                    scratch.clear();
                    for &v in &self.lab[start..end] {
                        let count: u32 = g.row(v).iter().zip(&mask).map(|(a, b)| (a & b).count_ones()).sum();
                        scratch.push((count, v));
                    }
                    let first = scratch[0].0;
                    if scratch.iter().any(|&(c, _)| c != first) {
                        scratch.sort_by_key(|&(c, _)| c);
                        let mut frag = start;
                        for (offset, &(c, v)) in scratch.iter().enumerate() {
                            let pos = start + offset;
                            if offset > 0 && c != scratch[offset - 1].0 {
                                self.cell_end[frag] = pos;
                                frag = pos;
                                self.cells += 1;
                            }
                            self.lab[pos] = v;
                            self.cell_of[v] = frag;
                        }
                        self.cell_end[frag] = end;
                        let mut f = start;
                        while f < end {
                            if !in_queue[f] {
                                in_queue[f] = true;
                                queue.push_back(f);
                            }
                            f = self.cell_end[f];
                        }
                    }
                }
                start = end;
            }
        }
    }
}

/// Adjacency string of `g` relabeled so that position `p` holds `lab[p]`.
fn leaf_certificate(g: &Graph, lab: &[usize]) -> Vec<u64> {
    let n = lab.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut cert = vec![0u64; total.div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        let vj = lab[j];
        for &vi in &lab[..j] {
            if g.has_edge(vi, vj) {
                cert[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    cert
}

struct Leaf {
    cert: Vec<u64>,
    lab: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Automorphisms as vertex maps.
    generators: Vec<Vec<usize>>,
}

fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a] = b;
    }
    gamma
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Search<'_> {
    /// Orbit representatives under the generators that fix `path` pointwise.
    fn stabilizer_orbits(&self, path: &[usize]) -> Vec<usize> {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        for gamma in &self.generators {
            if path.iter().all(|&v| gamma[v] == v) {
                for (v, &w) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn visit_leaf(&mut self, lab: Vec<usize>, path: &[usize]) -> Option<usize> {
        let cert = leaf_certificate(self.g, &lab);
        let Some(first) = &self.first else {
            let leaf = Leaf { cert, lab, path: path.to_vec() };
            self.best = Some(Leaf { cert: leaf.cert.clone(), lab: leaf.lab.clone(), path: leaf.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let gamma = automorphism(&first.lab, &lab);
            let common = first.path.iter().zip(path).take_while(|(a, b)| a == b).count();
            self.generators.push(gamma);
            return Some(common);
        }
        let best = self.best.as_ref().unwrap();
        match cert.cmp(&best.cert) {
            std::cmp::Ordering::Equal => {
                let gamma = automorphism(&best.lab, &lab);
                self.generators.push(gamma);
            }
            std::cmp::Ordering::Greater => {
                self.best = Some(Leaf { cert, lab, path: path.to_vec() });
            }
            std::cmp::Ordering::Less => {}
        }
        None
    }

    /// Returns `Some(depth)` to abandon everything below the ancestor at that
    /// depth.
    fn search(&mut self, part: &Partition, path: &mut Vec<usize>) -> Option<usize> {
        let Some(target) = part.first_nonsingleton() else {
            return self.visit_leaf(part.lab.clone(), path);
        };
        let depth = path.len();
        let mut candidates: Vec<usize> = part.lab[target..part.cell_end[target]].to_vec();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for c in candidates {
            if !explored.is_empty() && !self.generators.is_empty() {
                let orbits = self.stabilizer_orbits(path);
                if explored.iter().any(|&e| orbits[e] == orbits[c]) {
                    continue;
                }
            }
            let child = part.individualize(self.g, c);
            path.push(c);
            let jump = self.search(&child, path);
            path.pop();
            explored.push(c);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }
}

fn best_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut root = Partition::unit(n);
    if n > 1 {
        root.refine(g, VecDeque::from([0]));
    }
    let mut search = Search { g, first: None, best: None, generators: Vec::new() };
    search.search(&root, &mut Vec::new());
    search.best.map(|leaf| leaf.lab).unwrap_or_default()
}

/// Permutation sending each vertex of `g` to its canonical position.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let lab = best_labeling(g);
    let mut perm = vec![0; g.n()];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    perm
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    let lab = best_labeling(g);
    let cert = leaf_certificate(g, &lab);
    let total = n * n.saturating_sub(1) / 2;
    let mut bytes = Vec::with_capacity(4 + total.div_ceil(8));
    bytes.extend_from_slice(&(n as u32).to_be_bytes());
    bytes.extend(cert.iter().flat_map(|w| w.to_be_bytes()).take(total.div_ceil(8)));
    CanonicalForm(bytes)
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.m() == h.m() && g.degrees_sorted() == h.degrees_sorted() && canonical_form(g) == canonical_form(h)
}

impl Graph {
    fn degrees_sorted(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_relabeled(perm: &[usize]) -> Graph {
        Graph::cycle(perm.len()).relabel(perm)
    }

    #[test]
    fn cycle_invariant_under_relabeling() {
        let c5 = Graph::cycle(5);
        let h = cycle_relabeled(&[3, 0, 4, 1, 2]);
        assert_eq!(canonical_form(&c5), canonical_form(&h));
    }

    #[test]
    fn separates_small_classes() {
        assert_ne!(canonical_form(&Graph::path(3)), canonical_form(&Graph::complete(3)));
        let prism = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        let k33 = Graph::complete_bipartite(3, 3);
        assert_ne!(canonical_form(&prism), canonical_form(&k33));
    }

    #[test]
    fn representative_round_trips() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let form = canonical_form(&g);
        let rep = form.to_graph();
        assert_eq!(canonical_form(&rep), form);
        assert_eq!(rep, canonical_graph(&g));
        assert_eq!(form.n(), 5);
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        for n in [0, 1, 2, 12, 20] {
            let k = Graph::complete(n);
            assert_eq!(canonical_form(&k).to_graph(), k);
            let e = Graph::new(n);
            assert_eq!(canonical_form(&e).to_graph(), e);
        }
        let k88 = Graph::complete_bipartite(8, 8);
        assert!(are_isomorphic(&k88, &k88.relabel(&(0..16).rev().collect::<Vec<_>>())));
    }
}
