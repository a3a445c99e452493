//! Hop distances.

use std::collections::VecDeque;
use std::fmt;

use crate::graph::Graph;

/// A hop distance, or the marker for vertices in different components.
///
/// `Finite` values order before `Unreachable`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("inf"),
        }
    }
}

/// All-pairs hop distances of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Distance] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite distance, `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        self.d.iter().try_fold(0, |acc, d| d.finite().map(|x| acc.max(x)))
    }
}

/// Breadth-first distances from `source`.
pub fn bfs(g: &Graph, source: usize) -> Vec<Distance> {
    let mut dist = vec![Distance::Unreachable; g.n()];
    let mut queue = VecDeque::new();
    dist[source] = Distance::Finite(0);
    queue.push_back((source, 0u32));
    while let Some((u, du)) = queue.pop_front() {
        for v in g.neighbors(u) {
            if dist[v] == Distance::Unreachable {
                dist[v] = Distance::Finite(du + 1);
                queue.push_back((v, du + 1));
            }
        }
    }
    dist
}

pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = Vec::with_capacity(n * n);
    for u in 0..n {
        d.extend(bfs(g, u));
    }
    DistanceMatrix { n, d }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_distances() {
        let dm = distance_matrix(&Graph::complete(4));
        for u in 0..4 {
            for v in 0..4 {
                let expected = if u == v { 0 } else { 1 };
                assert_eq!(dm.get(u, v), Distance::Finite(expected));
            }
        }
        assert_eq!(dm.diameter(), Some(1));
    }

    #[test]
    fn cycle_rows_are_permutations() {
        let dm = distance_matrix(&Graph::cycle(5));
        for u in 0..5 {
            let mut row: Vec<u32> = dm.row(u).iter().map(|d| d.finite().unwrap()).collect();
            row.sort_unstable();
            assert_eq!(row, vec![0, 1, 1, 2, 2]);
        }
    }

    #[test]
    fn path_endpoints() {
        let dm = distance_matrix(&Graph::path(4));
        assert_eq!(dm.get(0, 3), Distance::Finite(3));
        assert_eq!(dm.diameter(), Some(3));
    }

    #[test]
    fn unreachable_is_explicit() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let dm = distance_matrix(&g);
        assert_eq!(dm.get(0, 2), Distance::Unreachable);
        assert_eq!(dm.get(2, 3), Distance::Finite(1));
        assert_eq!(dm.diameter(), None);
        assert!(Distance::Finite(1000) < Distance::Unreachable);
    }
}
