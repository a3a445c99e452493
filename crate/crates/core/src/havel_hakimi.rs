//! Havel–Hakimi realization of degree sequences.
//!
//! The classic loop re-sorts the residual sequence after every step. The
//! modified loop never re-sorts: vertices keep their original positions, and
//! an exhausted vertex stays where it is until it reaches the front, so the
//! loop fails if one falls inside the current vertex's reach. When the modified loop succeeds with a connected
//! graph, the prefixes `{v1, ..., vi}` induce isometric subgraphs.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::isometry::DpCertificate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("sequence is not weakly decreasing at position {0}")]
    NotDecreasing(usize),
    #[error("cannot parse {0:?} as a degree")]
    Parse(String),
    #[error("Havel-Hakimi terminated unsuccessfully")]
    NotSuccessful,
    #[error("realized graph is disconnected")]
    Disconnected,
}

/// A weakly decreasing sequence of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(d: Vec<usize>) -> Result<Self, SequenceError> {
        if let Some(i) = d.windows(2).position(|w| w[0] < w[1]) {
            return Err(SequenceError::NotDecreasing(i + 1));
        }
        Ok(DegreeSequence(d))
    }

    pub fn from_unsorted(mut d: Vec<usize>) -> Self {
        d.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(d)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, d: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in d.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// Parses `"3,2,2,2,1"` (whitespace and surrounding parentheses allowed).
impl FromStr for DegreeSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(DegreeSequence(Vec::new()));
        }
        let d = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| SequenceError::Parse(t.trim().to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        DegreeSequence::new(d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HHStatus {
    Success,
    Failure,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HHOutcome {
    pub status: HHStatus,
    /// The realization on the original `n` vertices, on success.
    pub graph: Option<Graph>,
    /// `labeling[i]` is the vertex realizing the i-th sequence entry.
    pub labeling: Vec<usize>,
    /// Residual sequence when the loop stopped (empty on success).
    pub residual: Vec<usize>,
    /// Completed loop iterations.
    pub iterations: usize,
}

impl HHOutcome {
    pub fn is_success(&self) -> bool {
        self.status == HHStatus::Success
    }

    pub fn residual_display(&self) -> String {
        struct Tuple<'a>(&'a [usize]);
        impl fmt::Display for Tuple<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_tuple(f, self.0)
            }
        }
        Tuple(&self.residual).to_string()
    }
}

/// Erdős–Gallai: even sum and, for every k,
/// `sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)`.
pub fn erdos_gallai_graphical(d: &DegreeSequence) -> bool {
    let d = d.as_slice();
    if d.iter().sum::<usize>() % 2 == 1 {
        return false;
    }
    let mut lhs = 0;
    for k in 1..=d.len() {
        lhs += d[k - 1];
        let rhs = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
        if lhs > rhs {
            return false;
        }
    }
    true
}

fn run(d: &DegreeSequence, resort: bool) -> HHOutcome {
    let n = d.len();
    let mut graph = Graph::new(n);
    // (vertex, remaining degree); initial zeros never enter.
    let mut residual: Vec<(usize, usize)> = d.as_slice().iter().copied().enumerate().filter(|&(_, x)| x > 0).collect();
    let mut iterations = 0;
    let failure = |residual: &[(usize, usize)], iterations| HHOutcome {
        status: HHStatus::Failure,
        graph: None,
        labeling: (0..n).collect(),
        residual: residual.iter().map(|&(_, x)| x).collect(),
        iterations,
    };
    loop {
        if resort {
            residual.retain(|&(_, x)| x > 0);
            residual.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        } else {
            // Without re-sorting, zeros stay in place and only a leading one is dropped.
            let lead = residual.iter().take_while(|&&(_, x)| x == 0).count();
            residual.drain(..lead);
        }
        if residual.is_empty() {
            break;
        }
        let (v, dv) = residual[0];
        if dv > residual.len() - 1 || residual[1..=dv].iter().any(|&(_, x)| x == 0) {
            return failure(&residual, iterations);
        }
        for entry in &mut residual[1..=dv] {
            graph.add_edge(v, entry.0).expect("each vertex is processed once");
            entry.1 -= 1;
        }
        residual.remove(0);
        iterations += 1;
    }
    HHOutcome {
        status: HHStatus::Success,
        graph: Some(graph),
        labeling: (0..n).collect(),
        residual: Vec::new(),
        iterations,
    }
}

/// Havel–Hakimi with re-sorting; succeeds exactly on graphical sequences.
/// Ties in the re-sort keep the lower original position first.
pub fn classic_hh(d: &DegreeSequence) -> HHOutcome {
    run(d, true)
}

/// Havel–Hakimi without re-sorting.
pub fn modified_hh(d: &DegreeSequence) -> HHOutcome {
    run(d, false)
}

/// Prefix-chain certificate `{v1}, {v1, v2}, ..., {v1, ..., vn}`.
pub fn hh_dp_certificate(outcome: &HHOutcome) -> Result<DpCertificate, SequenceError> {
    let graph = outcome.graph.as_ref().filter(|_| outcome.is_success()).ok_or(SequenceError::NotSuccessful)?;
    if !graph.is_connected() {
        return Err(SequenceError::Disconnected);
    }
    let mut cert = DpCertificate::new();
    for i in 1..=outcome.labeling.len() {
        cert.insert(outcome.labeling[..i].to_vec());
    }
    Ok(cert)
}

/// Weakly decreasing sequences with `first` as the largest allowed value,
/// in lexicographically decreasing order.
struct DecreasingSequences {
    current: Option<Vec<usize>>,
    min: usize,
}

impl Iterator for DecreasingSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        if let Some(pos) = out.iter().rposition(|&x| x > self.min) {
            let mut next = out.clone();
            next[pos] -= 1;
            let fill = next[pos];
            next[pos + 1..].iter_mut().for_each(|x| *x = fill);
            self.current = Some(next);
        }
        Some(out)
    }
}

/// All graphical sequences of length `n` with entries in `1..=n-1`, in
/// lexicographically decreasing order.
pub fn enumerate_graphical_sequences(n: usize) -> impl Iterator<Item = DegreeSequence> {
    let current = (n >= 2).then(|| vec![n - 1; n]);
    DecreasingSequences { current, min: 1 }.map(DegreeSequence).filter(erdos_gallai_graphical)
}
