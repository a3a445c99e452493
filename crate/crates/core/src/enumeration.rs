//! Exhaustive generation of regular graphs and the two surveys.
//!
//! Regular graphs are generated by degree-constrained backtracking over
//! vertices in order, choosing each vertex's remaining neighbours among the
//! later vertices. Later vertices with identical neighbourhoods are
//! interchangeable at that point, so only the lowest-numbered ones of each
//! such class are ever chosen. Leaves are then deduplicated by exact
//! canonical form. Degrees above `(n - 1) / 2` are obtained as complements.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;
use crate::havel_hakimi::{enumerate_graphical_sequences, modified_hh};
use crate::isometry::is_distance_preserving;

/// Largest order the bitmask generator handles.
pub const MAX_ENUMERATION_N: usize = 16;

const BATCH: usize = 1 << 15;

struct RegularGenerator<'a> {
    n: usize,
    adj: Vec<u32>,
    deficit: Vec<u8>,
    emit: &'a mut dyn FnMut(&[u32]),
}

impl RegularGenerator<'_> {
    fn feasible_after(&self, i: usize) -> bool {
        let rest = &self.deficit[i + 1..];
        let positive = rest.iter().filter(|&&d| d > 0).count();
        rest.iter().all(|&d| d == 0 || (d as usize) < positive) && rest.iter().map(|&d| d as usize).sum::<usize>() % 2 == 0
    }

    fn vertex(&mut self, i: usize) {
        if i == self.n {
            (self.emit)(&self.adj);
            return;
        }
        let need = self.deficit[i] as usize;
        if need == 0 {
            self.vertex(i + 1);
            return;
        }
        // Classes of interchangeable candidates, in order of lowest member.
        let mut classes: Vec<(u32, Vec<usize>)> = Vec::new();
        for j in i + 1..self.n {
            if self.deficit[j] == 0 {
                continue;
            }
            match classes.iter_mut().find(|(nb, _)| *nb == self.adj[j]) {
                Some((_, members)) => members.push(j),
                None => classes.push((self.adj[j], vec![j])),
            }
        }
        if classes.iter().map(|(_, m)| m.len()).sum::<usize>() < need {
            return;
        }
        let sizes: Vec<usize> = classes.iter().map(|(_, m)| m.len()).collect();
        let members: Vec<Vec<usize>> = classes.into_iter().map(|(_, m)| m).collect();
        let mut counts = vec![0usize; sizes.len()];
        self.distribute(i, need, 0, &sizes, &members, &mut counts);
    }

    /// Splits `left` picks over the classes from `class` on; each class
    /// contributes a prefix of its members.
    fn distribute(&mut self, i: usize, left: usize, class: usize, sizes: &[usize], members: &[Vec<usize>], counts: &mut [usize]) {
        if left == 0 {
            let chosen: Vec<usize> = members.iter().zip(counts.iter()).flat_map(|(m, &c)| m[..c].iter().copied()).collect();
            for &j in &chosen {
                self.adj[i] |= 1 << j;
                self.adj[j] |= 1 << i;
                self.deficit[j] -= 1;
            }
            let saved = self.deficit[i];
            self.deficit[i] = 0;
            if self.feasible_after(i) {
                self.vertex(i + 1);
            }
            self.deficit[i] = saved;
            for &j in &chosen {
                self.adj[i] &= !(1 << j);
                self.adj[j] &= !(1 << i);
                self.deficit[j] += 1;
            }
            return;
        }
        if class == sizes.len() {
            return;
        }
        let capacity_after: usize = sizes[class + 1..].iter().sum();
        let lo = left.saturating_sub(capacity_after);
        for c in (lo..=sizes[class].min(left)).rev() {
            counts[class] = c;
            self.distribute(i, left - c, class + 1, sizes, members, counts);
        }
        counts[class] = 0;
    }
}

fn to_graph(n: usize, adj: &[u32]) -> Graph {
    let mut g = Graph::new(n);
    for (u, &row) in adj.iter().enumerate() {
        for v in u + 1..n {
            if row >> v & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Canonical forms of all `r`-regular graphs on `n` vertices (connected or
/// not) produced by the backtracking generator.
fn generate_regular_forms(n: usize, r: usize, keep: impl Fn(&Graph) -> bool + Sync) -> HashSet<CanonicalForm> {
    let mut forms = HashSet::new();
    if r >= n.max(1) || (n * r) % 2 == 1 {
        return forms;
    }
    let mut batch: Vec<Graph> = Vec::with_capacity(BATCH);
    let flush = |batch: &mut Vec<Graph>, forms: &mut HashSet<CanonicalForm>| {
        let found: Vec<CanonicalForm> = batch.par_iter().filter(|g| keep(g)).map(canonical_form).collect();
        forms.extend(found);
        batch.clear();
    };
    {
        let mut emit = |adj: &[u32]| {
            batch.push(to_graph(n, adj));
            if batch.len() == BATCH {
                flush(&mut batch, &mut forms);
            }
        };
        let mut gen = RegularGenerator { n, adj: vec![0; n], deficit: vec![r as u8; n], emit: &mut emit };
        gen.vertex(0);
    }
    flush(&mut batch, &mut forms);
    forms
}

/// One representative per isomorphism class of `r`-regular graphs on `n`
/// vertices, connected or not, sorted by canonical form. Each representative
/// is the canonical relabeling.
pub fn enumerate_regular(n: usize, r: usize) -> Vec<Graph> {
    assert!(n <= MAX_ENUMERATION_N, "regular enumeration supports n <= {MAX_ENUMERATION_N}");
    let forms: HashSet<CanonicalForm> = if n > 0 && 2 * r > n - 1 && r < n {
        generate_regular_forms(n, n - 1 - r, |_| true)
            .into_par_iter()
            .map(|f| canonical_form(&f.to_graph().complement()))
            .collect()
    } else {
        generate_regular_forms(n, r, |_| true)
    };
    sorted_representatives(forms)
}

fn sorted_representatives(forms: HashSet<CanonicalForm>) -> Vec<Graph> {
    let mut forms: Vec<CanonicalForm> = forms.into_iter().collect();
    forms.sort_unstable();
    forms.iter().map(CanonicalForm::to_graph).collect()
}

/// Connected `r`-regular graphs on `n` vertices, one per class, sorted by
/// canonical form.
pub fn enumerate_connected_regular_of_degree(n: usize, r: usize) -> Vec<Graph> {
    assert!(n <= MAX_ENUMERATION_N, "regular enumeration supports n <= {MAX_ENUMERATION_N}");
    if n == 0 {
        return Vec::new();
    }
    if 2 * r > n - 1 && r < n {
        let forms: HashSet<CanonicalForm> = generate_regular_forms(n, n - 1 - r, |_| true)
            .into_par_iter()
            .map(|f| f.to_graph().complement())
            .filter(Graph::is_connected)
            .map(|g| canonical_form(&g))
            .collect();
        sorted_representatives(forms)
    } else {
        sorted_representatives(generate_regular_forms(n, r, Graph::is_connected))
    }
}

/// Every connected regular graph on `n` vertices up to isomorphism, any
/// degree, ordered by degree and then by canonical form.
pub fn enumerate_connected_regular(n: usize) -> Vec<Graph> {
    (0..n).flat_map(|r| enumerate_connected_regular_of_degree(n, r)).collect()
}

/// One line of a survey table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub n: usize,
    pub total: usize,
    pub successes: usize,
}

impl SurveyRow {
    pub fn percentage(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.successes as f64 * 100.0 / self.total as f64
        }
    }

    /// Percentage with three decimals, e.g. `"82.353"`.
    pub fn percentage_text(&self) -> String {
        format!("{:.3}", self.percentage())
    }
}

/// Counts the connected regular graphs on `n` vertices and how many are dp.
pub fn survey_regular_dp(n: usize) -> SurveyRow {
    let graphs = enumerate_connected_regular(n);
    survey_regular_dp_of(n, &graphs)
}

/// Same as [`survey_regular_dp`] over an already enumerated list.
pub fn survey_regular_dp_of(n: usize, graphs: &[Graph]) -> SurveyRow {
    let successes = graphs
        .par_iter()
        .filter(|g| is_distance_preserving(g).expect("enumerated graphs are connected and small"))
        .count();
    SurveyRow { n, total: graphs.len(), successes }
}

/// Counts graphical sequences of length `n` (entries `1..=n-1`) and how many
/// the modified Havel–Hakimi loop realizes, connected or not.
pub fn survey_modified_hh(n: usize) -> SurveyRow {
    let sequences: Vec<_> = enumerate_graphical_sequences(n).collect();
    let successes = sequences.par_iter().filter(|d| modified_hh(d).is_success()).count();
    SurveyRow { n, total: sequences.len(), successes }
}
