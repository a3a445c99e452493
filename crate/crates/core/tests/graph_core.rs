mod common;

use std::collections::{HashMap, HashSet};

use dpforge::{canonical_form, decode_graph6, distance_matrix, encode_graph6, Distance, Graph};
use itertools::Itertools;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).tuple_combinations::<(usize, usize)>();
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Floyd–Warshall with `None` for unreachable pairs.
fn floyd(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = Some(0);
        for v in g.neighbors(u) {
            row[v] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Smallest upper-triangle bit key over all relabelings.
fn brute_canonical_key(g: &Graph) -> Vec<bool> {
    let n = g.n();
    (0..n)
        .permutations(n)
        .map(|p| {
            let h = g.relabel(&p);
            (0..n).tuple_combinations().map(|(a, b)| h.has_edge(a, b)).collect::<Vec<_>>()
        })
        .min()
        .unwrap_or_default()
}

proptest! {
    #[allow(clippy::needless_range_loop)]
    #[test]
    fn distance_matrix_matches_floyd(g in arb_graph(10)) {
        let dm = distance_matrix(&g);
        let fw = floyd(&g);
        for u in 0..g.n() {
            prop_assert_eq!(dm.get(u, u), Distance::Finite(0));
            for v in 0..g.n() {
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                prop_assert_eq!(dm.get(u, v).finite(), fw[u][v]);
                prop_assert_eq!(dm.get(u, v) == Distance::Finite(1), g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn induced_subgraphs_never_shorten(g in arb_graph(9), mask in any::<u16>()) {
        let s: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let (h, map) = g.induced_subgraph(&s).unwrap();
        let dg = distance_matrix(&g);
        let dh = distance_matrix(&h);
        for &u in &s {
            for &v in &s {
                prop_assert!(dh.get(map[u].unwrap(), map[v].unwrap()) >= dg.get(u, v));
            }
        }
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(8)) {
        let text = encode_graph6(&g).unwrap();
        prop_assert_eq!(decode_graph6(text.as_bytes()).unwrap(), g);
    }
}

#[test]
fn canonical_form_ignores_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.1..0.9);
        let g = common::random_graph(&mut rng, n, p);
        let form = canonical_form(&g);
        for _ in 0..100 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.relabel(&perm)), form);
        }
    }
}

#[test]
fn canonical_form_separates_small_graphs() {
    // Unlabeled graph counts on 0..=5 vertices.
    for (n, expected) in [1, 1, 2, 4, 11, 34].into_iter().enumerate() {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let mut by_form: HashMap<_, Vec<bool>> = HashMap::new();
        let mut keys = HashSet::new();
        for mask in 0u32..1 << pairs.len() {
            let g = Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
                .unwrap();
            let key = brute_canonical_key(&g);
            keys.insert(key.clone());
            let prev = by_form.entry(canonical_form(&g)).or_insert_with(|| key.clone());
            assert_eq!(*prev, key, "one canonical form covers two classes at n = {n}");
        }
        assert_eq!(by_form.len(), keys.len());
        assert_eq!(by_form.len(), expected);
    }
}

#[test]
fn canonical_graph_is_a_fixed_point() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.gen_range(0..=14);
        let g = common::random_graph(&mut rng, n, 0.4);
        let form = canonical_form(&g);
        let rep = form.to_graph();
        assert_eq!(canonical_form(&rep), form);
        assert_eq!(rep.degrees().into_iter().sorted().collect_vec(), g.degrees().into_iter().sorted().collect_vec());
    }
}

#[test]
fn regular_graphs_with_many_automorphisms() {
    let petersen = Graph::from_edges(
        10,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
    )
    .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut perm: Vec<usize> = (0..10).collect();
    perm.shuffle(&mut rng);
    assert_eq!(canonical_form(&petersen), canonical_form(&petersen.relabel(&perm)));
    // Both cubic on ten vertices.
    let prism = Graph::from_edges(10, (0..5).flat_map(|i| [(i, (i + 1) % 5), (5 + i, 5 + (i + 1) % 5), (i, i + 5)])).unwrap();
    assert_ne!(canonical_form(&petersen), canonical_form(&prism));
    let hypercube = Graph::from_edges(16, (0..16).flat_map(|v| (0..4).map(move |b| (v, v ^ (1 << b)))).filter(|&(a, b)| a < b)).unwrap();
    let mut perm: Vec<usize> = (0..16).collect();
    perm.shuffle(&mut rng);
    assert_eq!(canonical_form(&hypercube), canonical_form(&hypercube.relabel(&perm)));
    assert_ne!(canonical_form(&hypercube), canonical_form(&Graph::complete_bipartite(4, 4).disjoint_union(&Graph::complete_bipartite(4, 4))));
}
