mod common;

use dpforge::{
    are_isomorphic, build_regular_dp, circulant, direct_sum, direct_sum_chain, is_admissible, is_dp_bruteforce, join,
    verify_certificate, ChainBlock, ConstructionCase, ConstructionError, Graph,
};
use rand::seq::IteratorRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn every_admissible_pair_builds_and_verifies() {
    for r in 3..=12 {
        for n in (r + 1..=40).filter(|&n| is_admissible(n, r)) {
            let c = build_regular_dp(n, r).unwrap_or_else(|e| panic!("({n},{r}): {e}"));
            let g = c.graph();
            assert_eq!(g.n(), n);
            assert_eq!(g.regular_degree(), Some(r), "({n},{r})");
            assert!(g.is_connected());
            assert!(verify_certificate(g, &c.certificate).unwrap().valid, "({n},{r})");
            assert_eq!(c.certificate.len(), n);
            if n <= 11 {
                assert!(is_dp_bruteforce(g).unwrap().is_dp, "({n},{r})");
            }
        }
    }
}

#[test]
fn builder_case_selection() {
    let case = |n, r| build_regular_dp(n, r).unwrap().case;
    assert_eq!(case(7, 4), ConstructionCase::Join);
    assert_eq!(case(9, 4), ConstructionCase::ExternalVertex);
    assert_eq!(case(10, 4), ConstructionCase::DirectSumChain);
    assert_eq!(case(12, 3), ConstructionCase::Ladder);
    assert_eq!(case(6, 3), ConstructionCase::SmallCubic);
    assert!(matches!(build_regular_dp(7, 3), Err(ConstructionError::Inadmissible { n: 7, r: 3 })));
    assert!(matches!(build_regular_dp(4, 4), Err(ConstructionError::Inadmissible { .. })));
    assert!(matches!(build_regular_dp(5, 2), Err(ConstructionError::Inadmissible { .. })));
}

#[test]
fn drawn_figures_match() {
    assert!(are_isomorphic(build_regular_dp(7, 4).unwrap().graph(), &common::figure_g7()));
    assert!(are_isomorphic(build_regular_dp(9, 4).unwrap().graph(), &common::figure_g9()));
    assert!(are_isomorphic(build_regular_dp(12, 3).unwrap().graph(), &common::figure_g12()));
    let k5 = Graph::complete(5);
    let pair = direct_sum(&k5, (0, 1), &k5, (0, 1)).unwrap();
    assert!(are_isomorphic(&pair.graph, &common::figure_k5_sum()));
    let blocks = [
        ChainBlock::new(k5.clone(), None, Some((0, 1))),
        ChainBlock::new(k5.clone(), Some((0, 1)), Some((2, 3))),
        ChainBlock::new(k5.clone(), Some((0, 1)), None),
    ];
    assert!(are_isomorphic(&direct_sum_chain(&blocks).unwrap().graph, &common::figure_k5_triple()));
    // Fixtures are themselves regular and dp.
    for g in [common::figure_g7(), common::figure_g9(), common::figure_g12(), common::figure_k5_sum()] {
        assert!(g.regular_degree().is_some());
        assert!(is_dp_bruteforce(&g).unwrap().is_dp);
    }
}

#[test]
fn circulant_degrees_are_uniform() {
    for n in 1..=20 {
        for r in 0..n {
            match circulant(n, r) {
                Ok(g) => assert_eq!(g.regular_degree(), Some(r), "C({n},{r})"),
                Err(_) => assert!(r % 2 == 1 && n % 2 == 1, "C({n},{r}) should exist"),
            }
        }
    }
    assert!(are_isomorphic(&circulant(6, 3).unwrap(), &Graph::complete_bipartite(3, 3)));
    assert_eq!(circulant(7, 2).unwrap(), Graph::cycle(7));
}

#[test]
fn join_edge_count_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..250 {
        let (a, b) = (rng.gen_range(0..8), rng.gen_range(0..8));
        let g = common::random_graph(&mut rng, a, 0.5);
        let h = common::random_graph(&mut rng, b, 0.5);
        let j = join(&g, &h);
        assert_eq!(j.graph.n(), a + b);
        assert_eq!(j.graph.m(), g.m() + h.m() + a * b);
        for v in 0..a {
            assert_eq!(j.graph.degree(v), g.degree(v) + b);
        }
    }
}

#[test]
fn direct_sum_preserves_degrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut done = 0;
    while done < 250 {
        let (a, b) = (rng.gen_range(2..9), rng.gen_range(2..9));
        let g = common::random_graph(&mut rng, a, 0.5);
        let h = common::random_graph(&mut rng, b, 0.5);
        let (Some(eg), Some(eh)) = (g.edges().choose(&mut rng), h.edges().choose(&mut rng)) else { continue };
        let s = direct_sum(&g, eg, &h, eh).unwrap();
        let mut expected = g.degrees();
        expected.extend(h.degrees());
        assert_eq!(s.graph.degrees(), expected);
        assert_eq!(s.graph.m(), g.m() + h.m());
        assert!(!s.graph.has_edge(eg.0, eg.1));
        assert!(s.graph.has_edge(eg.0, g.n() + eh.0) && s.graph.has_edge(eg.1, g.n() + eh.1));
        done += 1;
    }
}

#[test]
fn external_vertex_degrees() {
    for r in (4..=12).step_by(2) {
        let c = build_regular_dp(2 * r + 1, r).unwrap();
        let x = c.tagged.vertex("x").unwrap();
        assert_eq!(c.graph().degree(x), r);
        assert!(c.graph().degrees().iter().all(|&d| d == r));
        assert_eq!(c.tagged.part("left").unwrap().len(), r);
    }
}

#[test]
fn tagged_parts_partition_vertices() {
    for (n, r) in [(7, 4), (9, 4), (16, 4), (12, 3), (33, 8), (25, 6)] {
        let t = build_regular_dp(n, r).unwrap().tagged;
        let mut seen = vec![0; n];
        for p in &t.parts {
            for &v in &p.vertices {
                seen[v] += 1;
            }
        }
        assert!(seen.iter().all(|&c| c == 1), "({n},{r})");
        assert_eq!(t.labels.len(), n);
        for (v, label) in t.labels.iter().enumerate() {
            assert_eq!(t.vertex(label), Some(v));
        }
    }
}
