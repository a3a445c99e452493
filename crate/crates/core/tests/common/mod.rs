#![allow(dead_code)]

use dpforge::{DegreeSequence, Graph};
use rand::Rng;

/// Builds a graph from drawn coordinates and `--` chains. Points are written
/// `x,y` without parentheses; whitespace separates chains. A segment passing
/// through another drawn point is read as two edges, as it looks in the drawing.
pub fn drawing(points: &[(f64, f64)], chains: &str) -> Graph {
    let index = |p: &str| {
        let (x, y) = p.split_once(',').expect("point is x,y");
        let (x, y): (f64, f64) = (x.trim().parse().unwrap(), y.trim().parse().unwrap());
        points
            .iter()
            .position(|&(a, b)| (a - x).abs() < 1e-9 && (b - y).abs() < 1e-9)
            .unwrap_or_else(|| panic!("no point at {x},{y}"))
    };
    let mut g = Graph::new(points.len());
    for chain in chains.split_whitespace() {
        let stops: Vec<usize> = chain.split("--").map(index).collect();
        for w in stops.windows(2) {
            let (a, b) = (points[w[0]], points[w[1]]);
            let mut on: Vec<(f64, usize)> = points
                .iter()
                .enumerate()
                .filter_map(|(i, &(x, y))| {
                    let cross = (b.0 - a.0) * (y - a.1) - (b.1 - a.1) * (x - a.0);
                    let t = ((x - a.0) * (b.0 - a.0) + (y - a.1) * (b.1 - a.1))
                        / ((b.0 - a.0).powi(2) + (b.1 - a.1).powi(2));
                    (cross.abs() < 1e-9 && (-1e-9..=1.0 + 1e-9).contains(&t)).then_some((t, i))
                })
                .collect();
            on.sort_by(|p, q| p.0.total_cmp(&q.0));
            for pair in on.windows(2) {
                let (u, v) = (pair[0].1, pair[1].1);
                if !g.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
    }
    g
}

fn expand(pairs: impl IntoIterator<Item = ((i32, i32), (i32, i32))>) -> String {
    pairs.into_iter().map(|((a, b), (c, d))| format!("{a},{b}--{c},{d} ")).collect()
}

/// Seven vertices, bottom row 0..3, top row 1..3.
pub fn figure_g7() -> Graph {
    let points = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (2.0, 0.0), (2.0, 1.0), (3.0, 0.0), (3.0, 1.0)];
    let mut chains = expand((0..4).flat_map(|a| (1..4).map(move |b| ((a, 0), (b, 1)))));
    chains.push_str("0,0--1,0 2,0--3,0");
    drawing(&points, &chains)
}

/// External vertex at (-1, 0.5) and a 4 by 2 grid of others.
pub fn figure_g9() -> Graph {
    let mut points = vec![(-1.0, 0.5)];
    for x in 0..4 {
        points.push((x as f64, 0.0));
        points.push((x as f64, 1.0));
    }
    let mut chains = expand((0..4).flat_map(|a| (2..4).map(move |b| ((a, 0), (b, 1)))));
    chains += &expand((2..4).flat_map(|a| (0..4).map(move |b| ((a, 0), (b, 1)))));
    chains.push_str("-1,0.5--0,0--1,1---1,0.5--0,1--1,0---1,0.5");
    drawing(&points, &chains)
}

/// Top row u1..u6 at y = 1, bottom row v1..v6 at y = 0.
pub fn figure_g12() -> Graph {
    let mut points = Vec::new();
    for x in 1..=6 {
        points.push((x as f64, 0.0));
        points.push((x as f64, 1.0));
    }
    let mut chains = expand((1..6).flat_map(|x| (0..2).map(move |y| ((x, y), (x + 1, y)))));
    chains += &expand([1, 3, 4, 6].map(|x| ((x, 0), (x, 1))));
    chains.push_str("1,0--2,1 1,1--2,0 5,0--6,1 6,0--5,1");
    drawing(&points, &chains)
}

const K5_PAIR_POINTS: [(f64, f64); 10] = [
    (0.0, 0.0),
    (0.0, 1.0),
    (1.0, 2.0),
    (2.0, 0.0),
    (2.0, 1.0),
    (3.0, 0.0),
    (3.0, 1.0),
    (4.0, 2.0),
    (5.0, 0.0),
    (5.0, 1.0),
];

pub fn figure_k5_sum() -> Graph {
    drawing(
        &K5_PAIR_POINTS,
        "0,0--2,0--0,1--2,1--1,2--0,1--0,0 2,0--1,2--0,0--2,1--3,1--5,0--4,2--3,0--2,0 \
         5,0--3,0--5,1--3,1--4,2--5,1--5,0",
    )
}

pub fn figure_k5_triple() -> Graph {
    let mut points = K5_PAIR_POINTS.to_vec();
    points.extend([(6.0, 0.0), (6.0, 1.0), (7.0, 2.0), (8.0, 0.0), (8.0, 1.0)]);
    drawing(
        &points,
        "0,0--2,0--0,1--2,1--1,2--0,1--0,0 2,0--1,2--0,0--2,1--3,1--5,0--4,2--3,0--2,0 \
         5,0--3,0--5,1--3,1--4,2--5,1 3,1--6,1--8,0--7,2--6,0--5,0 8,0--6,0--8,1--6,1--7,2--8,1--8,0",
    )
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Rejection-samples until the graph is connected.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize) -> Graph {
    loop {
        let p = rng.gen_range(0.25..0.9);
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_sequence(rng: &mut impl Rng, n: usize) -> DegreeSequence {
    let d: Vec<usize> = (0..n).map(|_| rng.gen_range(1..n)).collect();
    DegreeSequence::from_unsorted(d)
}

/// All weakly decreasing sequences of length `n` with entries in `1..=max`.
pub fn all_positive_sequences(n: usize, max: usize) -> Vec<DegreeSequence> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<DegreeSequence>) {
        if cur.len() == n {
            out.push(DegreeSequence::new(cur.clone()).unwrap());
            return;
        }
        for x in (1..=max).rev() {
            cur.push(x);
            rec(n, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max, &mut Vec::new(), &mut out);
    out
}
