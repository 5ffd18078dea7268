//! Test graph corpora: exhaustive small graphs and seeded random graphs.

use mintri::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p))
            .expect("pairs are distinct")
    })
}

/// Every connected labeled graph on `n >= 1` vertices.
pub fn all_connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_graphs(n).filter(Graph::is_connected)
}

/// Connected `G(n, p)` sample, by rejection.
pub fn random_connected(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    loop {
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::from_edges(n, edges).expect("pairs are distinct");
        if g.is_connected() {
            return g;
        }
    }
}

pub const EDGE_PROBABILITIES: [f64; 3] = [0.3, 0.5, 0.7];

/// `count` connected random graphs cycling through `n` in `sizes` and the
/// three edge probabilities, reproducible from `seed`.
pub fn random_corpus(count: usize, sizes: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<Graph> {
    let mut rng = StdRng::seed_from_u64(seed);
    let sizes: Vec<usize> = sizes.collect();
    (0..count)
        .map(|i| {
            let n = sizes[i % sizes.len()];
            let p = EDGE_PROBABILITIES[(i / sizes.len()) % EDGE_PROBABILITIES.len()];
            random_connected(n, p, &mut rng)
        })
        .collect()
}

/// All connected graphs on 1..=5 vertices.
pub fn exhaustive_small() -> Vec<Graph> {
    (1..=5).flat_map(all_connected_graphs).collect()
}
