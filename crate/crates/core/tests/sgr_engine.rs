mod common;

use std::collections::BTreeSet;
use std::ops::Range;
use std::sync::{Arc, Mutex};

use mintri::{enum_max_independent, explicit_graph_sgr, Graph, MaxIndependentSets, Result, SuccinctGraph, VertexSet};
use mintri_oracle::{brute_max_independent_sets, corpus};
use proptest::prelude::*;

type CallLog = Arc<Mutex<Vec<(Vec<usize>, Vec<usize>)>>>;

/// Wraps the explicit instance and records every extender call.
struct Logged {
    inner: mintri::sgr::ExplicitGraph,
    calls: CallLog,
}

impl SuccinctGraph for Logged {
    type Node = usize;
    type Key = usize;
    type Nodes = Range<usize>;

    fn node_stream(&self) -> Range<usize> {
        self.inner.node_stream()
    }

    fn adjacent(&self, a: &usize, b: &usize) -> bool {
        self.inner.adjacent(a, b)
    }

    fn extend_to_max_ind(&self, set: &[usize]) -> Result<Vec<usize>> {
        let out = self.inner.extend_to_max_ind(set)?;
        self.calls.lock().unwrap().push((set.to_vec(), out.clone()));
        Ok(out)
    }

    fn key(&self, node: &usize) -> usize {
        *node
    }
}

fn check_instance(g: &Graph) {
    let calls = Arc::new(Mutex::new(Vec::new()));
    let sgr = Logged { inner: explicit_graph_sgr(g), calls: calls.clone() };
    let mut engine: MaxIndependentSets<Logged> = enum_max_independent(sgr);
    let mut answers = Vec::new();
    let mut cache_len = 0;
    assert!(engine.store_is_consistent());
    while let Some(answer) = engine.next() {
        let answer = answer.unwrap();
        assert!(engine.store_is_consistent());
        assert!(engine.cached_nodes().len() >= cache_len, "node cache shrank");
        cache_len = engine.cached_nodes().len();
        for (i, &a) in answer.iter().enumerate() {
            assert!(answer[i + 1..].iter().all(|&b| !g.has_edge(a, b)), "not independent");
        }
        assert!((0..g.n()).all(|v| answer.contains(&v) || g.neighbors(v).any(|u| answer.contains(&u))));
        answers.push(answer.into_iter().collect::<VertexSet>());
    }
    let distinct: BTreeSet<VertexSet> = answers.iter().cloned().collect();
    assert_eq!(answers.len(), distinct.len(), "duplicate answer on {g:?}");
    assert_eq!(distinct, brute_max_independent_sets(g).unwrap(), "{g:?}");
    assert_eq!(engine.cached_nodes(), (0..g.n()).collect::<Vec<_>>().as_slice());
    for (seed, out) in calls.lock().unwrap().iter() {
        assert!(seed.iter().all(|v| out.contains(v)), "extension dropped a seed node");
    }
    assert_eq!(engine.stats().answers_emitted, answers.len());
}

#[test]
fn engine_matches_oracle_on_all_small_graphs() {
    for n in 0..=5 {
        for g in corpus::all_graphs(n) {
            check_instance(&g);
        }
    }
}

#[test]
fn engine_matches_oracle_on_random_graphs() {
    for g in corpus::random_corpus(200, 6..=9, 3) {
        check_instance(&g);
    }
}

proptest! {
    #[test]
    fn engine_matches_oracle(n in 1usize..=7, mask in any::<u32>()) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> (i % 32) & 1 == 1).map(|(_, &p)| p);
        check_instance(&Graph::from_edges(n, edges).unwrap());
    }
}
