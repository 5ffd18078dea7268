mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{corpus, EXTENDERS};
use mintri::{
    clique_graph, enum_max_spanning_trees, enum_min_triangulations, enum_proper_tds, is_chordal, is_proper,
    is_tree_decomposition, max_cliques_chordal, treedecomp::MaxSpanningTrees, Extender, Graph, TreeDecomposition,
    VertexSet,
};
use mintri_oracle::{brute_cliques, brute_max_spanning_trees};
use proptest::prelude::*;

fn tds(g: &Graph, e: Extender) -> Vec<TreeDecomposition> {
    enum_proper_tds(g, e).unwrap().map(Result::unwrap).collect()
}

#[test]
fn small_counts() {
    for e in EXTENDERS {
        assert_eq!(tds(&Graph::path(4), e).len(), 1);
        assert_eq!(tds(&Graph::cycle(4), e).len(), 2);
        assert_eq!(tds(&Graph::star(3), e).len(), 3);
    }
}

#[test]
fn emitted_decompositions_are_proper_antichains_covering_cliques() {
    for g in corpus().into_iter().filter(|g| g.n() <= 8) {
        let cliques = brute_cliques(&g).unwrap();
        let emitted = tds(&g, Extender::BlackBox);
        let distinct: BTreeSet<_> = emitted.iter().map(|d| (d.bag_set(), d.edges.clone())).collect();
        assert_eq!(distinct.len(), emitted.len(), "duplicate decomposition on {g:?}");
        for d in emitted.iter().chain([&TreeDecomposition::trivial(&g)]) {
            assert!(is_tree_decomposition(&g, d).unwrap());
            for c in &cliques {
                assert!(d.bags.iter().any(|b| c.is_subset(b)), "{c:?} not in a bag on {g:?}");
            }
        }
        for d in &emitted {
            assert!(is_proper(&g, d).unwrap(), "{g:?}");
            for (i, a) in d.bags.iter().enumerate() {
                for b in &d.bags[i + 1..] {
                    assert!(!a.is_subset(b) && !b.is_subset(a), "bags not an antichain on {g:?}");
                }
            }
        }
    }
}

#[test]
fn bag_classes_biject_with_minimal_triangulations() {
    for g in corpus().into_iter().filter(|g| g.n() <= 8) {
        let mut groups: BTreeMap<BTreeSet<VertexSet>, usize> = BTreeMap::new();
        for d in tds(&g, Extender::BlackBox) {
            *groups.entry(d.bag_set()).or_default() += 1;
        }
        let cliques: BTreeSet<BTreeSet<VertexSet>> = enum_min_triangulations(&g, Extender::BlackBox)
            .unwrap()
            .map(|t| max_cliques_chordal(t.unwrap().chordal_graph()).unwrap().into_iter().collect())
            .collect();
        assert_eq!(groups.len(), cliques.len(), "{g:?}");
        assert_eq!(groups.keys().cloned().collect::<BTreeSet<_>>(), cliques);
        if is_chordal(&g) {
            let own: BTreeSet<VertexSet> = max_cliques_chordal(&g).unwrap().into_iter().collect();
            assert_eq!(groups.into_keys().collect::<Vec<_>>(), vec![own]);
        }
    }
}

#[test]
fn clique_graph_trees_match_oracle() {
    let mut checked = 0;
    for g in corpus() {
        for t in enum_min_triangulations(&g, Extender::BlackBox).unwrap() {
            let wg = clique_graph(t.unwrap().chordal_graph()).unwrap();
            if wg.nodes.len() > 8 {
                continue;
            }
            let got: Vec<_> = enum_max_spanning_trees(&wg).unwrap().collect();
            let set: BTreeSet<_> = got.iter().cloned().collect();
            assert_eq!(got.len(), set.len());
            assert_eq!(set, brute_max_spanning_trees(wg.nodes.len(), &wg.edges).unwrap());
            checked += 1;
        }
    }
    assert!(checked > 1000);
}

#[test]
fn improper_decompositions_are_rejected() {
    let c4 = Graph::cycle(4);
    let trivial = TreeDecomposition::trivial(&c4);
    assert!(is_tree_decomposition(&c4, &trivial).unwrap());
    assert!(!is_proper(&c4, &trivial).unwrap());
}

proptest! {
    #[test]
    fn spanning_trees_match_oracle(k in 1usize..=6, weights in proptest::collection::vec(0usize..3, 15)) {
        let edges: Vec<(usize, usize, usize)> = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .zip(weights)
            .map(|((i, j), w)| (i, j, w))
            .collect();
        let got: BTreeSet<_> = MaxSpanningTrees::new(k, edges.clone()).unwrap().collect();
        prop_assert_eq!(got, brute_max_spanning_trees(k, &edges).unwrap());
    }
}
