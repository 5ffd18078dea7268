mod common;

use std::collections::BTreeSet;

use common::{corpus, graph_with, seps, triangulations, vertex_sets, EXTENDERS};
use mintri::{
    clq_min_seps, decompose, enum_max_independent, enum_max_parallel_families, enum_min_triangulations,
    explicit_graph_sgr, extract_min_seps_chordal, get_components, is_chordal, is_minimal_separator,
    is_minimal_triangulation, saturate, saturate_family, Extender, Graph, ParallelFamily, Separator, VertexSet,
};
use mintri_oracle::{brute_min_seps, corpus as oracle_corpus, min_triangulations};

fn families(g: &Graph, e: Extender) -> Vec<ParallelFamily> {
    enum_max_parallel_families(g, e).unwrap().map(Result::unwrap).collect()
}

/// Every subset of size at most three of a few maximal families.
fn seeds(g: &Graph) -> Vec<ParallelFamily> {
    let mut out = BTreeSet::new();
    for fam in families(g, Extender::BlackBox).into_iter().take(4) {
        let members: Vec<Separator> = fam.iter().cloned().collect();
        let k = members.len();
        for mask in 0u32..1 << k.min(20) {
            if mask.count_ones() <= 3 {
                let pick: Vec<Separator> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| members[i].clone()).collect();
                out.insert(pick);
            }
        }
    }
    out.into_iter().map(|p| ParallelFamily::new(g, p).unwrap()).collect()
}

#[test]
fn enumeration_matches_oracle_on_all_graphs_up_to_six() {
    for n in 1..=6 {
        for g in oracle_corpus::all_connected_graphs(n) {
            let expected = min_triangulations(&g).unwrap();
            for e in EXTENDERS {
                let got = triangulations(&g, e);
                let distinct: BTreeSet<_> = got.iter().cloned().collect();
                assert_eq!(got.len(), distinct.len(), "duplicate on {g:?}");
                assert_eq!(distinct, expected, "{e:?} on {g:?}");
            }
        }
    }
}

#[test]
fn enumeration_matches_oracle_on_random_graphs() {
    for g in oracle_corpus::random_corpus(200, 6..=9, 0x5eed) {
        let expected = min_triangulations(&g).unwrap();
        for e in EXTENDERS {
            let got: BTreeSet<_> = triangulations(&g, e).into_iter().collect();
            assert_eq!(got, expected, "{e:?} on {g:?}");
        }
    }
}

#[test]
fn families_round_trip_through_their_saturation() {
    for g in corpus() {
        for e in EXTENDERS {
            for fam in families(&g, e) {
                assert!(fam.len() < g.n().max(1), "family too large on {g:?}");
                let h = saturate_family(&g, &fam).unwrap();
                assert!(is_chordal(&h));
                assert_eq!(vertex_sets(&extract_min_seps_chordal(&h).unwrap()), vertex_sets(fam.iter()));
                for (u, v) in g.extra_edges(&h) {
                    assert!(!is_chordal(&h.without_edge(u, v).unwrap()), "{g:?} fill {u}-{v} removable");
                }
            }
        }
    }
}

#[test]
fn extenders_honor_their_contract() {
    for g in corpus() {
        let all = brute_min_seps(&g).unwrap();
        for seed in seeds(&g) {
            for e in EXTENDERS {
                let out = e.extend(&g, &seed).unwrap();
                assert!(out.is_superset(&seed), "{e:?} dropped seed on {g:?}");
                let members = vertex_sets(out.iter());
                assert!(members.iter().all(|s| all.contains(s)));
                for s in &members {
                    for t in &members {
                        assert!(!mintri::crosses(&g, s, t).unwrap(), "{e:?} crossing output on {g:?}");
                    }
                }
                for s in all.difference(&members) {
                    assert!(
                        members.iter().any(|t| mintri::crosses(&g, s, t).unwrap()),
                        "{e:?} output not maximal on {g:?}: {s:?} could be added"
                    );
                }
                assert_eq!(e.extend(&g, &out).unwrap(), out, "{e:?} is not a fixed point on {g:?}");
            }
        }
    }
}

#[test]
fn extensions_saturate_to_minimal_triangulations() {
    for g in corpus() {
        for seed in seeds(&g) {
            let a = Extender::BlackBox.extend(&g, &seed).unwrap();
            let b = Extender::Separator.extend(&g, &seed).unwrap();
            for out in [a, b] {
                let h = saturate_family(&g, &out).unwrap();
                assert!(is_minimal_triangulation(&g, &h), "{g:?}");
            }
        }
    }
}

#[test]
fn heggernes_properties() {
    for g in corpus().into_iter().filter(|g| g.n() <= 8) {
        let clique_seps = vertex_sets(&clq_min_seps(&g).unwrap());
        for phi in seeds(&g) {
            let h = saturate_family(&g, &phi).unwrap();
            let h_clique_seps = vertex_sets(&clq_min_seps(&h).unwrap());
            assert!(vertex_sets(phi.iter()).is_subset(&h_clique_seps), "{g:?}");
            assert!(clique_seps.is_subset(&seps(&h)), "{g:?}");
            for t in enum_min_triangulations(&h, Extender::BlackBox).unwrap() {
                let t = t.unwrap();
                assert!(is_minimal_triangulation(&g, t.chordal_graph()), "{g:?}");
            }
        }
    }
}

#[test]
fn decomposition_lemma() {
    for g in corpus().into_iter().filter(|g| g.n() <= 8) {
        for phi in seeds(&g).into_iter().filter(|f| !f.is_empty()) {
            let s = phi.iter().next().unwrap().vertices().clone();
            let h = saturate(&g, &s).unwrap();
            let pieces = get_components(&h, &s).unwrap();
            for piece in &pieces {
                let local: VertexSet = s.iter().filter_map(|v| piece.local(v)).collect();
                for mask in 0u32..1 << local.len() {
                    let sub: VertexSet =
                        local.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| v).collect();
                    assert!(!is_minimal_separator(&piece.graph, &sub), "{g:?} piece keeps {sub:?}");
                }
            }
            for t in phi.iter().skip(1) {
                let holders = pieces
                    .iter()
                    .filter(|p| p.local_set(t).is_some_and(|l| is_minimal_separator(&p.graph, &l)))
                    .count();
                let expected = usize::from(!t.is_subset(&s));
                assert_eq!(holders, expected, "{g:?}: {t:?} held by {holders} pieces");
            }
            let full = decompose(&g, &phi).unwrap();
            let covered: BTreeSet<usize> = full.iter().flat_map(|p| p.vertex_set().into_vec()).collect();
            assert_eq!(covered.len(), g.n());
        }
    }
}

#[test]
fn count_matches_explicit_crossing_graph() {
    for g in corpus().into_iter().filter(|g| g.n() <= 7) {
        let nodes: Vec<VertexSet> = seps(&g).into_iter().collect();
        let edges = (0..nodes.len()).flat_map(|i| (i + 1..nodes.len()).map(move |j| (i, j)));
        let edges: Vec<_> = edges.filter(|&(i, j)| mintri::crosses(&g, &nodes[i], &nodes[j]).unwrap()).collect();
        let crossing = Graph::from_edges(nodes.len(), edges).unwrap();
        let explicit = enum_max_independent(explicit_graph_sgr(&crossing)).count();
        for e in EXTENDERS {
            assert_eq!(triangulations(&g, e).len(), explicit, "{g:?}");
        }
    }
}

#[test]
fn triangulations_are_minimal_and_distinct() {
    for g in corpus() {
        let mut seen = BTreeSet::new();
        for t in enum_min_triangulations(&g, Extender::Separator).unwrap() {
            let t = t.unwrap();
            assert!(t.is_minimal());
            assert!(is_minimal_triangulation(&g, &graph_with(&g, t.fill_edges())));
            assert!(seen.insert(t.fill_edges().to_vec()));
        }
    }
}
