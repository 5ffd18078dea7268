//! Growing a family of pairwise-parallel minimal separators into a maximal
//! one.
//!
//! Two interchangeable procedures are provided. [`extend_ind_blackbox`]
//! saturates the family, triangulates with a heuristic, trims the result to a
//! minimal triangulation and reads off its minimal separators.
//! [`extend_ind_separator`] instead cuts the graph along the family and then
//! keeps splitting every non-clique piece along a separator found next to a
//! non-adjacent pair.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph, VertexSet};
use crate::separators::{check_connected, extract_min_seps_chordal, find_min_sep_unchecked, Separator};

use super::fill::{min_tri_sandwich, saturate_family, triangulate_heuristic};
use super::ParallelFamily;

/// Which extension procedure the enumerator uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Extender {
    #[default]
    BlackBox,
    Separator,
}

impl Extender {
    pub fn extend(self, g: &Graph, family: &ParallelFamily) -> Result<ParallelFamily> {
        match self {
            Extender::BlackBox => extend_ind_blackbox(g, family),
            Extender::Separator => extend_ind_separator(g, family),
        }
    }
}

/// Minimal separators of a minimal triangulation of the saturated graph.
pub fn extend_ind_blackbox(g: &Graph, family: &ParallelFamily) -> Result<ParallelFamily> {
    check_connected(g)?;
    let saturated = saturate_family(g, family)?;
    let heuristic = triangulate_heuristic(&saturated);
    let h = min_tri_sandwich(&saturated, &heuristic)?;
    Ok(ParallelFamily::trusted(g.n(), extract_min_seps_chordal(&h)?))
}

/// Splits `piece` along the clique `s` (local ids): one induced subgraph per
/// component `C` of `piece - s`, on `C ∪ N(C)`. Each entry also carries
/// `N(C)` in local ids.
fn split_on_clique(piece: &Subgraph, s: &VertexSet) -> Vec<(Subgraph, VertexSet)> {
    let c = &piece.graph;
    let removed = s.to_bits(c.n());
    c.components_avoiding(&removed)
        .into_iter()
        .map(|comp| {
            let nb = c.neighborhood_bits(&comp);
            let mut members = comp;
            members.union_with(nb.words());
            (piece.restrict(&VertexSet::from_bits(&members)), VertexSet::from_bits(&nb))
        })
        .collect()
}

/// For each component `c_i` of `c - s`, the subgraph of `c` induced by
/// `c_i ∪ N(c_i)`. `s` must be a clique of `c`; ids in the result map to
/// vertices of `c`.
pub fn get_components(c: &Graph, s: &VertexSet) -> Result<Vec<Subgraph>> {
    c.check_set(s)?;
    if !c.is_clique(s) {
        return Err(Error::NotClique(s.clone()));
    }
    let whole = Subgraph::whole(c.clone());
    Ok(split_on_clique(&whole, s).into_iter().map(|(p, _)| p).collect())
}

struct Pending {
    piece: Subgraph,
    /// Family members contained in the piece, in original ids.
    seps: Vec<VertexSet>,
}

/// Returns the pieces together with `N(C)`, in original ids, for every
/// component `C` split off along the way.
fn decompose_unchecked(g: &Graph, family: &ParallelFamily) -> (Vec<Subgraph>, Vec<VertexSet>) {
    let mut queue = VecDeque::from([Pending {
        piece: Subgraph::whole(g.clone()),
        seps: family.iter().map(|s| s.vertices().clone()).collect(),
    }]);
    let mut out = Vec::new();
    let mut boundaries = Vec::new();
    while let Some(Pending { mut piece, seps }) = queue.pop_front() {
        // `seps` is kept sorted, so the first one is the canonical choice.
        let Some((chosen, rest)) = seps.split_first() else {
            out.push(piece);
            continue;
        };
        let local = piece.local_set(chosen).expect("routed separator lies inside its piece");
        piece.graph.saturate_in_place(local.as_slice());
        for (child, nb) in split_on_clique(&piece, &local) {
            // Subsets of the chosen separator separate nothing inside a child.
            let seps = rest.iter().filter(|s| !s.is_subset(chosen) && child.local_set(s).is_some()).cloned().collect();
            boundaries.push(piece.original_set(&nb));
            queue.push_back(Pending { piece: child, seps });
        }
    }
    (out, boundaries)
}

/// Cuts a connected graph along every separator of `family`, saturating each
/// one before splitting. Two vertices end up in no common piece exactly when
/// some member of `family` separates them.
pub fn decompose(g: &Graph, family: &ParallelFamily) -> Result<Vec<Subgraph>> {
    check_connected(g)?;
    family.check_host(g)?;
    Ok(decompose_unchecked(g, family).0)
}

/// Extends `family` by decomposing along it and then splitting every
/// non-clique piece along a minimal separator of its lexicographically first
/// non-adjacent pair, collecting `N(C)` for every resulting component `C`.
pub fn extend_ind_separator(g: &Graph, family: &ParallelFamily) -> Result<ParallelFamily> {
    check_connected(g)?;
    family.check_host(g)?;
    let mut result: BTreeSet<Separator> = family.separators().clone();
    let (pieces, boundaries) = decompose_unchecked(g, family);
    result.extend(boundaries.into_iter().map(Separator::trusted));
    let mut queue: VecDeque<Subgraph> = pieces.into();
    let mut generated = BTreeSet::new();
    while let Some(mut piece) = queue.pop_front() {
        let Some((u, v)) = piece.graph.non_edges().next() else {
            continue;
        };
        let sep = find_min_sep_unchecked(&piece.graph, u, v).into_vertices();
        let fresh = generated.insert(piece.original_set(&sep));
        debug_assert!(fresh, "separator generated twice");
        piece.graph.saturate_in_place(sep.as_slice());
        for (child, nb) in split_on_clique(&piece, &sep) {
            result.insert(Separator::trusted(piece.original_set(&nb)));
            queue.push_back(child);
        }
    }
    Ok(ParallelFamily::trusted(g.n(), result))
}

/// Vertex sets of the pieces produced by [`decompose`], in original ids.
pub fn decompose_vertex_sets(g: &Graph, family: &ParallelFamily) -> Result<Vec<VertexSet>> {
    Ok(decompose(g, family)?.iter().map(Subgraph::vertex_set).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::is_chordal;

    fn fam(g: &Graph, seps: &[&[usize]]) -> ParallelFamily {
        ParallelFamily::new(g, seps.iter().map(|s| Separator::new(g, s.iter().copied().collect()).unwrap())).unwrap()
    }

    fn sets(f: &ParallelFamily) -> Vec<Vec<usize>> {
        f.iter().map(|s| s.as_slice().to_vec()).collect()
    }

    #[test]
    fn blackbox_examples() {
        let c4 = Graph::cycle(4);
        let out = extend_ind_blackbox(&c4, &ParallelFamily::empty(&c4)).unwrap();
        assert!(sets(&out) == vec![vec![0, 2]] || sets(&out) == vec![vec![1, 3]]);
        assert_eq!(sets(&extend_ind_blackbox(&c4, &fam(&c4, &[&[0, 2]])).unwrap()), vec![vec![0, 2]]);

        let c5 = Graph::cycle(5);
        let out = sets(&extend_ind_blackbox(&c5, &fam(&c5, &[&[0, 2]])).unwrap());
        assert!(out == vec![vec![0, 2], vec![0, 3]] || out == vec![vec![0, 2], vec![2, 4]], "{out:?}");
    }

    #[test]
    fn separator_extender_examples() {
        let c4 = Graph::cycle(4);
        let out = extend_ind_separator(&c4, &ParallelFamily::empty(&c4)).unwrap();
        assert_eq!(out.len(), 1);

        let c5 = Graph::cycle(5);
        let out = sets(&extend_ind_separator(&c5, &fam(&c5, &[&[0, 2]])).unwrap());
        assert!(out == vec![vec![0, 2], vec![0, 3]] || out == vec![vec![0, 2], vec![2, 4]], "{out:?}");

        let chordal = Graph::path(5).with_edge(1, 3).unwrap();
        let all = ParallelFamily::trusted(5, extract_min_seps_chordal(&chordal).unwrap());
        assert_eq!(extend_ind_separator(&chordal, &all).unwrap(), all);
    }

    #[test]
    fn extenders_reject_disconnected_input() {
        let g = Graph::empty(3);
        for e in [Extender::BlackBox, Extender::Separator] {
            assert!(matches!(e.extend(&g, &ParallelFamily::empty(&g)), Err(Error::Disconnected { .. })));
        }
    }

    #[test]
    fn get_components_examples() {
        let c4c = Graph::cycle(4).with_edge(0, 2).unwrap();
        let parts = get_components(&c4c, &[0, 2].into()).unwrap();
        let vs: Vec<VertexSet> = parts.iter().map(Subgraph::vertex_set).collect();
        assert_eq!(vs, vec![VertexSet::from([0, 1, 2]), VertexSet::from([0, 2, 3])]);
        assert!(parts.iter().all(|p| p.graph == Graph::complete(3)));

        let parts = get_components(&Graph::path(3), &[1].into()).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.graph.edge_count() == 1));

        let vs: Vec<VertexSet> =
            get_components(&Graph::path(5), &[2].into()).unwrap().iter().map(Subgraph::vertex_set).collect();
        assert_eq!(vs, vec![VertexSet::from([0, 1, 2]), VertexSet::from([2, 3, 4])]);

        assert!(matches!(get_components(&Graph::cycle(4), &[0, 2].into()), Err(Error::NotClique(_))));
    }

    #[test]
    fn decompose_examples() {
        let p5 = Graph::path(5);
        assert_eq!(
            decompose_vertex_sets(&p5, &fam(&p5, &[&[2]])).unwrap(),
            vec![VertexSet::from([0, 1, 2]), VertexSet::from([2, 3, 4])]
        );

        let c4 = Graph::cycle(4);
        let parts = decompose(&c4, &fam(&c4, &[&[0, 2]])).unwrap();
        assert_eq!(parts.len(), 2);
        for p in &parts {
            assert_eq!(p.graph, Graph::complete(3));
            assert!(p.vertex_set().contains(0) && p.vertex_set().contains(2));
        }

        let g = Graph::cycle(6);
        let parts = decompose(&g, &ParallelFamily::empty(&g)).unwrap();
        assert_eq!(parts, vec![Subgraph::whole(g.clone())]);
    }

    #[test]
    fn decomposition_of_a_fan_gives_triangles() {
        let c6 = Graph::cycle(6);
        let f = fam(&c6, &[&[0, 2], &[0, 3], &[0, 4]]);
        let parts = decompose(&c6, &f).unwrap();
        assert_eq!(parts.len(), 4);
        assert!(parts.iter().all(|p| p.graph == Graph::complete(3) && is_chordal(&p.graph)));
    }
}
