use crate::bitset::{count_and_not, BitSet};
use crate::chordal::is_chordal;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::ParallelFamily;

/// `g` with every separator of `family` saturated.
pub fn saturate_family(g: &Graph, family: &ParallelFamily) -> Result<Graph> {
    family.check_host(g)?;
    let mut out = g.clone();
    for s in family.iter() {
        g.check_set(s)?;
        out.saturate_in_place(s.as_slice());
    }
    Ok(out)
}

/// Min-fill elimination: repeatedly eliminate the remaining vertex whose
/// neighborhood needs the fewest extra edges to become a clique (ties to the
/// smallest id). Returns `g` plus all fill edges; chordal but not
/// necessarily minimal.
pub fn triangulate_heuristic(g: &Graph) -> Graph {
    let n = g.n();
    let mut h = g.clone();
    let mut remaining = BitSet::full(n);
    let mut nbrs = BitSet::new(n);
    for _ in 0..n {
        let mut best: Option<(usize, usize)> = None;
        for v in remaining.iter() {
            nbrs.clear();
            nbrs.union_with(h.row(v));
            nbrs.intersect_with(remaining.words());
            let mut missing = 0;
            for a in nbrs.iter() {
                // neighbors of v not adjacent to a, excluding a itself
                missing += count_and_not(nbrs.words(), h.row(a), nbrs.words()) - 1;
            }
            let fill = missing / 2;
            if best.is_none_or(|(_, f)| fill < f) {
                best = Some((v, fill));
                if fill == 0 {
                    break;
                }
            }
        }
        let Some((v, fill)) = best else { break };
        remaining.remove(v);
        if fill > 0 {
            let mut around = BitSet::from_words(h.row(v));
            around.intersect_with(remaining.words());
            let members: Vec<usize> = around.iter().collect();
            h.saturate_in_place(&members);
        }
    }
    h
}

/// A minimal triangulation `h` of `g` with `E(g) ⊆ E(h) ⊆ E(g_t)`.
///
/// Fill edges of `g_t` are visited in lexicographic order and dropped whenever
/// the graph stays chordal without them; passes repeat until none can be
/// dropped, at which point the result is minimal.
pub fn min_tri_sandwich(g: &Graph, g_t: &Graph) -> Result<Graph> {
    if !g.is_subgraph_of(g_t) {
        return Err(Error::NotSupergraph);
    }
    if !is_chordal(g_t) {
        return Err(Error::NotChordal);
    }
    let mut h = g_t.clone();
    let mut fill = g.extra_edges(g_t);
    loop {
        let before = fill.len();
        fill.retain(|&(u, v)| {
            h.delete_edge(u, v);
            if is_chordal(&h) {
                false
            } else {
                h.insert_edge(u, v);
                true
            }
        });
        if fill.len() == before {
            return Ok(h);
        }
    }
}
