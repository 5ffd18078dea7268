//! Chordality testing, maximal cliques of chordal graphs and clique trees.
//!
//! Everything here is driven by a maximum cardinality search (MCS): vertices
//! are visited one at a time, always choosing an unvisited vertex with the
//! most visited neighbors (ties to the smallest id). The reverse of the visit
//! order is a perfect elimination ordering exactly when the graph is chordal.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Maximal cliques of a chordal graph arranged as a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    pub bags: Vec<VertexSet>,
    /// `(i, j, weight)` with `i < j` indexing `bags` and `weight = |bag_i ∩ bag_j|`.
    pub edges: Vec<(usize, usize, usize)>,
}

struct Mcs {
    order: Vec<usize>,
    /// Number of neighbors visited before each vertex, indexed by visit step.
    earlier: Vec<usize>,
}

fn mcs(g: &Graph) -> Mcs {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut earlier = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = usize::MAX;
        for v in 0..n {
            if !visited[v] && (best == usize::MAX || weight[v] > weight[best]) {
                best = v;
            }
        }
        visited[best] = true;
        order.push(best);
        earlier.push(weight[best]);
        for u in g.neighbors(best) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    Mcs { order, earlier }
}

/// Maximum cardinality search visit order (ties to the smallest id).
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    mcs(g).order
}

fn is_peo_reversed(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut visited = BitSet::new(n);
    for &v in order {
        let mut earlier = BitSet::from_words(g.row(v));
        earlier.intersect_with(visited.words());
        if let Some(follower) = earlier.iter().max_by_key(|&u| position[u]) {
            earlier.remove(follower);
            if !earlier.is_subset_of(g.row(follower)) {
                return false;
            }
        }
        visited.insert(v);
    }
    true
}

pub fn is_chordal(g: &Graph) -> bool {
    is_peo_reversed(g, &mcs(g).order)
}

/// All maximal cliques of a chordal graph, sorted canonically.
///
/// A clique closes at visit step `i` when the next vertex does not have more
/// earlier-visited neighbors than step `i` did.
pub fn max_cliques_chordal(h: &Graph) -> Result<Vec<VertexSet>> {
    let Mcs { order, earlier } = mcs(h);
    if !is_peo_reversed(h, &order) {
        return Err(Error::NotChordal);
    }
    let n = h.n();
    let mut visited = BitSet::new(n);
    let mut cliques = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        if i + 1 == n || earlier[i + 1] <= earlier[i] {
            let mut clique = BitSet::from_words(h.row(v));
            clique.intersect_with(visited.words());
            clique.insert(v);
            cliques.push(VertexSet::from_bits(&clique));
        }
        visited.insert(v);
    }
    cliques.sort();
    Ok(cliques)
}

/// Maximum-weight spanning tree of the clique intersection graph of a
/// connected chordal graph (Kruskal, ties by bag index).
pub fn clique_tree(h: &Graph) -> Result<CliqueTree> {
    let bags = max_cliques_chordal(h)?;
    if !h.is_connected() {
        return Err(Error::Disconnected { components: crate::graph::connected_components(h).len() });
    }
    let bits: Vec<BitSet> = bags.iter().map(|b| b.to_bits(h.n())).collect();
    let mut candidates = Vec::new();
    for i in 0..bags.len() {
        for j in i + 1..bags.len() {
            let mut common = bits[i].clone();
            common.intersect_with(bits[j].words());
            let w = common.len();
            if w > 0 {
                candidates.push((i, j, w));
            }
        }
    }
    candidates.sort_by(|a, b| b.2.cmp(&a.2).then((a.0, a.1).cmp(&(b.0, b.1))));
    let mut parent: Vec<usize> = (0..bags.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut edges = Vec::with_capacity(bags.len().saturating_sub(1));
    for (i, j, w) in candidates {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri] = rj;
            edges.push((i, j, w));
        }
    }
    edges.sort();
    Ok(CliqueTree { bags, edges })
}
