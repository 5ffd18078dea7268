//! Simple undirected graphs over dense vertex ids and canonical vertex sets.

use std::fmt;

use crate::bitset::{iter_ones, words_for, BitSet};
use crate::error::{Error, Result};

/// A set of vertex ids kept sorted ascending without duplicates.
///
/// The derived ordering compares the sorted member lists lexicographically,
/// which is the canonical order used for deduplication and output.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub(crate) fn from_sorted_unchecked(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    pub(crate) fn from_bits(bits: &BitSet) -> Self {
        VertexSet(bits.iter().collect())
    }

    pub(crate) fn to_bits(&self, n: usize) -> BitSet {
        BitSet::from_iter_n(n, self.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(a: [usize; N]) -> Self {
        a.into_iter().collect()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one bit row per vertex, so neighbor iteration is in
/// ascending id order and adjacency tests are constant time.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph { n, words, rows: vec![0; n * words], edge_count: 0 }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range
    /// endpoints.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.insert_edge(v - 1, v);
        }
        g
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Graph::path(n);
        g.insert_edge(n - 1, 0);
        g
    }

    /// Star with center `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.insert_edge(0, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_ones(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet((0..self.n).collect())
    }

    /// True when every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let s = set.as_slice();
        s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components_avoiding(&BitSet::new(self.n)).len() == 1
    }

    /// Returns a copy with the extra edge `{u, v}`; a no-op when already present.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = self.clone();
        if !g.has_edge(u, v) {
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Returns a copy without the edge `{u, v}`.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        if g.has_edge(u, v) {
            g.delete_edge(u, v);
        }
        Ok(g)
    }

    /// True when every edge of `self` is an edge of `other` and both share
    /// the vertex set.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    /// Edges of `other` missing from `self`, in lexicographic order.
    pub fn extra_edges(&self, other: &Graph) -> Vec<(usize, usize)> {
        other.edges().filter(|&(u, v)| !self.has_edge(u, v)).collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.max() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.has_edge(u, v));
        let w = self.words;
        self.rows[u * w + v / 64] |= 1 << (v % 64);
        self.rows[v * w + u / 64] |= 1 << (u % 64);
        self.edge_count += 1;
    }

    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) {
        debug_assert!(self.has_edge(u, v));
        let w = self.words;
        self.rows[u * w + v / 64] &= !(1 << (v % 64));
        self.rows[v * w + u / 64] &= !(1 << (u % 64));
        self.edge_count -= 1;
    }

    /// Adds every missing edge inside `set`, in place.
    pub(crate) fn saturate_in_place(&mut self, set: &[usize]) {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if !self.has_edge(u, v) {
                    self.insert_edge(u, v);
                }
            }
        }
    }

    /// Connected components of the graph with `removed` deleted, ordered by
    /// smallest member.
    pub(crate) fn components_avoiding(&self, removed: &BitSet) -> Vec<BitSet> {
        let mut unseen = BitSet::full(self.n);
        unseen.difference_with(removed.words());
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let comp = self.grow_component(start, &unseen);
            unseen.difference_with(comp.words());
            out.push(comp);
        }
        out
    }

    /// The component containing `start` within the vertex set `allowed`.
    pub(crate) fn grow_component(&self, start: usize, allowed: &BitSet) -> BitSet {
        let mut comp = BitSet::new(self.n);
        comp.insert(start);
        let mut frontier = comp.clone();
        let mut next = BitSet::new(self.n);
        while !frontier.is_empty() {
            next.clear();
            for v in frontier.iter() {
                next.union_with(self.row(v));
            }
            next.intersect_with(allowed.words());
            next.difference_with(comp.words());
            comp.union_with(next.words());
            std::mem::swap(&mut frontier, &mut next);
        }
        comp
    }

    /// Open neighborhood of a vertex set, as bits.
    pub(crate) fn neighborhood_bits(&self, set: &BitSet) -> BitSet {
        let mut out = BitSet::new(self.n);
        for v in set.iter() {
            out.union_with(self.row(v));
        }
        out.difference_with(set.words());
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

/// An induced subgraph together with the ids its vertices carry in the graph
/// it was cut from. `ids` is strictly increasing, so local and original ids
/// order the same way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub ids: Vec<usize>,
}

impl Subgraph {
    /// Wraps a whole graph with the identity mapping.
    pub fn whole(graph: Graph) -> Self {
        let ids = (0..graph.n()).collect();
        Subgraph { graph, ids }
    }

    pub fn original(&self, local: usize) -> usize {
        self.ids[local]
    }

    pub fn local(&self, original: usize) -> Option<usize> {
        self.ids.binary_search(&original).ok()
    }

    pub fn original_set(&self, local: &VertexSet) -> VertexSet {
        VertexSet::from_sorted_unchecked(local.iter().map(|v| self.ids[v]).collect())
    }

    /// Local ids for `set`, or `None` when some member is not in the subgraph.
    pub fn local_set(&self, set: &VertexSet) -> Option<VertexSet> {
        set.iter().map(|v| self.local(v)).collect::<Option<Vec<_>>>().map(VertexSet::from_sorted_unchecked)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_sorted_unchecked(self.ids.clone())
    }

    /// Induced subgraph on a subset of this subgraph's local ids, with the
    /// mapping composed back to the original ids.
    pub(crate) fn restrict(&self, local: &VertexSet) -> Subgraph {
        let inner = induced_subgraph_unchecked(&self.graph, local);
        Subgraph { graph: inner.graph, ids: inner.ids.iter().map(|&v| self.ids[v]).collect() }
    }
}

/// Subgraph of `g` induced by `set`, with vertices renumbered `0..|set|` in
/// ascending order of their original ids.
pub fn induced_subgraph(g: &Graph, set: &VertexSet) -> Result<Subgraph> {
    g.check_set(set)?;
    Ok(induced_subgraph_unchecked(g, set))
}

pub(crate) fn induced_subgraph_unchecked(g: &Graph, set: &VertexSet) -> Subgraph {
    let ids = set.as_slice().to_vec();
    let mut sub = Graph::empty(ids.len());
    for (i, &u) in ids.iter().enumerate() {
        for (j, &v) in ids.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                sub.insert_edge(i, j);
            }
        }
    }
    Subgraph { graph: sub, ids }
}

/// `N(U)`: vertices outside `set` adjacent to some member of `set`.
pub fn neighborhood(g: &Graph, set: &VertexSet) -> Result<VertexSet> {
    g.check_set(set)?;
    Ok(VertexSet::from_bits(&g.neighborhood_bits(&set.to_bits(g.n()))))
}

/// Connected components, each sorted, listed by smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    g.components_avoiding(&BitSet::new(g.n())).iter().map(VertexSet::from_bits).collect()
}

/// Copy of `g` in which `set` is a clique.
pub fn saturate(g: &Graph, set: &VertexSet) -> Result<Graph> {
    g.check_set(set)?;
    let mut out = g.clone();
    out.saturate_in_place(set.as_slice());
    Ok(out)
}
