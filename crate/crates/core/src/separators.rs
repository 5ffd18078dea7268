//! Minimal separators: predicates, the crossing relation and enumeration.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::chordal::clique_tree;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A vertex set known to be a minimal separator of some host graph.
///
/// Ordering and equality are those of the underlying [`VertexSet`], which is
/// the canonical encoding used for deduplication.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Separator(VertexSet);

impl Separator {
    /// Validates `set` against `g`.
    pub fn new(g: &Graph, set: VertexSet) -> Result<Self> {
        if !set.is_empty() && is_minimal_separator(g, &set) {
            Ok(Separator(set))
        } else {
            Err(Error::NotMinimalSeparator(set))
        }
    }

    pub(crate) fn trusted(set: VertexSet) -> Self {
        Separator(set)
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.0
    }

    pub fn into_vertices(self) -> VertexSet {
        self.0
    }
}

impl Deref for Separator {
    type Target = VertexSet;

    fn deref(&self) -> &VertexSet {
        &self.0
    }
}

impl fmt::Debug for Separator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// True when `u` and `v` lie in different components of `g - set`.
pub fn is_separator(g: &Graph, set: &VertexSet, u: usize, v: usize) -> Result<bool> {
    g.check_set(set)?;
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    if let Some(w) = [u, v].into_iter().find(|&w| set.contains(w)) {
        return Err(Error::VertexInSeparator(w));
    }
    let removed = set.to_bits(g.n());
    let mut allowed = BitSet::full(g.n());
    allowed.difference_with(removed.words());
    Ok(!g.grow_component(u, &allowed).contains(v))
}

/// Components `C` of `g - removed` with `N(C) = removed`.
fn full_components(g: &Graph, removed: &BitSet) -> Vec<BitSet> {
    g.components_avoiding(removed).into_iter().filter(|c| g.neighborhood_bits(c) == *removed).collect()
}

/// True when `g - set` has at least two full components, i.e. `set` is a
/// minimal `(u, v)`-separator for some pair. Out-of-range ids give `false`.
pub fn is_minimal_separator(g: &Graph, set: &VertexSet) -> bool {
    if g.check_set(set).is_err() {
        return false;
    }
    full_components(g, &set.to_bits(g.n())).len() >= 2
}

pub(crate) fn crosses_unchecked(g: &Graph, s: &VertexSet, t: &VertexSet) -> bool {
    let mut rest = t.iter().filter(|&v| !s.contains(v));
    let Some(first) = rest.next() else {
        return false;
    };
    let mut allowed = BitSet::full(g.n());
    for v in s {
        allowed.remove(v);
    }
    let comp = g.grow_component(first, &allowed);
    rest.any(|v| !comp.contains(v))
}

/// True when `t` meets at least two components of `g - s`. Symmetric on
/// minimal separators.
pub fn crosses(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<bool> {
    for x in [s, t] {
        if x.is_empty() || !is_minimal_separator(g, x) {
            return Err(Error::NotMinimalSeparator(x.clone()));
        }
    }
    Ok(crosses_unchecked(g, s, t))
}

pub(crate) fn check_connected(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected { components: crate::graph::connected_components(g).len() });
    }
    Ok(())
}

/// Streaming enumeration of all minimal separators of a connected graph.
///
/// Seeds are `N(C)` for every component `C` of `g - N[v]`, taken vertex by
/// vertex; every yielded `S` spawns `N(C)` for every component `C` of
/// `g - (S ∪ N(x))`, `x ∈ S`. Pending separators are served first in, first
/// out, and a canonical-set index keeps each one from being queued twice.
pub struct MinSeps {
    g: Arc<Graph>,
    queue: VecDeque<VertexSet>,
    seen: BTreeSet<VertexSet>,
    next_seed: usize,
}

impl MinSeps {
    pub fn new(g: Arc<Graph>) -> Result<Self> {
        check_connected(&g)?;
        Ok(MinSeps { g, queue: VecDeque::new(), seen: BTreeSet::new(), next_seed: 0 })
    }

    fn offer_neighborhoods_of_components(&mut self, removed: &BitSet) {
        for comp in self.g.components_avoiding(removed) {
            let sep = VertexSet::from_bits(&self.g.neighborhood_bits(&comp));
            if !sep.is_empty() && !self.seen.contains(&sep) {
                self.seen.insert(sep.clone());
                self.queue.push_back(sep);
            }
        }
    }
}

impl Iterator for MinSeps {
    type Item = Separator;

    fn next(&mut self) -> Option<Separator> {
        let n = self.g.n();
        while self.queue.is_empty() && self.next_seed < n {
            let v = self.next_seed;
            self.next_seed += 1;
            let mut closed = BitSet::from_words(self.g.row(v));
            closed.insert(v);
            self.offer_neighborhoods_of_components(&closed);
        }
        let sep = self.queue.pop_front()?;
        let base = sep.to_bits(n);
        for x in sep.iter() {
            let mut removed = base.clone();
            removed.union_with(self.g.row(x));
            self.offer_neighborhoods_of_components(&removed);
        }
        Some(Separator(sep))
    }
}

/// All minimal separators of a connected graph, as a stream.
pub fn enum_min_seps(g: &Graph) -> Result<MinSeps> {
    MinSeps::new(Arc::new(g.clone()))
}

/// A minimal `(u, v)`-separator contained in `N(u)`: the neighborhood of the
/// component of `c - N(u)` that holds `v`.
pub fn find_min_sep(c: &Graph, u: usize, v: usize) -> Result<Separator> {
    c.check_vertex(u)?;
    c.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    if c.has_edge(u, v) {
        return Err(Error::AdjacentPair(u, v));
    }
    Ok(find_min_sep_unchecked(c, u, v))
}

pub(crate) fn find_min_sep_unchecked(c: &Graph, u: usize, v: usize) -> Separator {
    let mut allowed = BitSet::full(c.n());
    allowed.difference_with(c.row(u));
    let comp = c.grow_component(v, &allowed);
    Separator(VertexSet::from_bits(&c.neighborhood_bits(&comp)))
}

/// Minimal separators of a connected chordal graph: the distinct nonempty
/// intersections of adjacent bags in a clique tree.
pub fn extract_min_seps_chordal(h: &Graph) -> Result<BTreeSet<Separator>> {
    let tree = clique_tree(h)?;
    Ok(tree
        .edges
        .iter()
        .map(|&(i, j, _)| tree.bags[i].intersection(&tree.bags[j]))
        .filter(|s| !s.is_empty())
        .map(Separator)
        .collect())
}

/// Minimal separators of `g` that are cliques of `g`.
pub fn clq_min_seps(g: &Graph) -> Result<BTreeSet<Separator>> {
    Ok(enum_min_seps(g)?.filter(|s| g.is_clique(s)).collect())
}

/// Number of full components of `g - set`, exposed for diagnostics.
pub fn full_component_count(g: &Graph, set: &VertexSet) -> Result<usize> {
    g.check_set(set)?;
    Ok(full_components(g, &set.to_bits(g.n())).len())
}
