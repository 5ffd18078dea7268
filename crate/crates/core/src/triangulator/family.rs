use std::collections::BTreeSet;

use crate::chordal::is_chordal;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separators::{crosses_unchecked, is_minimal_separator, Separator};

/// A set of pairwise non-crossing minimal separators of one host graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParallelFamily {
    n: usize,
    seps: BTreeSet<Separator>,
}

impl ParallelFamily {
    pub fn empty(g: &Graph) -> Self {
        ParallelFamily { n: g.n(), seps: BTreeSet::new() }
    }

    /// Validates that every member is a minimal separator of `g` and that no
    /// two members cross.
    pub fn new(g: &Graph, seps: impl IntoIterator<Item = Separator>) -> Result<Self> {
        let seps: BTreeSet<Separator> = seps.into_iter().collect();
        for s in &seps {
            if s.is_empty() || !is_minimal_separator(g, s) {
                return Err(Error::NotMinimalSeparator(s.vertices().clone()));
            }
        }
        let list: Vec<&Separator> = seps.iter().collect();
        for (i, s) in list.iter().enumerate() {
            for t in &list[i + 1..] {
                if crosses_unchecked(g, s, t) {
                    return Err(Error::Crossing(s.vertices().clone(), t.vertices().clone()));
                }
            }
        }
        Ok(ParallelFamily { n: g.n(), seps })
    }

    pub(crate) fn trusted(n: usize, seps: BTreeSet<Separator>) -> Self {
        ParallelFamily { n, seps }
    }

    /// Vertex count of the host graph.
    pub fn host_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.seps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seps.is_empty()
    }

    pub fn contains(&self, s: &Separator) -> bool {
        self.seps.contains(s)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Separator> {
        self.seps.iter()
    }

    pub fn separators(&self) -> &BTreeSet<Separator> {
        &self.seps
    }

    pub fn into_separators(self) -> BTreeSet<Separator> {
        self.seps
    }

    pub fn is_superset(&self, other: &ParallelFamily) -> bool {
        self.seps.is_superset(&other.seps)
    }

    pub(crate) fn check_host(&self, g: &Graph) -> Result<()> {
        if self.n == g.n() {
            Ok(())
        } else {
            Err(Error::HostMismatch { expected: g.n(), found: self.n })
        }
    }
}

/// A chordal supergraph `h` of a base graph on the same vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    fill: Vec<(usize, usize)>,
    graph: Graph,
}

impl Triangulation {
    pub fn new(base: &Graph, h: Graph) -> Result<Self> {
        if !base.is_subgraph_of(&h) {
            return Err(Error::NotSupergraph);
        }
        if !is_chordal(&h) {
            return Err(Error::NotChordal);
        }
        Ok(Triangulation { fill: base.extra_edges(&h), graph: h })
    }

    /// Fill edges `(u, v)`, `u < v`, in lexicographic order.
    pub fn fill_edges(&self) -> &[(usize, usize)] {
        &self.fill
    }

    pub fn chordal_graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// No single fill edge can be dropped while keeping the graph chordal.
    pub fn is_minimal(&self) -> bool {
        is_minimal_triangulation_of_fill(&self.graph, &self.fill)
    }
}

pub(crate) fn is_minimal_triangulation_of_fill(h: &Graph, fill: &[(usize, usize)]) -> bool {
    let mut probe = h.clone();
    fill.iter().all(|&(u, v)| {
        probe.delete_edge(u, v);
        let chordal = is_chordal(&probe);
        probe.insert_edge(u, v);
        !chordal
    })
}

/// True when `h` is a minimal triangulation of `g`: a chordal supergraph from
/// which no single fill edge can be removed without losing chordality.
pub fn is_minimal_triangulation(g: &Graph, h: &Graph) -> bool {
    g.is_subgraph_of(h) && is_chordal(h) && is_minimal_triangulation_of_fill(h, &g.extra_edges(h))
}
