use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::Result;
use crate::graph::Graph;
use crate::separators::{check_connected, crosses_unchecked, MinSeps, Separator};
use crate::sgr::{EnumStats, Hook, MaxIndependentSets, SuccinctGraph};

use super::fill::saturate_family;
use super::{Extender, ParallelFamily, Triangulation};

/// The separator graph of `g` as a succinct graph: nodes are the minimal
/// separators, streamed lazily, and two separators are adjacent when they
/// cross. Maximal independent sets are the maximal parallel families.
#[derive(Clone, Debug)]
pub struct SeparatorGraph {
    g: Arc<Graph>,
    extender: Extender,
}

pub fn msep_sgr(g: &Graph, extender: Extender) -> Result<SeparatorGraph> {
    check_connected(g)?;
    Ok(SeparatorGraph { g: Arc::new(g.clone()), extender })
}

impl SeparatorGraph {
    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn extender(&self) -> Extender {
        self.extender
    }
}

impl SuccinctGraph for SeparatorGraph {
    type Node = Separator;
    type Key = Separator;
    type Nodes = MinSeps;

    fn node_stream(&self) -> MinSeps {
        MinSeps::new(self.g.clone()).expect("connectivity checked at construction")
    }

    fn adjacent(&self, a: &Separator, b: &Separator) -> bool {
        crosses_unchecked(&self.g, a, b)
    }

    fn extend_to_max_ind(&self, set: &[Separator]) -> Result<Vec<Separator>> {
        let family = ParallelFamily::trusted(self.g.n(), set.iter().cloned().collect());
        Ok(self.extender.extend(&self.g, &family)?.into_separators().into_iter().collect())
    }

    fn key(&self, node: &Separator) -> Separator {
        node.clone()
    }

    fn size_bound(&self) -> Option<usize> {
        Some(self.g.n().saturating_sub(1))
    }
}

/// Streams every maximal family of pairwise-parallel minimal separators of a
/// connected graph exactly once.
pub struct ParallelFamilies {
    inner: MaxIndependentSets<SeparatorGraph>,
}

impl ParallelFamilies {
    pub fn new(g: &Graph, extender: Extender) -> Result<Self> {
        Ok(ParallelFamilies { inner: MaxIndependentSets::new(msep_sgr(g, extender)?) })
    }

    pub fn with_hook(self, hook: Hook) -> Self {
        ParallelFamilies { inner: self.inner.with_hook(hook) }
    }

    pub fn stats(&self) -> &EnumStats {
        self.inner.stats()
    }

    pub fn engine(&self) -> &MaxIndependentSets<SeparatorGraph> {
        &self.inner
    }
}

impl Iterator for ParallelFamilies {
    type Item = Result<ParallelFamily>;

    fn next(&mut self) -> Option<Self::Item> {
        let n = self.inner.instance().graph().n();
        self.inner.next().map(|r| r.map(|seps| ParallelFamily::trusted(n, seps.into_iter().collect::<BTreeSet<_>>())))
    }
}

pub fn enum_max_parallel_families(g: &Graph, extender: Extender) -> Result<ParallelFamilies> {
    ParallelFamilies::new(g, extender)
}

/// Streams every minimal triangulation of a connected graph exactly once, as
/// the saturation of each maximal parallel family.
pub struct MinTriangulations {
    families: ParallelFamilies,
}

impl MinTriangulations {
    pub fn with_hook(self, hook: Hook) -> Self {
        MinTriangulations { families: self.families.with_hook(hook) }
    }

    pub fn stats(&self) -> &EnumStats {
        self.families.stats()
    }

    /// The next triangulation together with the family it saturates.
    pub fn next_with_family(&mut self) -> Option<Result<(ParallelFamily, Triangulation)>> {
        let family = match self.families.next()? {
            Ok(f) => f,
            Err(e) => return Some(Err(e)),
        };
        let g = self.families.inner.instance().graph();
        Some(saturate_family(g, &family).and_then(|h| Triangulation::new(g, h)).map(|t| (family, t)))
    }
}

impl Iterator for MinTriangulations {
    type Item = Result<Triangulation>;

    fn next(&mut self) -> Option<Self::Item> {
        self.next_with_family().map(|r| r.map(|(_, t)| t))
    }
}

pub fn enum_min_triangulations(g: &Graph, extender: Extender) -> Result<MinTriangulations> {
    Ok(MinTriangulations { families: ParallelFamilies::new(g, extender)? })
}
