//! Maximal independent set enumeration over succinctly represented graphs.
//!
//! A [`SuccinctGraph`] never materializes its node set: nodes arrive one at a
//! time from a stream, adjacency is answered by a predicate, and any
//! independent set can be grown into a maximal one by an extender. Given those
//! three pieces, [`MaxIndependentSets`] produces every maximal independent set
//! exactly once, in incremental polynomial time when the stream, predicate and
//! extender are polynomial.
//!
//! The engine keeps a queue of answers waiting to be printed, the list of
//! answers already printed, and a cache of the nodes pulled so far. Each
//! printed answer `J` is extended "towards" every cached node `v`: take `v`
//! together with the members of `J` not adjacent to `v`, extend that to a
//! maximal set, and queue it if it is new. Only when the queue runs dry is
//! another node pulled from the stream, after which every printed answer is
//! extended towards the new node.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, VecDeque};
use std::ops::Range;
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph given by a node stream, an adjacency predicate and an extender.
pub trait SuccinctGraph {
    type Node: Clone;
    /// Canonical encoding of a node; must be injective on the node universe.
    type Key: Ord + Clone;
    type Nodes: Iterator<Item = Self::Node>;

    fn node_stream(&self) -> Self::Nodes;

    /// Symmetric and irreflexive.
    fn adjacent(&self, a: &Self::Node, b: &Self::Node) -> bool;

    /// Grows an independent set into a maximal independent set containing it.
    /// Must be deterministic: the same input always yields the same set.
    fn extend_to_max_ind(&self, set: &[Self::Node]) -> Result<Vec<Self::Node>>;

    fn key(&self, node: &Self::Node) -> Self::Key;

    /// Upper bound on the size of any independent set, when known.
    fn size_bound(&self) -> Option<usize> {
        None
    }
}

/// Counters collected during one enumeration run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    pub answers_emitted: usize,
    pub extender_calls: usize,
    pub nodes_pulled: usize,
    /// Time between consecutive answers; the first sample is measured from the
    /// first call to `next`.
    pub delays: Vec<Duration>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Event {
    Emit,
    Pull,
    Extend,
}

pub type Hook = Box<dyn FnMut(Event, &EnumStats) + Send>;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Slot {
    Queued,
    Printed,
}

/// Streaming enumerator of the maximal independent sets of a [`SuccinctGraph`].
///
/// Answers are returned sorted by node key. After an error the iterator is
/// fused and yields `None`.
pub struct MaxIndependentSets<S: SuccinctGraph> {
    sgr: S,
    stream: S::Nodes,
    stream_exhausted: bool,
    cache: Vec<S::Node>,
    queue: VecDeque<Vec<S::Node>>,
    printed: Vec<Vec<S::Node>>,
    index: BTreeMap<Vec<S::Key>, Slot>,
    /// Printed answer whose extensions have not been generated yet.
    pending: Option<usize>,
    started: bool,
    failed: bool,
    stats: EnumStats,
    clock: Option<Instant>,
    hook: Option<Hook>,
}

pub fn enum_max_independent<S: SuccinctGraph>(sgr: S) -> MaxIndependentSets<S> {
    MaxIndependentSets::new(sgr)
}

impl<S: SuccinctGraph> MaxIndependentSets<S> {
    pub fn new(sgr: S) -> Self {
        let stream = sgr.node_stream();
        MaxIndependentSets {
            sgr,
            stream,
            stream_exhausted: false,
            cache: Vec::new(),
            queue: VecDeque::new(),
            printed: Vec::new(),
            index: BTreeMap::new(),
            pending: None,
            started: false,
            failed: false,
            stats: EnumStats::default(),
            clock: None,
            hook: None,
        }
    }

    /// Installs a callback invoked on every emit, node pull and extender call.
    pub fn with_hook(mut self, hook: Hook) -> Self {
        self.hook = Some(hook);
        self
    }

    pub fn stats(&self) -> &EnumStats {
        &self.stats
    }

    pub fn instance(&self) -> &S {
        &self.sgr
    }

    /// Nodes pulled from the stream so far, in pull order.
    pub fn cached_nodes(&self) -> &[S::Node] {
        &self.cache
    }

    /// Checks that no answer is both queued and printed and that the index
    /// agrees with both collections.
    pub fn store_is_consistent(&self) -> bool {
        let keys = |a: &Vec<S::Node>| a.iter().map(|n| self.sgr.key(n)).collect::<Vec<_>>();
        let queued_ok = self.queue.iter().all(|a| self.index.get(&keys(a)) == Some(&Slot::Queued));
        let printed_ok = self.printed.iter().all(|a| self.index.get(&keys(a)) == Some(&Slot::Printed));
        queued_ok && printed_ok && self.index.len() == self.queue.len() + self.printed.len()
    }

    fn notify(&mut self, event: Event) {
        if let Some(hook) = self.hook.as_mut() {
            hook(event, &self.stats);
        }
    }

    fn sorted(&self, mut set: Vec<S::Node>) -> (Vec<S::Key>, Vec<S::Node>) {
        set.sort_by_cached_key(|n| self.sgr.key(n));
        let keys = set.iter().map(|n| self.sgr.key(n)).collect();
        (keys, set)
    }

    fn extend(&mut self, seed: Vec<S::Node>) -> Result<()> {
        let extended = self.sgr.extend_to_max_ind(&seed)?;
        self.stats.extender_calls += 1;
        self.notify(Event::Extend);
        let (keys, answer) = self.sorted(extended);
        if keys.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::ExtenderContract("extension repeats a node".into()));
        }
        if let Some(bound) = self.sgr.size_bound() {
            if keys.len() > bound {
                return Err(Error::ExtenderContract(format!(
                    "extension has {} nodes, above the size bound {bound}",
                    keys.len()
                )));
            }
        }
        if !seed.iter().all(|n| keys.binary_search(&self.sgr.key(n)).is_ok()) {
            return Err(Error::ExtenderContract("extension does not contain its seed".into()));
        }
        if let Entry::Vacant(slot) = self.index.entry(keys) {
            slot.insert(Slot::Queued);
            self.queue.push_back(answer);
        }
        Ok(())
    }

    /// Extends the printed answer `j` in the direction of the cached node `v`.
    fn extend_towards(&mut self, j: usize, v: usize) -> Result<()> {
        let node = &self.cache[v];
        let key = self.sgr.key(node);
        let answer = &self.printed[j];
        // A maximal set extended towards one of its own members is itself.
        if answer.iter().any(|u| self.sgr.key(u) == key) {
            return Ok(());
        }
        let mut seed = Vec::with_capacity(answer.len() + 1);
        seed.push(node.clone());
        seed.extend(answer.iter().filter(|u| !self.sgr.adjacent(node, u)).cloned());
        self.extend(seed)
    }

    fn expand(&mut self, j: usize) -> Result<()> {
        for v in 0..self.cache.len() {
            self.extend_towards(j, v)?;
        }
        while self.queue.is_empty() && !self.stream_exhausted {
            match self.stream.next() {
                None => self.stream_exhausted = true,
                Some(node) => {
                    self.cache.push(node);
                    self.stats.nodes_pulled += 1;
                    self.notify(Event::Pull);
                    // Every older (answer, node) pair was extended when the
                    // answer was printed or at an earlier pull; the extender
                    // is a function, so repeating those calls adds nothing.
                    let v = self.cache.len() - 1;
                    for j in 0..self.printed.len() {
                        self.extend_towards(j, v)?;
                    }
                }
            }
        }
        Ok(())
    }

    fn advance(&mut self) -> Result<Option<Vec<S::Node>>> {
        if !self.started {
            self.started = true;
            self.clock = Some(Instant::now());
            self.extend(Vec::new())?;
        }
        if let Some(j) = self.pending.take() {
            self.expand(j)?;
        }
        let Some(answer) = self.queue.pop_front() else {
            return Ok(None);
        };
        let keys: Vec<S::Key> = answer.iter().map(|n| self.sgr.key(n)).collect();
        self.index.insert(keys, Slot::Printed);
        self.printed.push(answer.clone());
        self.pending = Some(self.printed.len() - 1);
        let now = Instant::now();
        if let Some(prev) = self.clock.replace(now) {
            self.stats.delays.push(now - prev);
        }
        self.stats.answers_emitted += 1;
        self.notify(Event::Emit);
        Ok(Some(answer))
    }
}

impl<S: SuccinctGraph> Iterator for MaxIndependentSets<S> {
    type Item = Result<Vec<S::Node>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        match self.advance() {
            Ok(answer) => answer.map(Ok),
            Err(e) => {
                self.failed = true;
                Some(Err(e))
            }
        }
    }
}

/// A materialized graph viewed as a succinct graph: nodes are vertex ids in
/// ascending order and the extender greedily adds the smallest addable vertex.
#[derive(Clone, Debug)]
pub struct ExplicitGraph {
    g: Arc<Graph>,
}

pub fn explicit_graph_sgr(g: &Graph) -> ExplicitGraph {
    ExplicitGraph { g: Arc::new(g.clone()) }
}

impl SuccinctGraph for ExplicitGraph {
    type Node = usize;
    type Key = usize;
    type Nodes = Range<usize>;

    fn node_stream(&self) -> Range<usize> {
        0..self.g.n()
    }

    fn adjacent(&self, a: &usize, b: &usize) -> bool {
        self.g.has_edge(*a, *b)
    }

    fn extend_to_max_ind(&self, set: &[usize]) -> Result<Vec<usize>> {
        let mut chosen = vec![false; self.g.n()];
        for &v in set {
            self.g.check_vertex(v)?;
            chosen[v] = true;
        }
        let mut out: Vec<usize> = set.to_vec();
        for v in 0..self.g.n() {
            if !chosen[v] && !self.g.neighbors(v).any(|u| chosen[u]) {
                chosen[v] = true;
                out.push(v);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    fn key(&self, node: &usize) -> usize {
        *node
    }

    fn size_bound(&self) -> Option<usize> {
        Some(self.g.n())
    }
}

#[cfg(test)]
mod tests {
    use std::sync::atomic::{AtomicUsize, Ordering};

    use super::*;

    fn answers(g: &Graph) -> Vec<Vec<usize>> {
        let mut v: Vec<_> = enum_max_independent(explicit_graph_sgr(g)).map(Result::unwrap).collect();
        v.sort();
        v
    }

    #[test]
    fn small_explicit_instances() {
        assert_eq!(answers(&Graph::path(3)), vec![vec![0, 2], vec![1]]);
        assert_eq!(answers(&Graph::complete(3)), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(answers(&Graph::empty(3)), vec![vec![0, 1, 2]]);
        assert_eq!(answers(&Graph::cycle(4)), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(answers(&Graph::cycle(5)).len(), 5);
        assert_eq!(answers(&Graph::empty(1)), vec![vec![0]]);
    }

    #[test]
    fn empty_universe_yields_the_empty_set() {
        assert_eq!(answers(&Graph::empty(0)), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn stats_and_cache_after_exhaustion() {
        let g = Graph::cycle(6);
        let mut it = enum_max_independent(explicit_graph_sgr(&g));
        let mut count = 0;
        while let Some(a) = it.next() {
            a.unwrap();
            assert!(it.store_is_consistent());
            count += 1;
        }
        let stats = it.stats();
        assert_eq!(stats.answers_emitted, count);
        assert_eq!(stats.delays.len(), count);
        assert!(stats.extender_calls >= count);
        assert_eq!(stats.nodes_pulled, 6);
        assert_eq!(it.cached_nodes(), &[0, 1, 2, 3, 4, 5]);
        assert!(it.next().is_none());
    }

    #[test]
    fn hook_sees_every_event() {
        static EMITS: AtomicUsize = AtomicUsize::new(0);
        static CALLS: AtomicUsize = AtomicUsize::new(0);
        let it = enum_max_independent(explicit_graph_sgr(&Graph::cycle(5))).with_hook(Box::new(|event, _| {
            match event {
                Event::Emit => EMITS.fetch_add(1, Ordering::Relaxed),
                Event::Extend => CALLS.fetch_add(1, Ordering::Relaxed),
                Event::Pull => 0,
            };
        }));
        let mut it = it;
        let n = it.by_ref().count();
        assert_eq!(EMITS.load(Ordering::Relaxed), n);
        assert_eq!(CALLS.load(Ordering::Relaxed), it.stats().extender_calls);
    }

    struct Shrinking;

    impl SuccinctGraph for Shrinking {
        type Node = usize;
        type Key = usize;
        type Nodes = Range<usize>;

        fn node_stream(&self) -> Range<usize> {
            0..3
        }

        fn adjacent(&self, _: &usize, _: &usize) -> bool {
            false
        }

        fn extend_to_max_ind(&self, _: &[usize]) -> Result<Vec<usize>> {
            Ok(vec![0])
        }

        fn key(&self, n: &usize) -> usize {
            *n
        }
    }

    #[test]
    fn extender_that_drops_seed_is_reported() {
        let mut it = enum_max_independent(Shrinking);
        assert_eq!(it.next(), Some(Ok(vec![0])));
        assert!(matches!(it.next(), Some(Err(Error::ExtenderContract(_)))));
        assert_eq!(it.next(), None);
    }
}
