//! Tree decompositions, properness, and enumeration of proper tree
//! decompositions.
//!
//! Proper decompositions are produced per minimal triangulation `h`: their
//! bags are exactly the maximal cliques of `h`, and their trees are exactly
//! the maximum-weight spanning trees of the clique graph of `h` (edge weight =
//! size of the intersection of the two cliques).

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::chordal::max_cliques_chordal;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::triangulator::{enum_min_triangulations, is_minimal_triangulation, Extender, MinTriangulations};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeDecomposition {
    /// Vertex count of the host graph.
    pub n: usize,
    pub bags: Vec<VertexSet>,
    /// Tree edges as pairs of bag indices.
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(n: usize, bags: Vec<VertexSet>, edges: Vec<(usize, usize)>) -> Self {
        TreeDecomposition { n, bags, edges }
    }

    /// A single bag holding every vertex.
    pub fn trivial(g: &Graph) -> Self {
        TreeDecomposition::new(g.n(), vec![g.vertices()], Vec::new())
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// The bags as a set, forgetting the tree.
    pub fn bag_set(&self) -> BTreeSet<VertexSet> {
        self.bags.iter().cloned().collect()
    }

    fn check_tree(&self) -> Result<()> {
        let k = self.bags.len();
        if k == 0 {
            return Err(Error::MalformedTree("no bags".into()));
        }
        if self.edges.len() != k - 1 {
            return Err(Error::MalformedTree(format!("{} bags but {} edges", k, self.edges.len())));
        }
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            if a >= k || b >= k {
                return Err(Error::MalformedTree(format!("edge ({a}, {b}) names a missing bag")));
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(Error::MalformedTree(format!("edge ({a}, {b}) closes a cycle")));
            }
            parent[ra] = rb;
        }
        Ok(())
    }
}

/// Checks node coverage, edge coverage and the junction-tree property.
pub fn is_tree_decomposition(g: &Graph, d: &TreeDecomposition) -> Result<bool> {
    if d.n != g.n() {
        return Err(Error::HostMismatch { expected: g.n(), found: d.n });
    }
    d.check_tree()?;
    for bag in &d.bags {
        g.check_set(bag)?;
    }
    for v in 0..g.n() {
        let holders = d.bags.iter().filter(|b| b.contains(v)).count();
        if holders == 0 {
            return Ok(false);
        }
        // In a tree, a vertex subset induces a subtree iff it spans one fewer edge.
        let spanning = d.edges.iter().filter(|&&(a, b)| d.bags[a].contains(v) && d.bags[b].contains(v)).count();
        if spanning + 1 != holders {
            return Ok(false);
        }
    }
    Ok(g.edges().all(|(u, v)| d.bags.iter().any(|b| b.contains(u) && b.contains(v))))
}

fn require_td(g: &Graph, d: &TreeDecomposition) -> Result<()> {
    if is_tree_decomposition(g, d)? {
        Ok(())
    } else {
        Err(Error::NotTreeDecomposition)
    }
}

/// `g` with every bag of `d` saturated; always chordal.
pub fn saturate_td(g: &Graph, d: &TreeDecomposition) -> Result<Graph> {
    require_td(g, d)?;
    let mut h = g.clone();
    for bag in &d.bags {
        h.saturate_in_place(bag.as_slice());
    }
    Ok(h)
}

/// `d1 ⊑ d2`: every bag of `d1` lies inside some bag of `d2`.
pub fn subsumes(d1: &TreeDecomposition, d2: &TreeDecomposition) -> Result<bool> {
    if d1.n != d2.n {
        return Err(Error::HostMismatch { expected: d1.n, found: d2.n });
    }
    Ok(d1.bags.iter().all(|b1| d2.bags.iter().any(|b2| b1.is_subset(b2))))
}

/// A tree decomposition is proper iff saturating its bags gives a minimal
/// triangulation whose maximal cliques are exactly the bags.
pub fn is_proper(g: &Graph, d: &TreeDecomposition) -> Result<bool> {
    let h = saturate_td(g, d)?;
    if !is_minimal_triangulation(g, &h) {
        return Ok(false);
    }
    let cliques: BTreeSet<VertexSet> = max_cliques_chordal(&h)?.into_iter().collect();
    Ok(cliques == d.bag_set())
}

/// Maximal cliques of a chordal graph with every pair joined by an edge
/// weighted by the size of their intersection (zero included).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedCliqueGraph {
    pub nodes: Vec<VertexSet>,
    /// `(i, j, weight)` with `i < j`, lexicographic.
    pub edges: Vec<(usize, usize, usize)>,
}

pub fn clique_graph(h: &Graph) -> Result<WeightedCliqueGraph> {
    let nodes = max_cliques_chordal(h)?;
    if !h.is_connected() {
        return Err(Error::Disconnected { components: crate::graph::connected_components(h).len() });
    }
    let mut edges = Vec::new();
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            edges.push((i, j, nodes[i].intersection(&nodes[j]).len()));
        }
    }
    Ok(WeightedCliqueGraph { nodes, edges })
}

/// Streams every maximum-weight spanning tree of a weighted graph once.
///
/// Starts from a greedy (Kruskal) maximum tree, then explores breadth first:
/// the neighbors of a tree are all trees obtained by adding a non-tree edge
/// and removing an equal-weight edge of the cycle it closes. Trees are
/// identified by their sorted edge indices.
pub struct MaxSpanningTrees {
    k: usize,
    edges: Vec<(usize, usize, usize)>,
    queue: VecDeque<Vec<usize>>,
    seen: HashSet<Vec<usize>>,
}

impl MaxSpanningTrees {
    /// `k` nodes, edges `(i, j, weight)`.
    pub fn new(k: usize, edges: Vec<(usize, usize, usize)>) -> Result<Self> {
        let mut order: Vec<usize> = (0..edges.len()).collect();
        order.sort_by(|&a, &b| edges[b].2.cmp(&edges[a].2).then(a.cmp(&b)));
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut tree = Vec::new();
        for e in order {
            let (a, b, _) = edges[e];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                tree.push(e);
            }
        }
        if k > 0 && tree.len() != k - 1 {
            return Err(Error::Disconnected { components: k - tree.len() });
        }
        tree.sort_unstable();
        let seen = HashSet::from([tree.clone()]);
        Ok(MaxSpanningTrees { k, edges, queue: VecDeque::from([tree]), seen })
    }

    /// Tree edges of `tree` on the path between nodes `from` and `to`.
    fn path_edges(&self, tree: &[usize], from: usize, to: usize) -> Vec<usize> {
        let mut adj = vec![Vec::new(); self.k];
        for &e in tree {
            let (a, b, _) = self.edges[e];
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
        let mut via = vec![None; self.k];
        let mut visited = vec![false; self.k];
        visited[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            for &(y, e) in &adj[x] {
                if !visited[y] {
                    visited[y] = true;
                    via[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
        let mut out = Vec::new();
        let mut x = to;
        while let Some((prev, e)) = via[x] {
            out.push(e);
            x = prev;
        }
        out
    }

    fn as_pairs(&self, tree: &[usize]) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = tree
            .iter()
            .map(|&e| (self.edges[e].0.min(self.edges[e].1), self.edges[e].0.max(self.edges[e].1)))
            .collect();
        pairs.sort_unstable();
        pairs
    }
}

impl Iterator for MaxSpanningTrees {
    type Item = Vec<(usize, usize)>;

    fn next(&mut self) -> Option<Self::Item> {
        let tree = self.queue.pop_front()?;
        let in_tree: HashSet<usize> = tree.iter().copied().collect();
        for e in 0..self.edges.len() {
            if in_tree.contains(&e) {
                continue;
            }
            let (a, b, w) = self.edges[e];
            for f in self.path_edges(&tree, a, b) {
                if self.edges[f].2 != w {
                    continue;
                }
                let mut swapped: Vec<usize> = tree.iter().copied().filter(|&x| x != f).collect();
                swapped.push(e);
                swapped.sort_unstable();
                if self.seen.insert(swapped.clone()) {
                    self.queue.push_back(swapped);
                }
            }
        }
        Some(self.as_pairs(&tree))
    }
}

pub fn enum_max_spanning_trees(wg: &WeightedCliqueGraph) -> Result<MaxSpanningTrees> {
    MaxSpanningTrees::new(wg.nodes.len(), wg.edges.clone())
}

/// Streams proper tree decompositions of a connected graph: for each minimal
/// triangulation in enumeration order, one decomposition per maximum-weight
/// spanning tree of its clique graph.
pub struct ProperTreeDecompositions {
    n: usize,
    triangulations: MinTriangulations,
    current: Option<(Vec<VertexSet>, MaxSpanningTrees)>,
    failed: bool,
}

impl ProperTreeDecompositions {
    pub fn triangulations(&self) -> &MinTriangulations {
        &self.triangulations
    }

    fn advance(&mut self) -> Result<Option<TreeDecomposition>> {
        loop {
            if let Some((bags, trees)) = self.current.as_mut() {
                if let Some(edges) = trees.next() {
                    return Ok(Some(TreeDecomposition::new(self.n, bags.clone(), edges)));
                }
                self.current = None;
            }
            let Some(t) = self.triangulations.next() else {
                return Ok(None);
            };
            let wg = clique_graph(t?.chordal_graph())?;
            let trees = enum_max_spanning_trees(&wg)?;
            self.current = Some((wg.nodes, trees));
        }
    }
}

impl Iterator for ProperTreeDecompositions {
    type Item = Result<TreeDecomposition>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        match self.advance() {
            Ok(d) => d.map(Ok),
            Err(e) => {
                self.failed = true;
                Some(Err(e))
            }
        }
    }
}

pub fn enum_proper_tds(g: &Graph, extender: Extender) -> Result<ProperTreeDecompositions> {
    Ok(ProperTreeDecompositions {
        n: g.n(),
        triangulations: enum_min_triangulations(g, extender)?,
        current: None,
        failed: false,
    })
}
