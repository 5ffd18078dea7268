//! Brute-force reference implementations used to validate the `mintri`
//! enumerators on small graphs.
//!
//! Nothing here calls into the algorithms under test: only `Graph` and
//! `VertexSet` are shared. Every routine refuses inputs above a hard size
//! guard instead of running for hours.

use std::collections::BTreeSet;

use mintri::{Graph, VertexSet};
use thiserror::Error;

pub mod corpus;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{what}: size {actual} exceeds the oracle guard {limit}")]
pub struct SizeGuard {
    pub what: &'static str,
    pub limit: usize,
    pub actual: usize,
}

fn guard(what: &'static str, actual: usize, limit: usize) -> Result<(), SizeGuard> {
    if actual > limit {
        Err(SizeGuard { what, limit, actual })
    } else {
        Ok(())
    }
}

/// Fill-edge set of a triangulation, pairs `(u, v)` with `u < v`, sorted.
pub type FillSet = Vec<(usize, usize)>;

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n()).map(|u| (0..g.n()).filter(|&v| g.has_edge(u, v)).fold(0, |m, v| m | 1 << v)).collect()
}

fn to_set(mask: u32) -> VertexSet {
    (0..32).filter(|v| mask >> v & 1 == 1).collect()
}

/// Vertices reachable from `start` without entering `blocked`.
fn reach(adj: &[u32], start: usize, blocked: u32) -> u32 {
    let mut seen = 1u32 << start;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        let mut next = adj[x] & !blocked & !seen;
        seen |= next;
        while next != 0 {
            let y = next.trailing_zeros() as usize;
            next &= next - 1;
            stack.push(y);
        }
    }
    seen
}

/// Searches directly for a chordless cycle on four or more vertices.
pub fn brute_is_chordal(g: &Graph) -> Result<bool, SizeGuard> {
    guard("brute_is_chordal vertices", g.n(), 10)?;
    let adj = masks(g);
    // Cycles are rooted at their smallest vertex.
    fn extend(adj: &[u32], path: &mut Vec<usize>) -> bool {
        let root = path[0];
        let last = *path.last().unwrap();
        let inner: u32 = path[1..path.len() - 1].iter().fold(0, |m, &v| m | 1 << v);
        for x in 0..adj.len() {
            if x <= root || path.contains(&x) || adj[last] >> x & 1 == 0 || adj[x] & inner != 0 {
                continue;
            }
            if adj[x] >> root & 1 == 1 {
                if path.len() >= 3 {
                    return true;
                }
                continue;
            }
            path.push(x);
            if extend(adj, path) {
                return true;
            }
            path.pop();
        }
        false
    }
    for root in 0..g.n() {
        for first in 0..g.n() {
            if first > root && adj[root] >> first & 1 == 1 && extend(&adj, &mut vec![root, first]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Chordality by repeatedly deleting a simplicial vertex.
fn chordal_by_simplicial(adj: &[u32]) -> bool {
    let mut alive: u32 = if adj.len() == 32 { u32::MAX } else { (1 << adj.len()) - 1 };
    while alive != 0 {
        let simplicial = (0..adj.len()).find(|&v| {
            if alive >> v & 1 == 0 {
                return false;
            }
            let nb = adj[v] & alive;
            (0..adj.len()).all(|u| nb >> u & 1 == 0 || (adj[u] | 1 << u) & nb == nb)
        });
        match simplicial {
            Some(v) => alive &= !(1 << v),
            None => return false,
        }
    }
    true
}

/// Every minimal `(u, v)`-separator for every non-adjacent pair, by trying all
/// subsets.
pub fn brute_min_seps(g: &Graph) -> Result<BTreeSet<VertexSet>, SizeGuard> {
    let n = g.n();
    guard("brute_min_seps vertices", n, 10)?;
    let adj = masks(g);
    let mut out = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] >> v & 1 == 1 {
                continue;
            }
            let others: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
            for pick in 0u32..1 << others.len() {
                let s: u32 =
                    others.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).fold(0, |m, (_, &x)| m | 1 << x);
                let separates = |s: u32| reach(&adj, u, s) >> v & 1 == 0;
                if separates(s) && (0..n).all(|x| s >> x & 1 == 0 || !separates(s & !(1 << x))) {
                    out.insert(to_set(s));
                }
            }
        }
    }
    Ok(out)
}

/// True when `t` has two vertices outside `s` that `s` separates.
pub fn brute_crosses(g: &Graph, s: &VertexSet, t: &VertexSet) -> bool {
    let adj = masks(g);
    let blocked = s.iter().fold(0u32, |m, v| m | 1 << v);
    let outside: Vec<usize> = t.iter().filter(|&v| !s.contains(v)).collect();
    outside.iter().any(|&a| outside.iter().any(|&b| reach(&adj, a, blocked) >> b & 1 == 0))
}

/// Minimal triangulations by trying every set of non-edges in order of size
/// and keeping the chordal ones that contain no smaller chordal fill.
pub fn brute_min_triangulations(g: &Graph) -> Result<BTreeSet<FillSet>, SizeGuard> {
    let n = g.n();
    guard("brute_min_triangulations vertices", n, 31)?;
    let non_edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
    let m = non_edges.len();
    guard("brute_min_triangulations non-edges", m, 21)?;
    let base = masks(g);
    let mut minimal: Vec<u32> = Vec::new();
    for size in 0..=m {
        for pick in subsets_of_size(m, size) {
            if minimal.iter().any(|&f| f & !pick == 0) {
                continue;
            }
            let mut adj = base.clone();
            for (i, &(u, v)) in non_edges.iter().enumerate() {
                if pick >> i & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
            if chordal_by_simplicial(&adj) {
                minimal.push(pick);
            }
        }
    }
    Ok(minimal.into_iter().map(|pick| (0..m).filter(|i| pick >> i & 1 == 1).map(|i| non_edges[i]).collect()).collect())
}

fn subsets_of_size(m: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit = 1u64 << m;
    let mut cur: u64 = if k == 0 { 0 } else { (1 << k) - 1 };
    let mut done = k > m;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur as u32;
        if k == 0 {
            done = true;
        } else {
            // Gosper's hack: next larger integer with the same popcount.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
            if cur >= limit {
                done = true;
            }
        }
        Some(out)
    })
}

/// Minimal triangulations as the inclusion-minimal fill sets of the
/// elimination game over all vertex orderings.
///
/// Every minimal triangulation is the elimination fill of one of its perfect
/// elimination orderings. The fill added when eliminating `v` after the set
/// `X` depends only on `X` and `v`, so orderings are explored as a walk over
/// subsets, keeping only inclusion-minimal partial fills per subset.
pub fn elimination_min_triangulations(g: &Graph) -> Result<BTreeSet<FillSet>, SizeGuard> {
    let n = g.n();
    guard("elimination_min_triangulations vertices", n, 16)?;
    let adj = masks(g);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let pair_index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    let full: usize = (1 << n) - 1;
    let mut states: Vec<Vec<u128>> = vec![Vec::new(); 1 << n];
    states[0].push(0);
    for x in 0..=full {
        if states[x].is_empty() {
            continue;
        }
        let fills = std::mem::take(&mut states[x]);
        if x == full {
            states[x] = fills;
            continue;
        }
        for v in (0..n).filter(|&v| x >> v & 1 == 0) {
            // Neighbors of v in the graph left after eliminating x.
            let eliminated = x as u32;
            let through = reach_through(&adj, v, eliminated);
            let mut extra: u128 = 0;
            let members: Vec<usize> = (0..n).filter(|&w| through >> w & 1 == 1).collect();
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    if adj[a] >> b & 1 == 0 {
                        extra |= 1 << pair_index(a, b);
                    }
                }
            }
            let target = x | 1 << v;
            for &f in &fills {
                insert_minimal(&mut states[target], f | extra);
            }
        }
    }
    Ok(states[full].iter().map(|&f| (0..pairs.len()).filter(|i| f >> i & 1 == 1).map(|i| pairs[i]).collect()).collect())
}

/// Uneliminated vertices joined to `v` by a path whose interior is eliminated.
fn reach_through(adj: &[u32], v: usize, eliminated: u32) -> u32 {
    let mut seen = 1u32 << v;
    let mut stack = vec![v];
    let mut found = 0u32;
    while let Some(x) = stack.pop() {
        let mut next = adj[x] & !seen;
        seen |= next;
        while next != 0 {
            let y = next.trailing_zeros() as usize;
            next &= next - 1;
            if eliminated >> y & 1 == 1 {
                stack.push(y);
            } else {
                found |= 1 << y;
            }
        }
    }
    found
}

fn insert_minimal(family: &mut Vec<u128>, f: u128) {
    if family.iter().any(|&g| g & !f == 0) {
        return;
    }
    family.retain(|&g| g & f != f);
    family.push(f);
}

/// Minimal triangulations via the subset oracle when its guard allows,
/// otherwise via the elimination-game oracle.
pub fn min_triangulations(g: &Graph) -> Result<BTreeSet<FillSet>, SizeGuard> {
    match brute_min_triangulations(g) {
        Err(_) => elimination_min_triangulations(g),
        ok => ok,
    }
}

/// All maximal independent sets by checking every vertex subset.
pub fn brute_max_independent_sets(g: &Graph) -> Result<BTreeSet<VertexSet>, SizeGuard> {
    guard("brute_max_independent_sets vertices", g.n(), 20)?;
    let adj = masks(g);
    let n = g.n();
    let mut out = BTreeSet::new();
    for s in 0u32..1 << n {
        let independent = (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0);
        let maximal = (0..n).all(|v| s >> v & 1 == 1 || adj[v] & s != 0);
        if independent && maximal {
            out.insert(to_set(s));
        }
    }
    Ok(out)
}

/// All maximal cliques by checking every vertex subset.
pub fn brute_max_cliques(g: &Graph) -> Result<BTreeSet<VertexSet>, SizeGuard> {
    guard("brute_max_cliques vertices", g.n(), 16)?;
    let adj = masks(g);
    let n = g.n();
    let mut out = BTreeSet::new();
    for s in 1u32..1 << n {
        let clique = (0..n).all(|v| s >> v & 1 == 0 || (adj[v] | 1 << v) & s == s);
        let maximal = (0..n).all(|v| s >> v & 1 == 1 || adj[v] & s != s);
        if clique && maximal {
            out.insert(to_set(s));
        }
    }
    Ok(out)
}

/// Every clique (not only maximal ones) of a small graph.
pub fn brute_cliques(g: &Graph) -> Result<Vec<VertexSet>, SizeGuard> {
    guard("brute_cliques vertices", g.n(), 12)?;
    let adj = masks(g);
    let n = g.n();
    Ok((1u32..1 << n).filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || (adj[v] | 1 << v) & s == s)).map(to_set).collect())
}

/// Maximum-weight spanning trees by trying every `k - 1` edge subset. Trees
/// are returned as sorted `(i, j)` pairs with `i < j`.
pub fn brute_max_spanning_trees(
    k: usize,
    edges: &[(usize, usize, usize)],
) -> Result<BTreeSet<Vec<(usize, usize)>>, SizeGuard> {
    guard("brute_max_spanning_trees nodes", k, 8)?;
    let mut best: Option<usize> = None;
    let mut out = BTreeSet::new();
    if k == 0 {
        return Ok(out);
    }
    let mut chosen = Vec::new();
    fn walk(
        k: usize,
        edges: &[(usize, usize, usize)],
        start: usize,
        chosen: &mut Vec<usize>,
        best: &mut Option<usize>,
        out: &mut BTreeSet<Vec<(usize, usize)>>,
    ) {
        if chosen.len() == k - 1 {
            let mut label: Vec<usize> = (0..k).collect();
            for &e in chosen.iter() {
                let (a, b) = (label[edges[e].0], label[edges[e].1]);
                if a == b {
                    return;
                }
                label.iter_mut().filter(|l| **l == a).for_each(|l| *l = b);
            }
            let w: usize = chosen.iter().map(|&e| edges[e].2).sum();
            let mut tree: Vec<(usize, usize)> =
                chosen.iter().map(|&e| (edges[e].0.min(edges[e].1), edges[e].0.max(edges[e].1))).collect();
            tree.sort_unstable();
            match *best {
                Some(b) if w < b => {}
                Some(b) if w == b => {
                    out.insert(tree);
                }
                _ => {
                    *best = Some(w);
                    out.clear();
                    out.insert(tree);
                }
            }
            return;
        }
        for e in start..edges.len() {
            chosen.push(e);
            walk(k, edges, e + 1, chosen, best, out);
            chosen.pop();
        }
    }
    walk(k, edges, 0, &mut chosen, &mut best, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4_chord() -> Graph {
        Graph::cycle(4).with_edge(0, 2).unwrap()
    }

    #[test]
    fn chordality_oracle_examples() {
        assert!(!brute_is_chordal(&Graph::cycle(4)).unwrap());
        assert!(brute_is_chordal(&c4_chord()).unwrap());
        assert!(!brute_is_chordal(&Graph::cycle(6)).unwrap());
        assert!(brute_is_chordal(&Graph::complete(5)).unwrap());
        assert!(brute_is_chordal(&Graph::star(4)).unwrap());
        assert!(brute_is_chordal(&Graph::complete(11)).is_err());
    }

    #[test]
    fn chordality_oracles_agree() {
        for g in corpus::all_graphs(5) {
            assert_eq!(brute_is_chordal(&g).unwrap(), chordal_by_simplicial(&masks(&g)), "{g:?}");
        }
    }

    #[test]
    fn separator_oracle_examples() {
        let set = |v: &[usize]| -> VertexSet { v.iter().copied().collect() };
        assert_eq!(brute_min_seps(&Graph::cycle(4)).unwrap(), BTreeSet::from([set(&[0, 2]), set(&[1, 3])]));
        assert_eq!(brute_min_seps(&Graph::path(4)).unwrap(), BTreeSet::from([set(&[1]), set(&[2])]));
        assert!(brute_min_seps(&Graph::complete(4)).unwrap().is_empty());
    }

    #[test]
    fn triangulation_oracle_examples() {
        assert_eq!(brute_min_triangulations(&Graph::cycle(4)).unwrap().len(), 2);
        assert_eq!(brute_min_triangulations(&Graph::cycle(5)).unwrap().len(), 5);
        let chordal = c4_chord();
        assert_eq!(brute_min_triangulations(&chordal).unwrap(), BTreeSet::from([Vec::new()]));
        assert!(brute_min_triangulations(&Graph::empty(8)).is_err());
    }

    #[test]
    fn triangulation_oracles_agree() {
        for g in corpus::all_connected_graphs(5) {
            assert_eq!(brute_min_triangulations(&g).unwrap(), elimination_min_triangulations(&g).unwrap());
        }
        assert_eq!(elimination_min_triangulations(&Graph::cycle(6)).unwrap().len(), 14);
        assert_eq!(elimination_min_triangulations(&Graph::cycle(7)).unwrap().len(), 42);
    }

    #[test]
    fn triangulation_oracle_results_are_minimal() {
        for g in corpus::all_connected_graphs(5) {
            for fill in brute_min_triangulations(&g).unwrap() {
                let mut h = g.clone();
                for &(u, v) in &fill {
                    h = h.with_edge(u, v).unwrap();
                }
                assert!(brute_is_chordal(&h).unwrap());
                for &(u, v) in &fill {
                    assert!(!brute_is_chordal(&h.without_edge(u, v).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn independent_set_oracle_examples() {
        let sets = |g: &Graph| brute_max_independent_sets(g).unwrap();
        assert_eq!(sets(&Graph::path(3)), BTreeSet::from([VertexSet::from([0, 2]), VertexSet::from([1])]));
        assert_eq!(sets(&Graph::cycle(5)).len(), 5);
        assert!(sets(&Graph::cycle(5)).iter().all(|s| s.len() == 2));
        assert_eq!(sets(&Graph::empty(3)), BTreeSet::from([VertexSet::from([0, 1, 2])]));
        assert_eq!(sets(&Graph::empty(0)), BTreeSet::from([VertexSet::new()]));
    }

    #[test]
    fn spanning_tree_oracle_examples() {
        let t = brute_max_spanning_trees(3, &[(0, 1, 1), (0, 2, 0), (1, 2, 1)]).unwrap();
        assert_eq!(t, BTreeSet::from([vec![(0, 1), (1, 2)]]));
        assert_eq!(brute_max_spanning_trees(3, &[(0, 1, 1), (0, 2, 1), (1, 2, 1)]).unwrap().len(), 3);
        assert_eq!(brute_max_spanning_trees(1, &[]).unwrap(), BTreeSet::from([Vec::new()]));
    }

    #[test]
    fn gosper_enumerates_binomials() {
        assert_eq!(subsets_of_size(5, 2).count(), 10);
        assert_eq!(subsets_of_size(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets_of_size(5, 5).count(), 1);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
    }
}
