#![allow(dead_code)]

use std::collections::BTreeSet;

use mintri::{Extender, Graph, Separator, VertexSet};
use mintri_oracle::{corpus, FillSet};

pub const EXTENDERS: [Extender; 2] = [Extender::BlackBox, Extender::Separator];

/// Connected graphs on up to five vertices plus a fixed random sample on six
/// to nine vertices.
pub fn corpus() -> Vec<Graph> {
    let mut all = corpus::exhaustive_small();
    all.extend(corpus::random_corpus(200, 6..=9, 0x5eed));
    all
}

pub fn seps(g: &Graph) -> BTreeSet<VertexSet> {
    mintri::enum_min_seps(g).unwrap().map(Separator::into_vertices).collect()
}

pub fn vertex_sets<'a>(it: impl IntoIterator<Item = &'a Separator>) -> BTreeSet<VertexSet> {
    it.into_iter().map(|s| s.vertices().clone()).collect()
}

pub fn triangulations(g: &Graph, e: Extender) -> Vec<FillSet> {
    mintri::enum_min_triangulations(g, e).unwrap().map(|t| t.unwrap().fill_edges().to_vec()).collect()
}

pub fn graph_with(g: &Graph, fill: &[(usize, usize)]) -> Graph {
    fill.iter().fold(g.clone(), |h, &(u, v)| h.with_edge(u, v).unwrap())
}
