//! Graph ingestion: DIMACS, whitespace edge lists and a small JSON schema.

use std::collections::{BTreeSet, HashMap};

use mintri::Graph;
use serde::Deserialize;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Dimacs,
    Edgelist,
    Json,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("line {line}: malformed header: {reason}")]
    Header { line: usize, reason: String },
    #[error("line {line}: malformed line: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: edge before `p edge` header")]
    MissingHeader { line: usize },
    #[error("line {line}: endpoint {vertex} out of range for {n} vertices")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop on {label}")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: duplicate edge {a} {b}")]
    Duplicate { line: usize, a: String, b: String },
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("input is not valid UTF-8")]
    Encoding,
}

/// A parsed graph with the external label of each internal vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }
}

pub fn parse_graph(bytes: &[u8], format: InputFormat) -> Result<LabeledGraph, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|_| ParseError::Encoding)?;
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    match format {
        InputFormat::Dimacs => parse_dimacs(text),
        InputFormat::Edgelist => parse_edgelist(text),
        InputFormat::Json => parse_json(text),
    }
}

/// Collects edges, rejecting loops and repeats with the offending line.
struct EdgeSink {
    seen: BTreeSet<(usize, usize)>,
}

impl EdgeSink {
    fn new() -> Self {
        EdgeSink { seen: BTreeSet::new() }
    }

    fn push(&mut self, line: usize, u: usize, v: usize, labels: &[String]) -> Result<(), ParseError> {
        if u == v {
            return Err(ParseError::SelfLoop { line, label: labels[u].clone() });
        }
        if !self.seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::Duplicate { line, a: labels[u].clone(), b: labels[v].clone() });
        }
        Ok(())
    }

    fn into_graph(self, n: usize) -> Graph {
        Graph::from_edges(n, self.seen).expect("edges validated while parsing")
    }
}

fn parse_dimacs(text: &str) -> Result<LabeledGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut labels = Vec::new();
    let mut sink = EdgeSink::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(ParseError::Header { line, reason: "repeated header".into() });
                }
                let [_, kind, n, m] = tokens[..] else {
                    return Err(ParseError::Header { line, reason: "expected `p edge <n> <m>`".into() });
                };
                if kind != "edge" && kind != "col" {
                    return Err(ParseError::Header { line, reason: format!("unknown problem `{kind}`") });
                }
                let num = |s: &str| {
                    s.parse::<usize>().map_err(|_| ParseError::Header { line, reason: format!("`{s}` is not a count") })
                };
                let (n, m) = (num(n)?, num(m)?);
                labels = (1..=n).map(|v| v.to_string()).collect();
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(ParseError::MissingHeader { line });
                };
                let [_, a, b] = tokens[..] else {
                    return Err(ParseError::Malformed { line, reason: "expected `e <u> <v>`".into() });
                };
                let endpoint = |s: &str| -> Result<usize, ParseError> {
                    let v = s
                        .parse::<usize>()
                        .map_err(|_| ParseError::Malformed { line, reason: format!("`{s}` is not a vertex") })?;
                    if v == 0 || v > n {
                        return Err(ParseError::OutOfRange { line, vertex: v, n });
                    }
                    Ok(v - 1)
                };
                sink.push(line, endpoint(a)?, endpoint(b)?, &labels)?;
            }
            Some(other) => {
                return Err(ParseError::Malformed { line, reason: format!("unknown line type `{other}`") });
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(ParseError::Header { line: 1, reason: "missing `p edge` header".into() });
    };
    if sink.seen.len() != m {
        return Err(ParseError::EdgeCount { declared: m, found: sink.seen.len() });
    }
    if n == 0 {
        return Err(ParseError::Empty);
    }
    Ok(LabeledGraph { graph: sink.into_graph(n), labels })
}

/// One `u v` pair per line; a lone token declares an isolated vertex. Lines
/// starting with `#` are comments.
fn parse_edgelist(text: &str) -> Result<LabeledGraph, ParseError> {
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut sink = EdgeSink::new();
    let mut intern = |label: &str, labels: &mut Vec<String>| {
        *ids.entry(label.to_string()).or_insert_with(|| {
            labels.push(label.to_string());
            labels.len() - 1
        })
    };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens[..] {
            [] => {}
            [first, ..] if first.starts_with('#') => {}
            [single] => {
                intern(single, &mut labels);
            }
            [a, b] => {
                let (u, v) = (intern(a, &mut labels), intern(b, &mut labels));
                sink.push(line, u, v, &labels)?;
            }
            _ => {
                return Err(ParseError::Malformed { line, reason: "expected one or two labels".into() });
            }
        }
    }
    if labels.is_empty() {
        return Err(ParseError::Empty);
    }
    let n = labels.len();
    Ok(LabeledGraph { graph: sink.into_graph(n), labels })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// `{"n": 4, "edges": [[0, 1], ...]}` with 0-based endpoints. Diagnostics
/// report the 1-based position of the edge in the array as the line.
fn parse_json(text: &str) -> Result<LabeledGraph, ParseError> {
    let parsed: JsonGraph = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    if parsed.n == 0 {
        return Err(ParseError::Empty);
    }
    let labels: Vec<String> = (0..parsed.n).map(|v| v.to_string()).collect();
    let mut sink = EdgeSink::new();
    for (i, &(u, v)) in parsed.edges.iter().enumerate() {
        for x in [u, v] {
            if x >= parsed.n {
                return Err(ParseError::OutOfRange { line: i + 1, vertex: x, n: parsed.n });
            }
        }
        sink.push(i + 1, u, v, &labels)?;
    }
    Ok(LabeledGraph { graph: sink.into_graph(parsed.n), labels })
}
