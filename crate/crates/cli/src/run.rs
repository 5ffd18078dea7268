use std::fs;
use std::io::{Read, Write};
use std::time::{Duration, Instant};

use mintri::{
    connected_components, enum_min_seps, enum_min_triangulations, enum_proper_tds, induced_subgraph,
    max_cliques_chordal, Graph, Subgraph, VertexSet,
};
use serde_json::{json, Value};

use crate::parse::{parse_graph, LabeledGraph};
use crate::{CliError, Command, Input, OutputFormat, RunConfig};

/// Runs one command, writing answers to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run(config: &RunConfig, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(config, stdin, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let code = e.exit_code();
            if code != 0 {
                let _ = writeln!(err, "mintri: {e}");
            }
            code
        }
    }
}

/// A connected piece of the input with the map back to input ids.
struct Job {
    component: Option<usize>,
    graph: Graph,
    ids: Vec<usize>,
}

fn jobs(graph: &Graph, per_component: bool) -> Result<Vec<Job>, CliError> {
    if graph.is_connected() {
        return Ok(vec![Job { component: None, graph: graph.clone(), ids: (0..graph.n()).collect() }]);
    }
    let comps = connected_components(graph);
    if !per_component {
        return Err(CliError::Disconnected { components: comps.len() });
    }
    comps
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let Subgraph { graph, ids } = induced_subgraph(graph, c)?;
            Ok(Job { component: Some(i), graph, ids })
        })
        .collect()
}

fn execute(config: &RunConfig, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    if config.output == OutputFormat::Dot && matches!(config.command, Command::Minseps | Command::Stats) {
        return Err(CliError::Usage(
            "--output dot is only available for triangulations, treedecomps and crossgraph".into(),
        ));
    }
    let bytes = match &config.input {
        Input::Stdin => {
            let mut buf = Vec::new();
            stdin.read_to_end(&mut buf)?;
            buf
        }
        Input::Path(p) => fs::read(p).map_err(|source| CliError::Open { path: p.clone(), source })?,
    };
    let labeled = parse_graph(&bytes, config.format)?;
    let mut sink = Sink {
        out,
        output: config.output,
        labeled: &labeled,
        index: 0,
        limit: config.limit,
        delays: Vec::new(),
        clock: Instant::now(),
    };
    let mut extender_calls = 0;
    for job in jobs(&labeled.graph, config.per_component)? {
        if sink.full() {
            break;
        }
        match config.command {
            Command::Minseps => {
                for s in enum_min_seps(&job.graph)? {
                    if !sink.minsep(&job, s.vertices())? {
                        break;
                    }
                }
            }
            Command::Triangulations => {
                let mut it = enum_min_triangulations(&job.graph, config.extender)?;
                for t in it.by_ref() {
                    if !sink.triangulation(&job, &t?)? {
                        break;
                    }
                }
                extender_calls += it.stats().extender_calls;
            }
            Command::Treedecomps => {
                let mut it = enum_proper_tds(&job.graph, config.extender)?;
                for d in it.by_ref() {
                    if !sink.decomposition(&job, &d?)? {
                        break;
                    }
                }
                extender_calls += it.triangulations().stats().extender_calls;
            }
            Command::Crossgraph => sink.crossgraph(&job, config.crossgraph_limit)?,
            Command::Stats => sink.stats(&job, config)?,
        }
    }
    if config.delay_stats && config.command != Command::Stats {
        let mut summary = delay_summary(&sink.delays);
        summary["answers"] = json!(sink.index);
        if matches!(config.command, Command::Triangulations | Command::Treedecomps) {
            summary["extender_calls"] = json!(extender_calls);
        }
        writeln!(err, "{summary}")?;
    }
    Ok(())
}

fn percentile(sorted: &[Duration], p: f64) -> f64 {
    if sorted.is_empty() {
        return 0.0;
    }
    let rank = ((p * sorted.len() as f64).ceil() as usize).clamp(1, sorted.len());
    sorted[rank - 1].as_secs_f64() * 1e6
}

fn delay_summary(delays: &[Duration]) -> Value {
    let mut sorted = delays.to_vec();
    sorted.sort_unstable();
    json!({
        "delay_us": {
            "p50": percentile(&sorted, 0.5),
            "p90": percentile(&sorted, 0.9),
            "p99": percentile(&sorted, 0.99),
            "max": percentile(&sorted, 1.0),
        }
    })
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

struct Sink<'a> {
    out: &'a mut dyn Write,
    output: OutputFormat,
    labeled: &'a LabeledGraph,
    index: usize,
    limit: Option<usize>,
    delays: Vec<Duration>,
    clock: Instant,
}

impl Sink<'_> {
    fn full(&self) -> bool {
        self.limit.is_some_and(|l| self.index >= l)
    }

    fn label(&self, job: &Job, v: usize) -> &str {
        self.labeled.label(job.ids[v])
    }

    fn labels(&self, job: &Job, set: &VertexSet) -> String {
        set.iter().map(|v| self.label(job, v)).collect::<Vec<_>>().join(" ")
    }

    fn ids(job: &Job, set: &VertexSet) -> Vec<usize> {
        set.iter().map(|v| job.ids[v]).collect()
    }

    /// Writes one answer and flushes. Returns whether more answers are wanted.
    fn emit(&mut self, job: &Job, kind: &str, answer: Value, text: String) -> Result<bool, CliError> {
        let now = Instant::now();
        self.delays.push(now - self.clock);
        match self.output {
            OutputFormat::Jsonl => {
                let mut line = json!({ "kind": kind, "answer": answer, "index": self.index });
                if let Some(c) = job.component {
                    line["component"] = json!(c);
                }
                writeln!(self.out, "{line}")?;
            }
            OutputFormat::Plain | OutputFormat::Dot => match job.component {
                Some(c) if self.output == OutputFormat::Plain => writeln!(self.out, "[{c}] {text}")?,
                _ => writeln!(self.out, "{text}")?,
            },
        }
        self.out.flush()?;
        self.index += 1;
        self.clock = Instant::now();
        Ok(!self.full())
    }

    fn dot_name(&self, job: &Job, kind: &str) -> String {
        match job.component {
            Some(c) => format!("{kind}_{}_c{c}", self.index),
            None => format!("{kind}_{}", self.index),
        }
    }

    fn minsep(&mut self, job: &Job, s: &VertexSet) -> Result<bool, CliError> {
        let text = self.labels(job, s);
        self.emit(job, "minsep", json!(Self::ids(job, s)), text)
    }

    fn triangulation(&mut self, job: &Job, t: &mintri::Triangulation) -> Result<bool, CliError> {
        let fill: Vec<(usize, usize)> = t.fill_edges().iter().map(|&(u, v)| (job.ids[u], job.ids[v])).collect();
        let edges = t.chordal_graph().edge_count();
        let text = match self.output {
            OutputFormat::Dot => {
                let mut s = format!("graph {} {{\n", self.dot_name(job, "triangulation"));
                for v in 0..job.graph.n() {
                    s += &format!("  {};\n", dot_quote(self.label(job, v)));
                }
                for (u, v) in t.chordal_graph().edges() {
                    let style = if job.graph.has_edge(u, v) { "" } else { " [style=dashed]" };
                    s += &format!("  {} -- {}{style};\n", dot_quote(self.label(job, u)), dot_quote(self.label(job, v)));
                }
                s + "}"
            }
            _ => {
                let pairs: Vec<String> = t
                    .fill_edges()
                    .iter()
                    .map(|&(u, v)| format!("{}-{}", self.label(job, u), self.label(job, v)))
                    .collect();
                format!("fill: {} | edges: {edges}", if pairs.is_empty() { "-".into() } else { pairs.join(" ") })
            }
        };
        self.emit(job, "triangulation", json!({ "fill": fill, "edges": edges }), text)
    }

    fn decomposition(&mut self, job: &Job, d: &mintri::TreeDecomposition) -> Result<bool, CliError> {
        let bags: Vec<Vec<usize>> = d.bags.iter().map(|b| Self::ids(job, b)).collect();
        let text = match self.output {
            OutputFormat::Dot => {
                let mut s = format!("graph {} {{\n", self.dot_name(job, "td"));
                for (i, b) in d.bags.iter().enumerate() {
                    s += &format!("  n{i} [label={}];\n", dot_quote(&self.labels(job, b)));
                }
                for &(i, j) in &d.edges {
                    s += &format!("  n{i} -- n{j};\n");
                }
                s + "}"
            }
            _ => {
                let bags: Vec<String> = d.bags.iter().map(|b| format!("{{{}}}", self.labels(job, b))).collect();
                let tree: Vec<String> = d.edges.iter().map(|(i, j)| format!("{i}-{j}")).collect();
                format!(
                    "bags: {} | tree: {}",
                    bags.join(" "),
                    if tree.is_empty() { "-".into() } else { tree.join(" ") }
                )
            }
        };
        self.emit(job, "treedecomp", json!({ "bags": bags, "tree": d.edges }), text)
    }

    fn crossgraph(&mut self, job: &Job, limit: usize) -> Result<(), CliError> {
        let mut nodes: Vec<VertexSet> = Vec::new();
        for s in enum_min_seps(&job.graph)? {
            if nodes.len() == limit {
                return Err(CliError::Guard(format!(
                    "separator graph has more than {limit} nodes; raise {} to allow more",
                    crate::CROSSGRAPH_LIMIT_VAR
                )));
            }
            nodes.push(s.into_vertices());
        }
        nodes.sort();
        let mut edges = Vec::new();
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                if mintri::crosses(&job.graph, &nodes[i], &nodes[j])? {
                    edges.push((i, j));
                }
            }
        }
        let text = match self.output {
            OutputFormat::Dot => {
                let mut s = format!("graph {} {{\n", self.dot_name(job, "crossgraph"));
                for (i, n) in nodes.iter().enumerate() {
                    s += &format!("  s{i} [label={}];\n", dot_quote(&self.labels(job, n)));
                }
                for (i, j) in &edges {
                    s += &format!("  s{i} -- s{j};\n");
                }
                s + "}"
            }
            _ => {
                let names: Vec<String> = nodes.iter().map(|n| format!("{{{}}}", self.labels(job, n))).collect();
                let pairs: Vec<String> = edges.iter().map(|&(i, j)| format!("{}~{}", names[i], names[j])).collect();
                format!(
                    "nodes: {} | crossing: {}",
                    names.join(" "),
                    if pairs.is_empty() { "-".into() } else { pairs.join(" ") }
                )
            }
        };
        let answer = json!({
            "nodes": nodes.iter().map(|n| Self::ids(job, n)).collect::<Vec<_>>(),
            "edges": edges,
        });
        self.emit(job, "crossgraph", answer, text)?;
        Ok(())
    }

    fn stats(&mut self, job: &Job, config: &RunConfig) -> Result<(), CliError> {
        let separators = enum_min_seps(&job.graph)?.count();
        let mut it = enum_min_triangulations(&job.graph, config.extender)?;
        let (mut triangulations, mut treewidth, mut min_fill) = (0usize, usize::MAX, usize::MAX);
        let mut truncated = false;
        while let Some(t) = it.next() {
            let t = t?;
            triangulations += 1;
            let width = max_cliques_chordal(t.chordal_graph())?.iter().map(|c| c.len()).max().unwrap_or(1) - 1;
            treewidth = treewidth.min(width);
            min_fill = min_fill.min(t.fill_edges().len());
            if config.limit.is_some_and(|l| triangulations >= l) {
                truncated = it.next().is_some();
                break;
            }
        }
        let mut answer = json!({
            "vertices": job.graph.n(),
            "edges": job.graph.edge_count(),
            "minimal_separators": separators,
            "minimal_triangulations": triangulations,
            "treewidth": treewidth,
            "min_fill": min_fill,
            "truncated": truncated,
        });
        if config.delay_stats {
            let stats = it.stats();
            answer["extender_calls"] = json!(stats.extender_calls);
            answer["nodes_pulled"] = json!(stats.nodes_pulled);
            answer["delay_us"] = delay_summary(&stats.delays)["delay_us"].clone();
        }
        let text = answer
            .as_object()
            .expect("object literal")
            .iter()
            .map(|(k, v)| format!("{k}: {v}"))
            .collect::<Vec<_>>()
            .join("\n");
        let saved = self.limit.take();
        self.emit(job, "stats", answer, text)?;
        self.limit = saved;
        Ok(())
    }
}
