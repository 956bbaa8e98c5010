//! Graphviz DOT output.

use std::fmt::Write;

use crate::graph::Graph;

/// Renders `g` as an undirected DOT graph. Vertices are emitted in ascending
/// order and edges lexicographically; `labels[v]`, when given, becomes the
/// node label of `v`.
pub fn emit_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        match labels.and_then(|l| l.get(v)) {
            Some(name) => writeln!(out, "  {v} [label=\"{}\"];", escape(name)),
            None => writeln!(out, "  {v};"),
        }
        .unwrap();
    }
    for e in g.edges() {
        writeln!(out, "  {} -- {};", e.u, e.v).unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
