//! DOT, GraphML and adjacency-CSV interchange.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::Read;

use serde::Deserialize;

use super::BallGraph;
use crate::error::Result;

#[derive(Deserialize)]
struct EdgeRow {
    u: String,
    v: String,
}

/// Vertex labels and index pairs.
pub type EdgeList = (Vec<String>, Vec<(usize, usize)>);

/// Reads an edge list with header `u,v`. Vertex labels keep first-seen order.
pub fn read_adjacency_csv<R: Read>(reader: R) -> Result<EdgeList> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let mut labels = Vec::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut id = |s: String, labels: &mut Vec<String>| {
        *ids.entry(s.clone()).or_insert_with(|| {
            labels.push(s);
            labels.len() - 1
        })
    };
    for row in rdr.deserialize() {
        let row: EdgeRow = row?;
        let u = id(row.u, &mut labels);
        let v = id(row.v, &mut labels);
        edges.push((u, v));
    }
    Ok((labels, edges))
}

fn escape_xml(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

impl BallGraph {
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", name.replace('"', "'"));
        for v in self.vertices() {
            let shape = if v == self.basepoint() { ", shape=doublecircle" } else { "" };
            let _ = writeln!(out, "  {} [label=\"{}\"{}];", v.0, self.label(v).replace('"', "'"), shape);
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {} -- {};", u.0, v.0);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_graphml(&self) -> String {
        let mut out = String::from(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
             <graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n  \
             <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n  \
             <key id=\"depth\" for=\"node\" attr.name=\"depth\" attr.type=\"int\"/>\n  \
             <graph id=\"G\" edgedefault=\"undirected\">\n",
        );
        for v in self.vertices() {
            let _ = writeln!(
                out,
                "    <node id=\"n{}\"><data key=\"label\">{}</data><data key=\"depth\">{}</data></node>",
                v.0,
                escape_xml(self.label(v)),
                self.depth(v)
            );
        }
        for (i, (u, v)) in self.edges().enumerate() {
            let _ = writeln!(out, "    <edge id=\"e{}\" source=\"n{}\" target=\"n{}\"/>", i, u.0, v.0);
        }
        out.push_str("  </graph>\n</graphml>\n");
        out
    }

    /// Edge list in the same `u,v` format `read_adjacency_csv` accepts.
    pub fn to_adjacency_csv(&self) -> String {
        let mut out = String::from("u,v\n");
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{},{}", self.label(u), self.label(v));
        }
        out
    }
}
