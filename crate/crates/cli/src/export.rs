use std::io::{self, Write};

use orthograph::bits::binary_name;
use orthograph::graph::{DenseGraph, Graph};
use serde_json::json;

use crate::Format;

/// A materialized graph with the naming scheme of its vertices.
pub struct Named {
    pub name: String,
    pub k: u32,
    pub graph: DenseGraph,
}

impl Named {
    pub fn vertex_name(&self, v: usize) -> String {
        binary_name(v as u64, self.k)
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Edgelist => self.graph.write_edge_list(&mut { out }),
            Format::Dot => self.graph.write_dot(&mut { out }, &self.name, |v| self.vertex_name(v)),
            Format::Json => {
                let edges: Vec<[usize; 2]> = self.graph.edges().map(|(u, v)| [u, v]).collect();
                let names: Vec<String> = (0..self.graph.order()).map(|v| self.vertex_name(v)).collect();
                let doc = json!({ "name": self.name, "k": self.k, "vertices": names, "edges": edges });
                serde_json::to_writer_pretty(&mut *out, &doc)?;
                writeln!(out)
            }
            Format::Text => {
                let degree = match self.graph.regular_degree() {
                    Some(d) => format!("{d}-regular"),
                    None => "irregular".to_string(),
                };
                writeln!(
                    out,
                    "{}: {} vertices, {} edges, {}, {} components",
                    self.name,
                    self.graph.order(),
                    self.graph.edge_count(),
                    degree,
                    self.graph.components().len()
                )
            }
        }
    }

    pub fn file_name(&self, format: Format) -> String {
        let ext = match format {
            Format::Edgelist => "edges",
            Format::Dot => "dot",
            Format::Json => "json",
            Format::Text => "txt",
        };
        format!("{}.{ext}", self.name)
    }
}
