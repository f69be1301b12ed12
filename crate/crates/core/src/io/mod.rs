//! Interchange formats: graph6, a plain edge list, and JSON certificate
//! documents.

mod document;
mod edgelist;
mod graph6;

pub use document::{emit_certificate, parse_certificate, CertificateDocument};
pub use edgelist::{emit_edge_list, parse_edge_list};
pub use graph6::{emit_graph6, parse_graph6};

use crate::graph::Graph;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

pub fn parse_graph(text: &[u8], format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => parse_graph6(text),
        GraphFormat::EdgeList => {
            let text = std::str::from_utf8(text).map_err(|e| crate::Error::Parse {
                offset: e.valid_up_to(),
                message: "edge list is not UTF-8".into(),
            })?;
            parse_edge_list(text)
        }
    }
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> Vec<u8> {
    match format {
        GraphFormat::Graph6 => {
            let mut out = emit_graph6(g);
            out.push(b'\n');
            out
        }
        GraphFormat::EdgeList => emit_edge_list(g).into_bytes(),
    }
}
