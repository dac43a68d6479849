//! JSON and DOT serialization of graphs.
//!
//! The JSON form is `{"n":<int>,"edges":[[a,b],...]}` with `a < b` and edges
//! in lexicographic order, so equal graphs serialize to identical bytes.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::chromatic::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.n(),
        edges: g.edges().map(|(a, b)| [a, b]).collect(),
    };
    serde_json::to_string(&doc).expect("graph json is always serializable")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_str(text)?;
    Graph::from_edges(doc.n, doc.edges.into_iter().map(|[a, b]| (a, b)))
}

/// JSON array of `[a, b]` pairs, for edge sets that are not whole graphs.
pub fn edges_to_json(edges: &[(usize, usize)]) -> String {
    let pairs: Vec<[usize; 2]> = edges.iter().map(|&(a, b)| [a, b]).collect();
    serde_json::to_string(&pairs).expect("edge list is always serializable")
}

/// Undirected DOT. With a coloring, each vertex line carries a `color=`
/// attribute from the 12-color `set312` Brewer scheme plus the raw index as
/// its label.
pub fn to_dot(g: &Graph, coloring: Option<&Coloring>) -> Result<String> {
    if let Some(c) = coloring {
        if c.len() != g.n() {
            return Err(Error::PartialColoring {
                colored: c.len(),
                n: g.n(),
            });
        }
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match coloring {
            Some(c) => {
                let col = c.color(v);
                writeln!(
                    out,
                    "  {v} [colorscheme=set312, style=filled, color={}, xlabel=\"{col}\"];",
                    col % 12 + 1
                )
                .unwrap();
            }
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_is_byte_stable() {
        let g = Graph::from_edges(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(to_json(&g), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
    }

    #[test]
    fn json_rejects_invalid_edges() {
        assert!(from_json(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
        assert!(from_json(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
        assert!(from_json("not json").is_err());
    }

    #[test]
    fn dot_lists_vertices_then_edges() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            to_dot(&g, None).unwrap(),
            "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n}\n"
        );
        let c = Coloring::new(vec![0, 1, 0], 2).unwrap();
        let dot = to_dot(&g, Some(&c)).unwrap();
        assert!(dot.contains("  1 [colorscheme=set312, style=filled, color=2, xlabel=\"1\"];"));
        let short = Coloring::new(vec![0], 1).unwrap();
        assert!(to_dot(&g, Some(&short)).is_err());
    }
}
