//! Text and structured (JSON) formats for complexes and graphs.
//!
//! Complex text format: one facet per line, labels separated by whitespace.
//! A line `∅` (or `empty`) is the empty facet and a file with no facet lines
//! is the void complex. An optional `vertices:` line declares vertices that
//! lie in no facet. `#` starts a comment.
//!
//! Graph text format: one edge `u v` per line, with isolated vertices declared
//! on a `vertices:` line.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

/// Non-blank, comment-stripped lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn vertices_header(line: &str) -> Option<&str> {
    line.strip_prefix("vertices:")
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut declared: Vec<String> = Vec::new();
    let mut faces: Vec<Vec<&str>> = Vec::new();
    for (no, line) in content_lines(text) {
        if let Some(rest) = vertices_header(line) {
            declared.extend(rest.split_whitespace().map(str::to_owned));
            continue;
        }
        if line.contains(':') {
            return Err(Error::Parse {
                line: no,
                message: format!("unexpected `{line}`"),
            });
        }
        let face: Vec<&str> = line.split_whitespace().collect();
        match face.as_slice() {
            ["∅"] | ["empty"] => faces.push(Vec::new()),
            _ => {
                if let Some(bad) = face.iter().find(|l| **l == "∅" || **l == "empty") {
                    return Err(Error::Parse {
                        line: no,
                        message: format!("`{bad}` must stand alone on its line"),
                    });
                }
                faces.push(face)
            }
        }
    }
    for l in faces.iter().flatten() {
        if !declared.iter().any(|d| d == l) {
            declared.push((*l).to_owned());
        }
    }
    SimplicialComplex::with_vertices(declared, faces)
}

pub fn write_complex(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    let ghosts = complex.vertex_set().difference(complex.support());
    if !ghosts.is_empty() {
        out.push_str("vertices: ");
        out.push_str(&complex.labels().join(" "));
        out.push('\n');
    }
    for facet in complex.facet_labels() {
        if facet.is_empty() {
            out.push('∅');
        } else {
            out.push_str(&facet.join(" "));
        }
        out.push('\n');
    }
    out
}

pub fn complex_to_document(complex: &SimplicialComplex) -> ComplexDocument {
    ComplexDocument {
        vertices: complex.labels().to_vec(),
        facets: complex
            .facet_labels()
            .into_iter()
            .map(|f| f.into_iter().map(str::to_owned).collect())
            .collect(),
    }
}

pub fn complex_from_document(doc: &ComplexDocument) -> Result<SimplicialComplex> {
    SimplicialComplex::with_vertices(doc.vertices.iter().cloned(), &doc.facets)
}

pub fn parse_complex_json(text: &str) -> Result<SimplicialComplex> {
    let doc: ComplexDocument =
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    complex_from_document(&doc)
}

pub fn write_complex_json(complex: &SimplicialComplex) -> String {
    serde_json::to_string_pretty(&complex_to_document(complex)).expect("serializable")
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut vertices: Vec<&str> = Vec::new();
    let mut edges: Vec<(&str, &str)> = Vec::new();
    for (no, line) in content_lines(text) {
        if let Some(rest) = vertices_header(line) {
            vertices.extend(rest.split_whitespace());
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        match parts.as_slice() {
            [u, v] => {
                if u == v {
                    return Err(Error::Parse {
                        line: no,
                        message: format!("loop at `{u}`"),
                    });
                }
                edges.push((u, v));
            }
            _ => {
                return Err(Error::Parse {
                    line: no,
                    message: format!("expected an edge `u v`, got `{line}`"),
                })
            }
        }
    }
    Graph::new(vertices, edges)
}

pub fn write_graph(graph: &Graph) -> String {
    let mut out = String::new();
    out.push_str("vertices:");
    for l in graph.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    for (u, v) in graph.edges() {
        out.push_str(graph.label(u));
        out.push(' ');
        out.push_str(graph.label(v));
        out.push('\n');
    }
    out
}

pub fn graph_to_document(graph: &Graph) -> GraphDocument {
    GraphDocument {
        vertices: graph.labels().to_vec(),
        edges: graph
            .edges()
            .into_iter()
            .map(|(u, v)| [graph.label(u).to_owned(), graph.label(v).to_owned()])
            .collect(),
    }
}

pub fn parse_graph_json(text: &str) -> Result<Graph> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    Graph::new(&doc.vertices, doc.edges.iter().map(|[u, v]| (u, v)))
}

pub fn write_graph_json(graph: &Graph) -> String {
    serde_json::to_string_pretty(&graph_to_document(graph)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_text_forms() {
        let c = parse_complex("x1 x2 x3\n# comment\nx3 x4 x5\n\n").unwrap();
        assert_eq!(c.to_string(), "⟨x1 x2 x3, x3 x4 x5⟩");
        assert_eq!(write_complex(&c), "x1 x2 x3\nx3 x4 x5\n");
        assert!(parse_complex("").unwrap().is_void());
        assert_eq!(
            parse_complex("∅\n").unwrap(),
            SimplicialComplex::empty_face()
        );
        assert_eq!(
            parse_complex("empty").unwrap(),
            SimplicialComplex::empty_face()
        );
        assert_eq!(write_complex(&SimplicialComplex::empty_face()), "∅\n");
        assert!(matches!(
            parse_complex("x1 ∅"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_complex("x1 x1"),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn ghost_vertices_survive_text() {
        let c = parse_complex("vertices: x1 x2 x3\nx1 x2\n").unwrap();
        assert_eq!(c.vertex_count(), 3);
        let text = write_complex(&c);
        assert_eq!(parse_complex(&text).unwrap(), c);
        let void = SimplicialComplex::with_vertices(["a"], Vec::<Vec<&str>>::new()).unwrap();
        assert_eq!(parse_complex(&write_complex(&void)).unwrap(), void);
    }

    #[test]
    fn complex_json() {
        let c = parse_complex("x1 x2\nx2 x3\n").unwrap();
        let json = write_complex_json(&c);
        assert!(json.contains("\"facets\""));
        assert_eq!(parse_complex_json(&json).unwrap(), c);
        assert!(matches!(parse_complex_json("{"), Err(Error::Document(_))));
    }

    #[test]
    fn graph_text_forms() {
        let g = parse_graph("vertices: x5\nx1 x2\nx2 x3\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        assert_eq!(parse_graph_json(&write_graph_json(&g)).unwrap(), g);
        assert!(matches!(
            parse_graph("x1 x2 x3"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_graph("x1 x1"), Err(Error::Parse { .. })));
    }
}
