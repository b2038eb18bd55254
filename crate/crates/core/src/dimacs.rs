//! DIMACS `.col` parsing and serialization.
//!
//! Accepted lines: `c` comments, one `p edge <n> <m>` header, and `e <u> <v>`
//! edges with 1-based endpoints. A header edge count that disagrees with the
//! number of distinct edges is reported as a warning rather than an error —
//! the edge lines are trusted.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum DimacsError {
    #[error("line {line}: malformed header: {text}")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: duplicate problem line")]
    DuplicateHeader { line: usize },
    #[error("line {line}: edge before problem line")]
    EdgeBeforeHeader { line: usize },
    #[error("line {line}: malformed edge: {text}")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: vertex {id} outside 1..={n}")]
    VertexOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: self-loop at vertex {id}")]
    SelfLoop { line: usize, id: usize },
    #[error("line {line}: unrecognized line type: {text}")]
    UnknownLineType { line: usize, text: String },
    #[error("missing problem line")]
    MissingHeader,
}

/// Parses DIMACS text. Returns the graph plus any non-fatal warnings.
pub fn parse_dimacs(text: &str) -> Result<(Graph, Vec<String>), DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        match fields.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(DimacsError::DuplicateHeader { line });
                }
                let format = fields.next();
                let n = fields.next().and_then(|s| s.parse::<usize>().ok());
                let m = fields.next().and_then(|s| s.parse::<usize>().ok());
                match (format, n, m, fields.next()) {
                    (Some("edge"), Some(n), Some(m), None) => header = Some((n, m)),
                    _ => {
                        return Err(DimacsError::MalformedHeader {
                            line,
                            text: trimmed.to_string(),
                        })
                    }
                }
            }
            Some("e") => {
                let (n, _) = header.ok_or(DimacsError::EdgeBeforeHeader { line })?;
                let u = fields.next().and_then(|s| s.parse::<usize>().ok());
                let v = fields.next().and_then(|s| s.parse::<usize>().ok());
                let (u, v) = match (u, v, fields.next()) {
                    (Some(u), Some(v), None) => (u, v),
                    _ => {
                        return Err(DimacsError::MalformedEdge {
                            line,
                            text: trimmed.to_string(),
                        })
                    }
                };
                for id in [u, v] {
                    if id == 0 || id > n {
                        return Err(DimacsError::VertexOutOfRange { line, id, n });
                    }
                }
                if u == v {
                    return Err(DimacsError::SelfLoop { line, id: u });
                }
                edges.push((u - 1, v - 1));
            }
            _ => {
                return Err(DimacsError::UnknownLineType {
                    line,
                    text: trimmed.to_string(),
                })
            }
        }
    }
    let (n, declared_m) = header.ok_or(DimacsError::MissingHeader)?;
    let graph = Graph::from_edges(n, &edges).expect("endpoints validated during parse");
    let mut warnings = Vec::new();
    if graph.m() != declared_m {
        warnings.push(format!(
            "header declares {declared_m} edges, found {} distinct",
            graph.m()
        ));
    }
    Ok((graph, warnings))
}

/// Serializes back to DIMACS. `parse_dimacs(to_dimacs(g))` reproduces `g`
/// with no warnings.
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn parses_path_on_three_vertices() {
        let (g, warnings) = parse_dimacs("c tiny\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert_eq!(g.delta(), 2);
        assert!(warnings.is_empty());
    }

    #[test]
    fn duplicate_edge_both_orientations_collapses_with_warning() {
        let (g, warnings) = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(warnings.len(), 1);
    }

    #[test]
    fn self_loop_is_fatal() {
        assert_eq!(
            parse_dimacs("p edge 2 1\ne 1 1\n"),
            Err(DimacsError::SelfLoop { line: 2, id: 1 })
        );
    }

    #[test]
    fn vertex_out_of_range_is_fatal() {
        assert!(matches!(
            parse_dimacs("p edge 2 1\ne 1 3\n"),
            Err(DimacsError::VertexOutOfRange { id: 3, .. })
        ));
    }

    #[test]
    fn edge_before_header_rejected() {
        assert_eq!(
            parse_dimacs("e 1 2\np edge 2 1\n"),
            Err(DimacsError::EdgeBeforeHeader { line: 1 })
        );
    }

    #[test]
    fn missing_header_rejected() {
        assert_eq!(parse_dimacs("c nothing\n"), Err(DimacsError::MissingHeader));
    }

    #[test]
    fn petersen_round_trips() {
        let g = families::petersen();
        let (parsed, warnings) = parse_dimacs(&to_dimacs(&g)).unwrap();
        assert_eq!(parsed, g);
        assert!(warnings.is_empty());
        assert_eq!(parsed.n(), 10);
        assert_eq!(parsed.m(), 15);
        assert_eq!(parsed.delta(), 3);
    }
}
