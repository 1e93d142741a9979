//! Plain-text edge lists.
//!
//! ```text
//! # comments run to end of line
//! 4
//! # labels: a b c d
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first non-comment line is the vertex count, then one whitespace
//! separated `u v` pair per line, 0-indexed. The optional `# labels:` comment
//! carries display names and survives a round trip. Files holding several
//! graphs separate them with blank lines.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::{Graph, ParseError, MAX_VERTICES};

const LABELS_DIRECTIVE: &str = "labels:";

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    parse_lines(text.lines().enumerate().map(|(i, l)| (i + 1, l)))
}

fn parse_lines<'a>(lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut labels: Option<(usize, Vec<String>)> = None;
    let mut seen = HashSet::new();
    let mut edges = Vec::new();

    for (line, raw) in lines {
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b, Some(c)),
            None => (raw, None),
        };
        if let Some(names) = comment.and_then(|c| c.trim().strip_prefix(LABELS_DIRECTIVE)) {
            labels = Some((line, names.split_whitespace().map(String::from).collect()));
        }
        let body = body.trim();
        if body.is_empty() {
            continue;
        }
        let Some(count) = n else {
            let count: usize = body.parse().map_err(|_| ParseError::BadHeader {
                line,
                text: body.to_string(),
            })?;
            if count > MAX_VERTICES {
                return Err(ParseError::Capacity {
                    line,
                    n: count,
                    max: MAX_VERTICES,
                });
            }
            n = Some(count);
            continue;
        };
        let malformed = || ParseError::Malformed {
            line,
            text: body.to_string(),
        };
        let mut parts = body.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(malformed());
        };
        let u: usize = a.parse().map_err(|_| malformed())?;
        let v: usize = b.parse().map_err(|_| malformed())?;
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if let Some(&vertex) = [u, v].iter().find(|&&x| x >= count) {
            return Err(ParseError::VertexOutOfRange { line, vertex, n: count });
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(ParseError::DuplicateEdge {
                line,
                u: key.0,
                v: key.1,
            });
        }
        edges.push(key);
    }

    let n = n.ok_or(ParseError::MissingHeader)?;
    let graph = Graph::from_edges(n, edges).expect("edges validated while parsing");
    match labels {
        None => Ok(graph),
        Some((line, names)) if names.len() != n => Err(ParseError::LabelCount {
            line,
            n,
            found: names.len(),
        }),
        Some((_, names)) => Ok(graph.with_labels(names)),
    }
}

/// Canonical text form: header, optional labels, edges in `(min, max)` order.
pub fn serialize(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    if let Some(labels) = g.labels() {
        if !labels.is_empty() {
            let _ = writeln!(out, "# {LABELS_DIRECTIVE} {}", labels.join(" "));
        }
    }
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

/// Parses a multi-graph file: blocks separated by blank lines. Blocks made of
/// comments only are skipped. Errors report the line within the whole file.
pub fn parse_many(text: &str) -> Result<Vec<Graph>, ParseError> {
    let mut graphs = Vec::new();
    let mut block: Vec<(usize, &str)> = Vec::new();
    let lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    for (line, raw) in lines.chain(std::iter::once((0, ""))) {
        if !raw.trim().is_empty() {
            block.push((line, raw));
            continue;
        }
        let has_content = block
            .iter()
            .any(|(_, l)| !l.split('#').next().unwrap_or("").trim().is_empty());
        if has_content {
            graphs.push(parse_lines(block.drain(..))?);
        }
        block.clear();
    }
    Ok(graphs)
}

pub fn serialize_many<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> String {
    let mut out = String::new();
    for (i, g) in graphs.into_iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "# graph {i}");
        out.push_str(&serialize(g));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, fixture, path};

    #[test]
    fn parses_path() {
        assert_eq!(parse_edge_list("3\n0 1\n1 2\n").unwrap(), path(3).unwrap());
    }

    #[test]
    fn parses_single_vertex() {
        assert_eq!(parse_edge_list("1\n").unwrap(), complete(1).unwrap());
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a triangle\n\n3  # vertices\n0 1\n1 2 # middle\n\n2 0\n";
        assert_eq!(parse_edge_list(text).unwrap(), complete(3).unwrap());
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(
            parse_edge_list("2\n0 0\n"),
            Err(ParseError::SelfLoop { line: 2, vertex: 0 })
        );
        assert_eq!(
            parse_edge_list("3\n0 1\n1 0\n"),
            Err(ParseError::DuplicateEdge { line: 3, u: 0, v: 1 })
        );
        assert_eq!(
            parse_edge_list("3\n0 3\n"),
            Err(ParseError::VertexOutOfRange { line: 2, vertex: 3, n: 3 })
        );
        assert!(matches!(
            parse_edge_list("3\n0 1 2\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 x\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("three\n"),
            Err(ParseError::BadHeader { line: 1, .. })
        ));
        assert_eq!(parse_edge_list("# nothing\n"), Err(ParseError::MissingHeader));
        assert!(matches!(
            parse_edge_list("17\n"),
            Err(ParseError::Capacity { n: 17, .. })
        ));
        assert!(matches!(
            parse_edge_list("2\n# labels: a\n0 1\n"),
            Err(ParseError::LabelCount { line: 2, n: 2, found: 1 })
        ));
    }

    #[test]
    fn labels_round_trip() {
        let g = fixture("fig2_G").unwrap();
        let text = serialize(&g);
        assert!(text.starts_with("7\n# labels: a b c d e f g\n0 1\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn many_graphs() {
        let gs = vec![path(3).unwrap(), complete(1).unwrap(), fixture("fig1_H").unwrap()];
        let text = serialize_many(&gs);
        assert_eq!(parse_many(&text).unwrap(), gs);
        let err = parse_many("2\n0 1\n\n2\n0 0\n").unwrap_err();
        assert_eq!(err, ParseError::SelfLoop { line: 5, vertex: 0 });
    }
}
