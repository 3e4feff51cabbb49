//! Text formats for graphs.
//!
//! Two dialects are accepted:
//!
//! * plain: a header line `n m`, then `m` lines `u v` with 0-indexed
//!   endpoints, then optionally `weights w0 w1 ... w_{n-1}`;
//! * DIMACS-like: `c` comment lines, one `p edge n m` header, and `m`
//!   lines `e u v` with 1-indexed endpoints.
//!
//! Writers produce both dialects; `parse` round-trips them exactly.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{Graph, WeightedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// A parsed graph plus the optional explicit weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub weights: Option<Vec<u64>>,
}

impl ParsedGraph {
    /// Weights default to 1 when the file carries none.
    pub fn into_weighted(self) -> WeightedGraph {
        match self.weights {
            Some(w) => WeightedGraph::new(self.graph, w).expect("parser validated the length"),
            None => WeightedGraph::unit(self.graph),
        }
    }
}

/// Parses either dialect, detecting DIMACS input by its `p` header.
pub fn parse(text: &str) -> Result<ParsedGraph, ParseError> {
    let first_significant = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('c'));
    match first_significant {
        Some(l) if l.starts_with("p ") || l == "p" => parse_dimacs(text),
        _ => parse_plain(text),
    }
}

struct EdgeAccumulator {
    n: usize,
    seen: HashSet<(u32, u32)>,
    edges: Vec<(u32, u32)>,
}

impl EdgeAccumulator {
    fn new(n: usize) -> EdgeAccumulator {
        EdgeAccumulator {
            n,
            seen: HashSet::new(),
            edges: Vec::new(),
        }
    }

    fn push(&mut self, line: usize, u: u32, v: u32) -> Result<(), ParseError> {
        if u as usize >= self.n || v as usize >= self.n {
            return err(line, format!("edge endpoint out of range for n = {}", self.n));
        }
        if u == v {
            return err(line, format!("self-loop on vertex {u}"));
        }
        let key = (u.min(v), u.max(v));
        if !self.seen.insert(key) {
            return err(line, format!("duplicate edge ({u}, {v})"));
        }
        self.edges.push(key);
        Ok(())
    }

    fn finish(self) -> Graph {
        Graph::new(self.n, &self.edges).expect("edges validated during parsing")
    }
}

fn split_counts(line: usize, l: &str, what: &str) -> Result<(usize, usize), ParseError> {
    let mut it = l.split_whitespace();
    let n = it.next().and_then(|t| t.parse::<usize>().ok());
    let m = it.next().and_then(|t| t.parse::<usize>().ok());
    match (n, m, it.next()) {
        (Some(n), Some(m), None) => Ok((n, m)),
        _ => err(line, format!("expected {what}")),
    }
}

fn parse_plain(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut acc: Option<EdgeAccumulator> = None;
    let mut remaining = 0usize;
    let mut weights: Option<Vec<u64>> = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let l = raw.trim();
        if l.is_empty() {
            continue;
        }
        if header.is_none() {
            let (n, m) = split_counts(line, l, "header `n m`")?;
            header = Some((n, m));
            remaining = m;
            acc = Some(EdgeAccumulator::new(n));
            continue;
        }
        if weights.is_some() {
            return err(line, "unexpected content after the weights line");
        }
        if let Some(rest) = l.strip_prefix("weights") {
            if remaining > 0 {
                return err(
                    line,
                    format!("{remaining} edge lines missing before weights"),
                );
            }
            let n = header.expect("header parsed").0;
            let ws: Result<Vec<u64>, _> =
                rest.split_whitespace().map(|t| t.parse::<u64>()).collect();
            match ws {
                Ok(ws) if ws.len() == n => weights = Some(ws),
                Ok(ws) => return err(line, format!("expected {n} weights, found {}", ws.len())),
                Err(_) => return err(line, "weights must be non-negative integers"),
            }
            continue;
        }
        if remaining == 0 {
            return err(line, "unexpected extra edge line");
        }
        let mut it = l.split_whitespace();
        let u = it.next().and_then(|t| t.parse::<u32>().ok());
        let v = it.next().and_then(|t| t.parse::<u32>().ok());
        match (u, v, it.next()) {
            (Some(u), Some(v), None) => {
                acc.as_mut().expect("header parsed").push(line, u, v)?;
                remaining -= 1;
            }
            _ => return err(line, "expected an edge line `u v`"),
        }
    }
    match (header, remaining) {
        (None, _) => err(last_line.max(1), "empty input: expected a header line `n m`"),
        (Some(_), r) if r > 0 => err(last_line, format!("{r} edge lines missing")),
        (Some(_), _) => Ok(ParsedGraph {
            graph: acc.expect("header parsed").finish(),
            weights,
        }),
    }
}

fn parse_dimacs(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut acc: Option<EdgeAccumulator> = None;
    let mut remaining = 0usize;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        if let Some(rest) = l.strip_prefix("p ") {
            if acc.is_some() {
                return err(line, "duplicate problem line");
            }
            let rest = match rest.trim_start().strip_prefix("edge") {
                Some(r) => r.trim_start(),
                None => return err(line, "expected `p edge n m`"),
            };
            let (n, m) = split_counts(line, rest, "`p edge n m`")?;
            acc = Some(EdgeAccumulator::new(n));
            remaining = m;
            continue;
        }
        if let Some(rest) = l.strip_prefix("e ") {
            let acc = match acc.as_mut() {
                Some(a) => a,
                None => return err(line, "edge line before the problem line"),
            };
            if remaining == 0 {
                return err(line, "more edge lines than the header announced");
            }
            let mut it = rest.split_whitespace();
            let u = it.next().and_then(|t| t.parse::<u32>().ok());
            let v = it.next().and_then(|t| t.parse::<u32>().ok());
            match (u, v, it.next()) {
                (Some(u), Some(v), None) if u >= 1 && v >= 1 => {
                    acc.push(line, u - 1, v - 1)?;
                    remaining -= 1;
                }
                _ => return err(line, "expected `e u v` with 1-indexed endpoints"),
            }
            continue;
        }
        return err(line, format!("unrecognized line `{l}`"));
    }
    match (acc, remaining) {
        (None, _) => err(last_line.max(1), "missing problem line `p edge n m`"),
        (Some(_), r) if r > 0 => err(last_line, format!("{r} edge lines missing")),
        (Some(acc), _) => Ok(ParsedGraph {
            graph: acc.finish(),
            weights: None,
        }),
    }
}

/// Plain-dialect text, edges in lexicographic order.
pub fn write_plain(g: &Graph, weights: Option<&[u64]>) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    if let Some(ws) = weights {
        out.push_str("weights");
        for w in ws {
            out.push_str(&format!(" {w}"));
        }
        out.push('\n');
    }
    out
}

/// DIMACS-dialect text with 1-indexed endpoints.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_roundtrip() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let text = write_plain(&g, None);
        let parsed = parse(&text).unwrap();
        assert_eq!(parsed.graph, g);
        assert_eq!(parsed.weights, None);

        let ws = vec![3, 1, 4, 1];
        let text = write_plain(&g, Some(&ws));
        let parsed = parse(&text).unwrap();
        assert_eq!(parsed.graph, g);
        assert_eq!(parsed.weights, Some(ws));
    }

    #[test]
    fn dimacs_roundtrip() {
        let g = Graph::new(5, &[(0, 4), (1, 2), (2, 3)]).unwrap();
        let text = write_dimacs(&g);
        let parsed = parse(&text).unwrap();
        assert_eq!(parsed.graph, g);
    }

    #[test]
    fn dimacs_with_comments() {
        let text = "c a triangle\np edge 3 3\ne 1 2\ne 2 3\nc middle comment\ne 1 3\n";
        let parsed = parse(text).unwrap();
        assert_eq!(parsed.graph.m(), 3);
        assert!(parsed.graph.is_complete());
    }

    #[test]
    fn error_lines_are_reported() {
        assert_eq!(parse("3 2\n0 1\n0 9\n").unwrap_err().line, 3);
        assert_eq!(parse("3 1\n0 0\n").unwrap_err().line, 2);
        assert_eq!(parse("2 2\n0 1\n1 0\n").unwrap_err().line, 3);
        assert_eq!(parse("3 5\n0 1\n").unwrap_err().line, 2);
        assert_eq!(parse("p edge 3 1\nq 1 2\n").unwrap_err().line, 2);
        assert!(parse("").unwrap_err().message.contains("empty input"));
    }

    #[test]
    fn weights_validation() {
        assert_eq!(parse("2 1\n0 1\nweights 3\n").unwrap_err().line, 3);
        let parsed = parse("2 1\n0 1\nweights 3 4\n").unwrap();
        assert_eq!(parsed.into_weighted().weights(), &[3, 4]);
    }

    #[test]
    fn empty_graph_file() {
        let parsed = parse("0 0\n").unwrap();
        assert_eq!(parsed.graph.n(), 0);
    }
}
