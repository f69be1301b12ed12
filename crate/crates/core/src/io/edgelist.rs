use crate::graph::Graph;
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt::Write;

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::ParseLine { line, message: message.into() }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut parts = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = parts.next().ok_or_else(|| err(line, format!("missing {what}")))?;
        tok.parse().map_err(|_| err(line, format!("{what} `{tok}` is not a nonnegative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if parts.next().is_some() {
        return Err(err(line, "expected exactly two integers"));
    }
    Ok((a, b))
}

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `u v`. Blank lines are ignored. Line numbers in errors are 1-based.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or_else(|| err(1, "missing header line `n m`"))?;
    let (n, m) = parse_pair(header_line, header)?;
    let mut seen = BTreeSet::new();
    let mut last_line = header_line;
    for (line, text) in lines {
        last_line = line;
        let (u, v) = parse_pair(line, text)?;
        if u >= n || v >= n {
            return Err(err(line, format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(err(line, format!("self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line, format!("duplicate edge {u} {v}")));
        }
        if seen.len() > m {
            return Err(err(line, format!("more than the declared {m} edges")));
        }
    }
    if seen.len() != m {
        return Err(err(last_line, format!("declared {m} edges, found {}", seen.len())));
    }
    Graph::from_edges(n, seen)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        assert_eq!(parse_edge_list("4 3\n0 1\n1 2\n2 3").unwrap(), Graph::path(4));
        assert_eq!(emit_edge_list(&Graph::path(4)), "4 3\n0 1\n1 2\n2 3\n");
    }

    #[test]
    fn rejects_with_line_numbers() {
        let line = |t: &str| match parse_edge_list(t) {
            Err(Error::ParseLine { line, .. }) => line,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(line("3 2\n0 1\n0 1\n"), 3);
        assert_eq!(line("3 2\n1 0\n0 1\n"), 3);
        assert_eq!(line("3 1\n2 2\n"), 2);
        assert_eq!(line("3 1\n0 3\n"), 2);
        assert_eq!(line("3 2\n0 1\n"), 2);
        assert_eq!(line("3 1\n0 1\n1 2\n"), 3);
        assert_eq!(line("x 1\n"), 1);
        assert_eq!(line(""), 1);
    }
}
