//! Edge-list text format: a header line `n m`, then `m` lines `u v` with
//! 0-based ids. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use super::{Graph, GraphError};

pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or(GraphError::Parse { line: 1, message: "missing header `n m`".into() })?;
    let (n, m) = parse_pair(hline, header)?;

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (line, l) in lines.by_ref().take(m) {
        let (u, v) = parse_pair(line, l)?;
        let err = |message: String| GraphError::Parse { line, message };
        if u >= n || v >= n {
            return Err(err(format!("vertex id out of range 0..{n}")));
        }
        if u == v {
            return Err(err(format!("self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: text.lines().count().max(1),
            message: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    if let Some((line, _)) = lines.next() {
        return Err(GraphError::Parse { line, message: "trailing data after edge list".into() });
    }
    Graph::from_edges(n, edges)
}

fn parse_pair(line: usize, l: &str) -> Result<(usize, usize), GraphError> {
    let mut it = l.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        it.next()
            .ok_or_else(|| GraphError::Parse { line, message: format!("missing {what}") })?
            .parse::<usize>()
            .map_err(|e| GraphError::Parse { line, message: format!("bad {what}: {e}") })
    };
    let a = next("first integer")?;
    let b = next("second integer")?;
    if it.next().is_some() {
        return Err(GraphError::Parse { line, message: "expected exactly two integers".into() });
    }
    Ok((a, b))
}

/// Canonical form: header, then edges `u v` with `u < v` in sorted order.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_random_graph};

    #[test]
    fn parses_small_graphs() {
        let k2 = parse_graph("2 1\n0 1").unwrap();
        assert_eq!(k2.edges(), &[(0, 1)]);
        let k3 = parse_graph("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(k3, make_complete(3).unwrap());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_graph("3 2\n0 1\n1 7\n").unwrap_err();
        assert!(matches!(e, GraphError::Parse { line: 3, .. }), "{e}");
        let e = parse_graph("3 2\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(e, GraphError::Parse { line: 3, .. }), "{e}");
        let e = parse_graph("3 1\n2 2\n").unwrap_err();
        assert!(matches!(e, GraphError::Parse { line: 2, .. }), "{e}");
        let e = parse_graph("3 2\n0 1\n").unwrap_err();
        assert!(matches!(e, GraphError::Parse { .. }));
        assert!(parse_graph("").is_err());
        assert!(parse_graph("3\n").is_err());
    }

    #[test]
    fn round_trip_is_canonical() {
        let g = make_random_graph(20, 6, 0.4, 11).unwrap();
        // Scramble orientation and order, then check canonicalisation.
        let mut text = format!("{} {}\n", g.n(), g.m());
        for &(u, v) in g.edges().iter().rev() {
            text.push_str(&format!("{v} {u}\n"));
        }
        let parsed = parse_graph(&text).unwrap();
        assert_eq!(serialize_graph(&parsed), serialize_graph(&g));
        assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
    }
}
