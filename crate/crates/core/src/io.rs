//! Edge-list ingestion and output.
//!
//! Two input dialects are accepted:
//!
//! ```text
//! # plain                 c DIMACS-like
//! 4 3                     p edge 4 3
//! 1 2                     e 1 2
//! 2 3                     e 2 3
//! 3 4                     e 3 4
//! ```
//!
//! `#` starts a comment anywhere on a line; DIMACS `c` lines are comments.

use std::fmt::Write as _;

use crate::error::{Result, TdvError};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IndexBase {
    Zero,
    #[default]
    One,
}

fn parse_err(line: usize, message: impl Into<String>) -> TdvError {
    TdvError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("`{tok}` is not a non-negative integer")))
}

/// Parses either edge-list dialect. Vertex labels are normalized to `1..=n`.
pub fn parse_edge_list(text: &str, base: IndexBase) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] == "c" {
            continue;
        }
        let nums: &[&str] = match toks[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line_no, "duplicate header"));
                }
                if toks.len() != 4 || toks[1] != "edge" {
                    return Err(parse_err(line_no, "expected `p edge <n> <m>`"));
                }
                header = Some((parse_num(toks[2], line_no)?, parse_num(toks[3], line_no)?));
                continue;
            }
            "e" => &toks[1..],
            _ => &toks[..],
        };
        if nums.len() != 2 {
            return Err(parse_err(line_no, "expected two integers"));
        }
        let a = parse_num(nums[0], line_no)?;
        let b = parse_num(nums[1], line_no)?;
        if header.is_none() {
            if toks[0] == "e" {
                return Err(parse_err(line_no, "edge before header"));
            }
            header = Some((a, b));
            continue;
        }
        let (u, v) = match base {
            IndexBase::One => (a, b),
            IndexBase::Zero => (a + 1, b + 1),
        };
        edges.push((u, v));
        edge_lines.push(line_no);
    }

    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `n m` header"))?;
    if edges.len() != m {
        return Err(parse_err(
            edge_lines.last().copied().unwrap_or(0),
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    for (&(u, v), &line) in edges.iter().zip(&edge_lines) {
        g.add_edge(u, v).map_err(|e| match e {
            TdvError::InvalidInput(msg) => parse_err(line, msg),
            other => other,
        })?;
    }
    Ok(g)
}

/// Plain edge-list text: `n m` followed by one `u v` line per edge (1-based).
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), edges.len()).unwrap();
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_format() {
        let g =
            parse_edge_list("# a path\n4 3\n1 2\n2 3 # middle\n\n3 4\n", IndexBase::One).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn dimacs_format() {
        let g = parse_edge_list("c comment\np edge 3 2\ne 1 2\ne 2 3\n", IndexBase::One).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn zero_based_is_shifted() {
        let g = parse_edge_list("2 1\n0 1\n", IndexBase::Zero).unwrap();
        assert_eq!(g.edges(), vec![(1, 2)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_edge_list("3 2\n1 2\n2 2\n", IndexBase::One).unwrap_err();
        assert!(matches!(e, TdvError::Parse { line: 3, .. }), "{e:?}");
        let e = parse_edge_list("3 1\n1 x\n", IndexBase::One).unwrap_err();
        assert!(matches!(e, TdvError::Parse { line: 2, .. }));
        let e = parse_edge_list("3 2\n1 2\n", IndexBase::One).unwrap_err();
        assert!(matches!(e, TdvError::Parse { .. }));
        let e = parse_edge_list("3 1\n1 4\n", IndexBase::One).unwrap_err();
        assert!(matches!(e, TdvError::Parse { line: 2, .. }));
        assert!(parse_edge_list("", IndexBase::One).is_err());
        assert!(parse_edge_list("e 1 2\n", IndexBase::One).is_err());
    }

    #[test]
    fn writes_path() {
        let g = Graph::from_edge_list(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(write_edge_list(&g), "4 3\n1 2\n2 3\n3 4\n");
    }
}
