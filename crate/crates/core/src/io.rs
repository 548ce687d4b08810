//! Text formats.
//!
//! `.hyp`: first line `n m`, then `m` lines of space-separated 0-based vertex
//! indices, one edge per line. Lines starting with `#` are comments. An
//! empty edge is an empty line. Several records may be concatenated with
//! blank lines between them.
//!
//! Colorings: one `edge_index color_index` line per edge.

use std::fmt::Write as _;

use thiserror::Error;

use crate::hypergraph::{Hypergraph, HypergraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("unexpected end of input: expected {expected} more edge line(s)")]
    Truncated { expected: usize },
    #[error(transparent)]
    Invalid(#[from] HypergraphError),
}

fn syntax(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line: line + 1,
        reason: reason.into(),
    }
}

pub fn to_hyp(h: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", h.n(), h.m()).unwrap();
    for e in h.edges() {
        let mut first = true;
        for v in e {
            if !first {
                out.push(' ');
            }
            first = false;
            write!(out, "{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Several records separated by blank lines.
pub fn to_hyp_many<'a>(hs: impl IntoIterator<Item = &'a Hypergraph>) -> String {
    hs.into_iter().map(to_hyp).collect::<Vec<_>>().join("\n")
}

fn parse_usize(line: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| {
        syntax(
            line,
            format!("expected a non-negative integer, found {tok:?}"),
        )
    })
}

struct Records<'a> {
    lines: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl Records<'_> {
    fn next_record(&mut self) -> Option<Result<Hypergraph, ParseError>> {
        let (hline, header) = loop {
            let (i, line) = self.lines.next()?;
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            break (i, t);
        };
        Some(self.read_body(hline, header))
    }

    fn read_body(&mut self, hline: usize, header: &str) -> Result<Hypergraph, ParseError> {
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(syntax(hline, "header must be `n m`"));
        }
        let n = parse_usize(hline, toks[0])?;
        let m = parse_usize(hline, toks[1])?;
        let mut edges = Vec::with_capacity(m);
        while edges.len() < m {
            let Some((i, line)) = self.lines.next() else {
                return Err(ParseError::Truncated {
                    expected: m - edges.len(),
                });
            };
            let t = line.trim();
            if t.starts_with('#') {
                continue;
            }
            let edge = t
                .split_whitespace()
                .map(|tok| parse_usize(i, tok))
                .collect::<Result<Vec<_>, _>>()?;
            edges.push(edge);
        }
        Ok(Hypergraph::new(n, edges)?)
    }
}

/// Parses exactly one record; anything but blank or comment lines after it
/// is an error.
pub fn parse_hyp(text: &str) -> Result<Hypergraph, ParseError> {
    let mut records = Records {
        lines: text.lines().enumerate(),
    };
    let h = records
        .next_record()
        .ok_or(ParseError::Truncated { expected: 1 })??;
    for (i, line) in records.lines {
        let t = line.trim();
        if !t.is_empty() && !t.starts_with('#') {
            return Err(syntax(i, "trailing content after the last edge"));
        }
    }
    Ok(h)
}

pub fn parse_hyp_many(text: &str) -> Result<Vec<Hypergraph>, ParseError> {
    let mut records = Records {
        lines: text.lines().enumerate(),
    };
    std::iter::from_fn(|| records.next_record()).collect()
}

pub fn coloring_to_text(colors: &[usize]) -> String {
    let mut out = String::new();
    for (e, c) in colors.iter().enumerate() {
        writeln!(out, "{e} {c}").unwrap();
    }
    out
}

/// Reads `edge_index color_index` lines covering every edge of `0..m`
/// exactly once, in any order.
pub fn parse_coloring_text(text: &str, m: usize) -> Result<Vec<usize>, ParseError> {
    let mut colors = vec![None; m];
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = t.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(syntax(i, "expected `edge_index color_index`"));
        }
        let e = parse_usize(i, toks[0])?;
        let c = parse_usize(i, toks[1])?;
        match colors.get_mut(e) {
            None => return Err(syntax(i, format!("edge index {e} out of range (m = {m})"))),
            Some(Some(_)) => return Err(syntax(i, format!("edge {e} colored twice"))),
            Some(slot) => *slot = Some(c),
        }
    }
    let missing = colors.iter().filter(|c| c.is_none()).count();
    if missing > 0 {
        return Err(ParseError::Truncated { expected: missing });
    }
    Ok(colors.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fixtures::fano;

    #[test]
    fn fano_text() {
        let text = to_hyp(&fano());
        assert!(text.starts_with("7 7\n0 1 2\n0 3 4\n"));
        assert_eq!(parse_hyp(&text).unwrap(), fano());
        assert_eq!(to_hyp(&parse_hyp(&text).unwrap()), text);
    }

    #[test]
    fn comments_and_unsorted_edges() {
        let h = parse_hyp("# a path\n3 2\n1 0\n# middle\n2 1\n").unwrap();
        assert_eq!(h.edges(), &[vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn empty_edges_round_trip() {
        let h = Hypergraph::new(3, vec![vec![], vec![0, 2], vec![]]).unwrap();
        let text = to_hyp(&h);
        assert_eq!(text, "3 3\n\n0 2\n\n");
        assert_eq!(parse_hyp(&text).unwrap(), h);
    }

    #[test]
    fn many_records() {
        let a = fano();
        let b = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let text = to_hyp_many([&a, &b]);
        assert_eq!(parse_hyp_many(&text).unwrap(), vec![a, b]);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_hyp("3 2\n0 1\n"),
            Err(ParseError::Truncated { expected: 1 })
        ));
        assert!(matches!(
            parse_hyp("3\n"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_hyp("3 1\n0 x\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_hyp("3 1\n0 5\n"),
            Err(ParseError::Invalid(_))
        ));
        assert!(matches!(
            parse_hyp("2 1\n0 1\n0 1\n"),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn coloring_text() {
        let text = coloring_to_text(&[0, 1, 0]);
        assert_eq!(text, "0 0\n1 1\n2 0\n");
        assert_eq!(parse_coloring_text(&text, 3).unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_coloring_text("1 4\n0 2\n", 2).unwrap(), vec![2, 4]);
        assert!(parse_coloring_text("0 0\n", 2).is_err());
        assert!(parse_coloring_text("0 0\n0 1\n", 1).is_err());
        assert!(parse_coloring_text("3 0\n", 1).is_err());
    }
}
