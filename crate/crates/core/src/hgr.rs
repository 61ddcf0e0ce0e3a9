//! The `hpd` text format.
//!
//! ```text
//! c optional comment
//! p hpd <n> <m>
//! e 1 2 3
//! ```
//!
//! Indices are 1-based on disk. Serialization writes the header, then one
//! `e` line per edge in stored order with ascending indices, each line
//! terminated by a single LF.

use std::fmt::Write as _;

use crate::error::ParseError;
use crate::Hypergraph;

pub fn parse_hgr(text: &str) -> Result<Hypergraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Vec<usize>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_end_matches('\r');
        if trimmed.trim().is_empty() || trimmed == "c" || trimmed.starts_with("c ") {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(syntax(line, "second header line"));
                }
                if tokens.next() != Some("hpd") {
                    return Err(syntax(line, "expected \"p hpd <n> <m>\""));
                }
                let n = number(tokens.next(), line, "vertex count")?;
                let m = number(tokens.next(), line, "edge count")?;
                if tokens.next().is_some() {
                    return Err(syntax(line, "trailing tokens after header"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or(ParseError::MissingHeader)?;
                let mut edge = Vec::new();
                for tok in tokens {
                    let index = number(Some(tok), line, "vertex index")?;
                    if index == 0 || index > n {
                        return Err(ParseError::IndexOutOfRange { line, index, n });
                    }
                    if edge.contains(&(index - 1)) {
                        return Err(ParseError::DuplicateVertex { line, index });
                    }
                    edge.push(index - 1);
                }
                if edge.is_empty() {
                    return Err(ParseError::EmptyEdge { line });
                }
                edges.push(edge);
            }
            Some(other) => {
                return Err(syntax(line, &format!("unknown line type {other:?}")));
            }
            None => unreachable!("blank lines skipped"),
        }
    }

    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    // Every structural check has already been made line by line.
    Ok(Hypergraph::new(n, edges).expect("validated edges"))
}

fn syntax(line: usize, message: &str) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.to_string(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, &format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| syntax(line, &format!("{what} {tok:?} is not a non-negative integer")))
}

pub fn serialize_hgr(h: &Hypergraph) -> String {
    serialize_hgr_with_comments(h, &[])
}

/// Serializes with leading `c ` comment lines, one per entry.
pub fn serialize_hgr_with_comments(h: &Hypergraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for part in c.lines() {
            let _ = writeln!(out, "c {part}");
        }
    }
    let _ = writeln!(out, "p hpd {} {}", h.vertex_count(), h.edge_count());
    for e in h.edges() {
        out.push('e');
        for v in e {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    out
}
