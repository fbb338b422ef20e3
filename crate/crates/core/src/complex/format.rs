//! The `scx v1` text format.
//!
//! ```text
//! # scx v1 d=<d> n=<n>
//! # any number of comment lines
//! 0 1 4
//! 1 4 7
//! ```
//!
//! One facet per line, `d` vertex ids in strictly increasing order, each in
//! `[0, n)`. Lines are LF-terminated. Serialization writes facets in
//! lexicographic order so equal complexes produce identical files.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use super::{PureComplex, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line 1: expected `# scx v1 d=<d> n=<n>`, found {0:?}")]
    BadHeader(String),
    #[error("line {line}: invalid vertex id {token:?}")]
    BadToken { line: usize, token: String },
    #[error("line {line}: facet has {found} vertices, expected {expected}")]
    FacetSizeMismatch {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: vertex {vertex} outside [0, {n})")]
    VertexOutOfRange { line: usize, vertex: u64, n: usize },
    #[error("line {line}: vertex ids must be strictly increasing")]
    NotIncreasing { line: usize },
    #[error("line {line}: duplicate of the facet on line {first_line}")]
    DuplicateFacet { line: usize, first_line: usize },
    #[error("{0}")]
    Io(String),
}

fn parse_header(line: &str) -> Option<(usize, usize)> {
    let mut tok = line.split_whitespace();
    if (tok.next(), tok.next(), tok.next()) != (Some("#"), Some("scx"), Some("v1")) {
        return None;
    }
    let d = tok.next()?.strip_prefix("d=")?.parse().ok()?;
    let n = tok.next()?.strip_prefix("n=")?.parse().ok()?;
    if tok.next().is_some() || d == 0 {
        return None;
    }
    Some((d, n))
}

/// Parse a complex; comment lines are dropped.
pub fn parse_complex(text: &str) -> Result<PureComplex, FormatError> {
    parse_with_comments(text).map(|(c, _)| c)
}

/// Parse a complex and return the comment lines after the header (without
/// their leading `#` and surrounding whitespace).
pub fn parse_with_comments(text: &str) -> Result<(PureComplex, Vec<String>), FormatError> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or("");
    let (d, n) = parse_header(header).ok_or_else(|| FormatError::BadHeader(header.to_string()))?;

    let mut facets: Vec<Vec<Vertex>> = Vec::new();
    let mut comments = Vec::new();
    let mut first_seen: HashMap<Vec<Vertex>, usize> = HashMap::new();
    for (k, raw) in lines.enumerate() {
        let line = k + 2;
        let body = raw.trim();
        if body.is_empty() {
            continue;
        }
        if let Some(comment) = body.strip_prefix('#') {
            comments.push(comment.trim().to_string());
            continue;
        }
        let mut facet = Vec::with_capacity(d);
        for token in body.split_whitespace() {
            let v: u64 = token.parse().map_err(|_| FormatError::BadToken {
                line,
                token: token.to_string(),
            })?;
            if v >= n as u64 {
                return Err(FormatError::VertexOutOfRange { line, vertex: v, n });
            }
            facet.push(v as Vertex);
        }
        if facet.len() != d {
            return Err(FormatError::FacetSizeMismatch {
                line,
                expected: d,
                found: facet.len(),
            });
        }
        if facet.windows(2).any(|w| w[0] >= w[1]) {
            return Err(FormatError::NotIncreasing { line });
        }
        if let Some(&first_line) = first_seen.get(&facet) {
            return Err(FormatError::DuplicateFacet { line, first_line });
        }
        first_seen.insert(facet.clone(), line);
        facets.push(facet);
    }
    let complex = PureComplex::new(d, n, facets).expect("validated line by line");
    Ok((complex, comments))
}

pub fn serialize_complex(c: &PureComplex) -> String {
    serialize_with_comments(c, &[])
}

/// Header, then `# <comment>` lines, then facets in lexicographic order.
pub fn serialize_with_comments(c: &PureComplex, comments: &[String]) -> String {
    let mut out = format!("# scx v1 d={} n={}\n", c.d(), c.n());
    for line in comments {
        out.push_str("# ");
        out.push_str(line);
        out.push('\n');
    }
    for f in c.sorted_facets() {
        for (i, v) in f.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            write!(out, "{v}").expect("writing to a String");
        }
        out.push('\n');
    }
    out
}

pub fn read_complex(path: &Path) -> Result<PureComplex, FormatError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| FormatError::Io(format!("{}: {e}", path.display())))?;
    parse_complex(&text)
}

pub fn write_complex(path: &Path, c: &PureComplex, comments: &[String]) -> Result<(), FormatError> {
    std::fs::write(path, serialize_with_comments(c, comments))
        .map_err(|e| FormatError::Io(format!("{}: {e}", path.display())))
}
