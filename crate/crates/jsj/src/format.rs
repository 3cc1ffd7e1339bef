//! The line-based graph file format.
//!
//! ```text
//! # comment
//! vertex 0 b=-3 r=1
//! vertex 1 b=-3 r=-1
//! edge 0 1 sign=+1
//! ```
//!
//! Vertices must be declared before any edge that uses them. Edge signs are
//! mandatory. Decorations are not checked here; see
//! [`jsj_core::validate_graph`].

use std::fmt::{self, Write as _};

use jsj_core::{Decoration, EdgeSign, PlumbingGraph, StructuralError, VertexId};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("bad sign token {0:?}, expected sign=+1 or sign=-1")]
    BadSign(String),
    #[error(transparent)]
    Structural(#[from] StructuralError),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at line {line}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn syntax(msg: impl Into<String>) -> ParseErrorKind {
    ParseErrorKind::Syntax(msg.into())
}

fn parse_id(tok: &str) -> Result<VertexId, ParseErrorKind> {
    tok.parse::<u32>()
        .map(VertexId)
        .map_err(|_| syntax(format!("bad vertex id {tok:?}")))
}

fn parse_keyed(tok: Option<&str>, key: &str) -> Result<i64, ParseErrorKind> {
    let tok = tok.ok_or_else(|| syntax(format!("missing {key}=<int>")))?;
    let value = tok
        .strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| syntax(format!("expected {key}=<int>, found {tok:?}")))?;
    value
        .parse()
        .map_err(|_| syntax(format!("bad integer in {tok:?}")))
}

fn parse_sign(tok: Option<&str>) -> Result<EdgeSign, ParseErrorKind> {
    match tok {
        Some("sign=+1") => Ok(EdgeSign::Positive),
        Some("sign=-1") => Ok(EdgeSign::Negative),
        Some(t) => Err(ParseErrorKind::BadSign(t.to_string())),
        None => Err(syntax("missing sign=<+1|-1>")),
    }
}

fn parse_line(g: &mut PlumbingGraph, line: &str) -> Result<(), ParseErrorKind> {
    let mut toks = line.split_whitespace();
    let Some(head) = toks.next() else {
        return Ok(());
    };
    match head {
        "vertex" => {
            let id = parse_id(toks.next().ok_or_else(|| syntax("missing vertex id"))?)?;
            let b = parse_keyed(toks.next(), "b")?;
            let r = parse_keyed(toks.next(), "r")?;
            if let Some(extra) = toks.next() {
                return Err(syntax(format!("unexpected token {extra:?}")));
            }
            g.add_vertex(id, Decoration::new(b, r))?;
        }
        "edge" => {
            let u = parse_id(toks.next().ok_or_else(|| syntax("missing edge endpoint"))?)?;
            let v = parse_id(toks.next().ok_or_else(|| syntax("missing edge endpoint"))?)?;
            let s = parse_sign(toks.next())?;
            if let Some(extra) = toks.next() {
                return Err(syntax(format!("unexpected token {extra:?}")));
            }
            g.add_edge(u, v, s)?;
        }
        other => return Err(syntax(format!("unknown directive {other:?}"))),
    }
    Ok(())
}

/// Parses a graph file, stopping at the first error.
pub fn parse_graph_file(text: &str) -> Result<PlumbingGraph, ParseError> {
    let mut g = PlumbingGraph::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        parse_line(&mut g, line).map_err(|kind| ParseError { line: i + 1, kind })?;
    }
    Ok(g)
}

/// Canonical text for `g`: vertices by id, then edges by endpoint pair.
pub fn write_graph_file(g: &PlumbingGraph) -> String {
    let mut out = String::new();
    for (v, d) in g.vertices() {
        let _ = writeln!(out, "vertex {v} b={} r={}", d.b, d.r);
    }
    for (u, v, s) in g.edges() {
        let _ = writeln!(out, "edge {u} {v} sign={s}");
    }
    out
}

/// Writes `{0,2,5}`.
pub struct SetDisplay<'a, I>(pub &'a I);

impl<'a, I> fmt::Display for SetDisplay<'a, I>
where
    &'a I: IntoIterator<Item = &'a VertexId>,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}
