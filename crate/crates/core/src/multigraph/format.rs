//! Line-oriented text format:
//!
//! ```text
//! # comment
//! p <n> <m>
//! e <u> <v>      (exactly m lines, 0 <= u, v < n, u != v)
//! ```
//!
//! Repeated `e` lines are parallel edges; edge ids follow line order.

use std::fmt::Write as _;

use super::{MultiGraph, VertexId};
use crate::error::{Error, ParseErrorKind, Result};

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        kind: ParseErrorKind::Syntax(msg.into()),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| syntax(line, format!("bad {what} `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<MultiGraph> {
    let mut graph: Option<(MultiGraph, usize)> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut toks = trimmed.split_ascii_whitespace();
        match toks.next() {
            Some("p") => {
                if graph.is_some() {
                    return Err(syntax(line, "duplicate `p` line"));
                }
                let n = number(toks.next(), line, "vertex count")?;
                let m = number(toks.next(), line, "edge count")?;
                if toks.next().is_some() {
                    return Err(syntax(line, "trailing tokens"));
                }
                graph = Some((MultiGraph::new(n), m));
            }
            Some("e") => {
                let (g, m) = graph
                    .as_mut()
                    .ok_or_else(|| syntax(line, "edge before `p` line"))?;
                let u = number(toks.next(), line, "endpoint")?;
                let v = number(toks.next(), line, "endpoint")?;
                if toks.next().is_some() {
                    return Err(syntax(line, "trailing tokens"));
                }
                if g.m() == *m {
                    return Err(syntax(line, format!("more than {m} edges")));
                }
                for x in [u, v] {
                    if x >= g.n() {
                        return Err(Error::Parse {
                            line,
                            kind: ParseErrorKind::VertexOutOfRange { vertex: x, n: g.n() },
                        });
                    }
                }
                if u == v {
                    return Err(Error::Parse {
                        line,
                        kind: ParseErrorKind::LoopEdge(u),
                    });
                }
                g.add_edge(VertexId(u), VertexId(v))?;
            }
            Some(other) => return Err(syntax(line, format!("unknown record `{other}`"))),
            None => unreachable!("blank lines skipped"),
        }
    }
    let (g, m) = graph.ok_or_else(|| syntax(last_line.max(1), "missing `p` line"))?;
    if g.m() != m {
        return Err(syntax(
            last_line.max(1),
            format!("expected {m} edges, found {}", g.m()),
        ));
    }
    Ok(g)
}

pub fn write_graph(g: &MultiGraph) -> String {
    let mut out = String::with_capacity(8 + 12 * g.m());
    writeln!(out, "p {} {}", g.n(), g.m()).unwrap();
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}
