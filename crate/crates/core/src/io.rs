//! Text formats.
//!
//! `.cplx` complexes: an optional header `n <count>`, then one facet per line
//! as whitespace-separated 1-based vertex indices. `#` starts a comment. A
//! header with no facet lines is the VOID complex; a line holding only `0`
//! is the empty facet, so `0` alone describes the EMPTY complex `{∅}`.
//!
//! Graphs use a DIMACS-like layout: `p edge <n> <m>`, then `e <u> <v>` per
//! edge, with `c` comment lines.

use std::fmt::Write as _;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::graphs::Graph;

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn parse_cplx(text: &str) -> Result<SimplicialComplex> {
    let mut n = None;
    let mut facets = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let bad = |msg: String| Error::Input(format!("line {}: {msg}", lineno + 1));
        let mut tokens = line.split_whitespace().peekable();
        if tokens.peek() == Some(&"n") {
            tokens.next();
            if n.is_some() || !facets.is_empty() {
                return Err(bad("header must come first and only once".into()));
            }
            let count = tokens
                .next()
                .ok_or_else(|| bad("header is missing the vertex count".into()))?;
            let count: usize = count
                .parse()
                .map_err(|_| bad(format!("bad vertex count {count:?}")))?;
            if tokens.next().is_some() {
                return Err(bad("trailing tokens after header".into()));
            }
            n = Some(count);
            continue;
        }
        let values = tokens
            .map(|t| t.parse::<i64>().map_err(|_| bad(format!("bad vertex {t:?}"))))
            .collect::<Result<Vec<i64>>>()?;
        if values == [0] {
            facets.push(Face::EMPTY);
            continue;
        }
        if let Some(v) = values.iter().find(|&&v| v <= 0) {
            return Err(bad(format!("vertex indices are 1-based, got {v}")));
        }
        let face = Face::from_vertices(values.iter().map(|&v| v as usize))
            .map_err(|e| bad(e.to_string()))?;
        facets.push(face);
    }
    SimplicialComplex::from_facets(facets, n)
}

pub fn write_cplx(delta: &SimplicialComplex) -> String {
    let mut out = format!("n {}\n", delta.n());
    for f in delta.facets() {
        if f.is_empty() {
            out.push_str("0\n");
        } else {
            let _ = writeln!(out, "{f}");
        }
    }
    out
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let bad = |msg: String| Error::Input(format!("line {}: {msg}", lineno + 1));
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(bad("duplicate problem line".into()));
                }
                if tokens.next() != Some("edge") {
                    return Err(bad("expected `p edge <n> <m>`".into()));
                }
                let mut num = || -> Result<usize> {
                    let t = tokens.next().ok_or_else(|| bad("truncated problem line".into()))?;
                    t.parse().map_err(|_| bad(format!("bad count {t:?}")))
                };
                header = Some((num()?, num()?));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(bad("edge before problem line".into()));
                }
                let mut num = || -> Result<usize> {
                    let t = tokens.next().ok_or_else(|| bad("truncated edge line".into()))?;
                    t.parse().map_err(|_| bad(format!("bad endpoint {t:?}")))
                };
                edges.push((num()?, num()?));
            }
            Some(other) => return Err(bad(format!("unknown line type {other:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| Error::Input("missing `p edge` line".into()))?;
    let g = Graph::from_edges(n, &edges)?;
    if g.edge_count() != m {
        return Err(Error::Input(format!(
            "header announces {m} edges but {} distinct edges were listed",
            g.edge_count()
        )));
    }
    Ok(g)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}
