//! Plain-text formats.
//!
//! Graph: a header `n m`, then `m` lines `u v` with 0-indexed endpoints.
//! Vertex function: `n` lines `vertex value` (each vertex exactly once, any
//! order), or the single line `const c`. Blank lines are ignored.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexFn};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| !toks.is_empty())
}

fn number<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse().map_err(|_| parse_err(line, format!("expected an integer, found `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let [n, m] = header[..] else {
        return Err(parse_err(line, "header must be `n m`"));
    };
    let (n, m): (usize, usize) = (number(line, n)?, number(line, m)?);
    let mut edges = Vec::with_capacity(m);
    for (line, toks) in lines {
        let [u, v] = toks[..] else {
            return Err(parse_err(line, "edge line must be `u v`"));
        };
        if edges.len() == m {
            return Err(parse_err(line, format!("more than the {m} declared edges")));
        }
        edges.push((number(line, u)?, number(line, v)?));
    }
    if edges.len() != m {
        return Err(parse_err(line, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

pub fn parse_vertex_fn(text: &str, n: usize) -> Result<VertexFn> {
    let lines: Vec<_> = content_lines(text).collect();
    if let [(line, toks)] = &lines[..] {
        if toks.len() == 2 && toks[0] == "const" {
            return Ok(VertexFn::constant(n, number(*line, toks[1])?));
        }
    }
    let mut values = vec![None; n];
    for (line, toks) in lines {
        let [v, x] = toks[..] else {
            return Err(parse_err(line, "expected `vertex value`"));
        };
        let v: usize = number(line, v)?;
        let x: i64 = number(line, x)?;
        let slot = values.get_mut(v).ok_or(Error::VertexOutOfRange { vertex: v, n })?;
        if slot.replace(x).is_some() {
            return Err(parse_err(line, format!("vertex {v} given twice")));
        }
    }
    values
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.ok_or_else(|| parse_err(0, format!("no value for vertex {v}"))))
        .collect::<Result<Vec<_>>>()
        .map(VertexFn::new)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_vertex_fn(f: &VertexFn) -> String {
    let mut out = String::new();
    for (v, x) in f.values().iter().enumerate() {
        let _ = writeln!(out, "{v} {x}");
    }
    out
}
