//! Text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based
//! endpoints. Coloring: a header line `coloring t`, then one `u v c` line per
//! edge with `1 <= c <= t`. In both, lines starting with `#` are comments and
//! blank lines are ignored. Writers emit edges in canonical sorted order.

use std::fmt::Write as _;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers<const N: usize>(line: usize, text: &str) -> Result<[usize; N]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != N {
        return Err(parse_err(
            line,
            format!("expected {N} fields, found {}", fields.len()),
        ));
    }
    let mut out = [0; N];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field
            .parse()
            .map_err(|_| parse_err(line, format!("`{field}` is not a nonnegative integer")))?;
    }
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let [n, m] = numbers::<2>(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, text) in lines {
        if edges.len() == m {
            return Err(parse_err(line, format!("more than the {m} declared edges")));
        }
        let [u, v] = numbers::<2>(line, text)?;
        if u >= n || v >= n {
            return Err(parse_err(
                line,
                format!("endpoint out of range for n = {n}"),
            ));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at {u}")));
        }
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    write_edge_list_with_comments(g, &[])
}

/// Edge list preceded by `# `-prefixed comment lines.
pub fn write_edge_list_with_comments(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// A parsed coloring file, not yet bound to a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringFile {
    pub palette: usize,
    pub entries: Vec<(Edge, Color)>,
}

impl ColoringFile {
    pub fn bind<'g>(&self, g: &'g Graph) -> Result<EdgeColoring<'g>> {
        EdgeColoring::from_entries(g, self.entries.iter().copied())
    }
}

pub fn parse_coloring(text: &str) -> Result<ColoringFile> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `coloring t` header"))?;
    let palette = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["coloring", t] => t
            .parse::<usize>()
            .map_err(|_| parse_err(header_line, format!("`{t}` is not a palette size")))?,
        _ => return Err(parse_err(header_line, "expected `coloring t`")),
    };
    let mut entries = Vec::new();
    for (line, text) in lines {
        let [u, v, c] = numbers::<3>(line, text)?;
        if c == 0 || c > palette {
            return Err(parse_err(line, format!("color {c} outside 1..={palette}")));
        }
        entries.push(((u, v), c as Color));
    }
    Ok(ColoringFile { palette, entries })
}

pub fn write_coloring(coloring: &EdgeColoring<'_>) -> String {
    let palette = coloring.colors().iter().copied().max().unwrap_or(0);
    let mut out = format!("coloring {palette}\n");
    for ((u, v), c) in coloring.entries() {
        let _ = writeln!(out, "{u} {v} {c}");
    }
    out
}
