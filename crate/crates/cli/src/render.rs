//! DOT and plain-text renderings. DOT output is for viewing only.

use std::fmt::Write as _;

use cfc_core::{EdgeColoring, Graph};

const PALETTE: [&str; 8] = [
    "black",
    "red",
    "blue",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "cyan",
];

pub fn dot_graph(g: &Graph, highlight: &[(usize, usize)]) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for &(u, v) in g.edges() {
        if highlight.binary_search(&(u, v)).is_ok() {
            let _ = writeln!(out, "  {u} -- {v} [style=bold, color=red];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}

pub fn dot_coloring(coloring: &EdgeColoring<'_>) -> String {
    let g = coloring.graph();
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for ((u, v), c) in coloring.entries() {
        let name = PALETTE[(c as usize - 1) % PALETTE.len()];
        let _ = writeln!(out, "  {u} -- {v} [label=\"{c}\", color={name}];");
    }
    out.push_str("}\n");
    out
}

/// Flat `key: value` lines from a JSON object; nested values stay JSON.
pub fn text_from_json(value: &serde_json::Value) -> String {
    let mut out = String::new();
    match value.as_object() {
        Some(map) => {
            for (key, v) in map {
                let _ = writeln!(out, "{key}: {v}");
            }
        }
        None => {
            let _ = writeln!(out, "{value}");
        }
    }
    out
}
