//! Plain-text graph files.
//!
//! ```text
//! # comment
//! p <n> <m>
//! e <u> <v>        (m lines, edge oriented u -> v, vertices 1..n)
//! ```
//!
//! Edge identities are `1..=m` in file order.

use crate::error::{Error, Result};
use crate::graph::OrientedMultigraph;
use std::fmt::Write as _;

pub fn parse_graph(text: &str) -> Result<OrientedMultigraph> {
    let mut header: Option<(u32, usize, usize)> = None;
    let mut edges = Vec::new();
    let err = |line: usize, message: String| Error::Parse { line, message };

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        let numbers: Vec<&str> = fields.collect();
        let parse_u32 = |s: &str| {
            s.parse::<u32>()
                .map_err(|_| err(line_no, format!("expected a non-negative integer, found `{s}`")))
        };
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(err(line_no, "duplicate `p` line".into()));
                }
                if numbers.len() != 2 {
                    return Err(err(line_no, "expected `p <n> <m>`".into()));
                }
                let n = parse_u32(numbers[0])?;
                let m = parse_u32(numbers[1])? as usize;
                header = Some((n, m, line_no));
            }
            "e" => {
                let Some((n, _, _)) = header else {
                    return Err(err(line_no, "edge before `p` line".into()));
                };
                if numbers.len() != 2 {
                    return Err(err(line_no, "expected `e <u> <v>`".into()));
                }
                let u = parse_u32(numbers[0])?;
                let v = parse_u32(numbers[1])?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(err(line_no, format!("vertex {w} outside 1..{n}")));
                    }
                }
                edges.push((u, v));
            }
            other => return Err(err(line_no, format!("unknown line type `{other}`"))),
        }
    }

    let Some((n, m, header_line)) = header else {
        return Err(err(text.lines().count().max(1), "missing `p <n> <m>` line".into()));
    };
    if edges.len() != m {
        return Err(err(
            header_line,
            format!("header declares {m} edges, file has {}", edges.len()),
        ));
    }
    OrientedMultigraph::from_edge_list(n, &edges)
}

/// Writes `g` with vertices renumbered `1..=n` by canonical position and
/// edges in canonical order.
pub fn write_graph(g: &OrientedMultigraph) -> String {
    let index = g.vertex_index();
    let mut out = String::new();
    let _ = writeln!(out, "p {} {}", g.num_vertices(), g.num_edges());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {}", index[&e.tail] + 1, index[&e.head] + 1);
    }
    out
}
