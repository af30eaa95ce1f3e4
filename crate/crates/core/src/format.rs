//! Line-oriented graph text format.
//!
//! ```text
//! # comment
//! n 4
//! b 0 3
//! e 0 1
//! e 1 2
//! e 2 3
//! ```
//!
//! `n` must appear before any `b` or `e` line. Several `b` lines accumulate.
//! Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::BoundaryGraph;

pub fn parse_graph(text: &str) -> Result<BoundaryGraph> {
    let mut n: Option<usize> = None;
    let mut boundary = Vec::new();
    let mut edges: Vec<((usize, usize), usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| Error::Parse { line: line_no, message };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().unwrap();
        let nums = tokens
            .map(|t| t.parse::<usize>().map_err(|_| err(format!("expected a non-negative integer, found {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        match tag {
            "n" => {
                if n.is_some() {
                    return Err(err("repeated `n` line".into()));
                }
                match nums[..] {
                    [count] => n = Some(count),
                    _ => return Err(err("`n` takes exactly one value".into())),
                }
            }
            "b" | "e" => {
                let count = n.ok_or_else(|| err(format!("`{tag}` line before `n`")))?;
                if let Some(&v) = nums.iter().find(|&&v| v >= count) {
                    return Err(err(Error::InvalidVertex { vertex: v, n: count }.to_string()));
                }
                if tag == "b" {
                    boundary.extend(nums);
                } else {
                    match nums[..] {
                        [u, v] if u == v => return Err(err(Error::SelfLoop(u).to_string())),
                        [u, v] => edges.push(((u, v), line_no)),
                        _ => return Err(err("`e` takes exactly two values".into())),
                    }
                }
            }
            other => return Err(err(format!("unknown line tag {other:?}"))),
        }
    }

    let n = n.ok_or(Error::Parse { line: text.lines().count().max(1), message: "missing `n` line".into() })?;
    let mut seen = std::collections::HashSet::new();
    for &((u, v), line) in &edges {
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse { line, message: Error::DuplicateEdge(u.min(v), u.max(v)).to_string() });
        }
    }
    let pairs: Vec<_> = edges.into_iter().map(|(e, _)| e).collect();
    BoundaryGraph::new(n, &pairs, &boundary)
}

/// Serializes a graph; `parse_graph(&write_graph(g)) == g`.
pub fn write_graph(g: &BoundaryGraph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.n()).unwrap();
    let b = g.boundary();
    if !b.is_empty() {
        out.push('b');
        for v in b {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}
