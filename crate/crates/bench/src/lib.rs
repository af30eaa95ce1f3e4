//! Fixture graphs shared by the benchmarks.

use reflap::{generate, BoundaryGraph, BoundarySpec, GraphKind};

/// Grid with one boundary column on each side.
pub fn grid(rows: usize, cols: usize) -> BoundaryGraph {
    generate(GraphKind::Grid { rows, cols }, &BoundarySpec::Columns(1)).expect("valid grid")
}

/// Barbell with its bridge endpoints on the boundary.
pub fn barbell(clique: usize, bridge: usize) -> BoundaryGraph {
    generate(GraphKind::Barbell { clique, bridge }, &BoundarySpec::List(vec![clique, clique + bridge - 1]))
        .expect("valid barbell")
}
