//! Plot-ready reconstructions of the two illustrative examples: the cut
//! orientation flip on a grid, and the barbell eigenvector profile.

use crate::cheeger::{sweep_cut, CutResult};
use crate::error::{Error, Result};
use crate::generate::{generate, BoundarySpec, GraphKind};
use crate::graph::BoundaryGraph;
use crate::spectra::{reflected_spectrum, DEFAULT_TOL};

/// Default grid for the cut-flip demo. A grid one column wider than it is
/// tall, with two boundary columns on each side, is the smallest shape on
/// which the standard cut is vertical and the reflected cut horizontal.
pub const FIGURE4_ROWS: usize = 4;
pub const FIGURE4_COLS: usize = 5;
pub const FIGURE4_BOUNDARY: BoundarySpec = BoundarySpec::Columns(2);

pub const FIGURE5_CLIQUE: usize = 5;
pub const FIGURE5_BRIDGE: usize = 3;

/// Which family of grid edges a cut crosses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutAxis {
    /// Mostly horizontal edges cut: a vertical line separating columns.
    Columns,
    /// Mostly vertical edges cut: a horizontal line separating rows.
    Rows,
    Mixed,
}

impl std::fmt::Display for CutAxis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CutAxis::Columns => "columns",
            CutAxis::Rows => "rows",
            CutAxis::Mixed => "mixed",
        })
    }
}

/// Classifies a cut of a row-major `rows x cols` grid.
pub fn cut_axis(rows: usize, cols: usize, subset: &[usize]) -> CutAxis {
    let mut inside = vec![false; rows * cols];
    subset.iter().for_each(|&v| inside[v] = true);
    let (mut horizontal, mut vertical) = (0, 0);
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols && inside[v] != inside[v + 1] {
                horizontal += 1;
            }
            if r + 1 < rows && inside[v] != inside[v + cols] {
                vertical += 1;
            }
        }
    }
    match horizontal.cmp(&vertical) {
        std::cmp::Ordering::Greater => CutAxis::Columns,
        std::cmp::Ordering::Less => CutAxis::Rows,
        std::cmp::Ordering::Equal => CutAxis::Mixed,
    }
}

#[derive(Debug, Clone)]
pub struct Figure4 {
    pub kind: GraphKind,
    pub graph: BoundaryGraph,
    pub coordinates: Vec<(f64, f64)>,
    /// Second eigenvector of the standard normalized Laplacian (boundary ignored).
    pub psi: Vec<f64>,
    /// Second eigenvector of the normalized reflected Laplacian.
    pub psi_r: Vec<f64>,
    pub psi_cut: CutResult,
    pub psi_r_cut: CutResult,
    pub psi_axis: CutAxis,
    pub psi_r_axis: CutAxis,
}

/// Sweep cuts of `psi` and `psi_R` on a grid with the given boundary.
pub fn figure4(rows: usize, cols: usize, boundary: &BoundarySpec) -> Result<Figure4> {
    let kind = GraphKind::Grid { rows, cols };
    let graph = generate(kind, boundary)?;
    let free = graph.with_boundary(&[])?;

    let standard = reflected_spectrum(&free, DEFAULT_TOL)?;
    let reflected = reflected_spectrum(&graph, DEFAULT_TOL)?;
    let psi_cut = sweep_cut(&free, &standard.sweep_vector(1))?;
    let psi_r_cut = sweep_cut(&graph, &reflected.sweep_vector(1))?;

    Ok(Figure4 {
        kind,
        coordinates: kind.coordinates(),
        psi: standard.psi_r(),
        psi_r: reflected.psi_r(),
        psi_axis: cut_axis(rows, cols, &psi_cut.subset),
        psi_r_axis: cut_axis(rows, cols, &psi_r_cut.subset),
        psi_cut,
        psi_r_cut,
        graph,
    })
}

#[derive(Debug, Clone)]
pub struct Figure5 {
    pub kind: GraphKind,
    pub graph: BoundaryGraph,
    pub coordinates: Vec<(f64, f64)>,
    /// Second eigenvector of the normalized reflected Laplacian.
    pub psi_r: Vec<f64>,
    /// The matching eigenvector of `L_R` itself, `D^{-1/2} psi_r`.
    pub g: Vec<f64>,
    /// Vertices attaining the maximum of `psi_r` (within 1e-9).
    pub argmax: Vec<usize>,
    /// Vertices attaining the minimum of `psi_r` (within 1e-9).
    pub argmin: Vec<usize>,
}

/// `psi_R` on a barbell whose boundary is the bridge vertex at each clique
/// junction. Needs `bridge >= 1`.
pub fn figure5(clique: usize, bridge: usize) -> Result<Figure5> {
    if bridge == 0 {
        return Err(Error::InvalidSpec("figure5 needs a bridge of at least one vertex".into()));
    }
    let kind = GraphKind::Barbell { clique, bridge };
    let graph = generate(kind, &BoundarySpec::List(figure5_boundary(clique, bridge)))?;
    let spectrum = reflected_spectrum(&graph, DEFAULT_TOL)?;
    let psi_r = spectrum.psi_r();
    let g = spectrum.sweep_vector(1);
    let (argmax, argmin) = extremes(&psi_r);
    Ok(Figure5 { kind, coordinates: kind.coordinates(), graph, psi_r, g, argmax, argmin })
}

/// First and last bridge vertex.
pub fn figure5_boundary(clique: usize, bridge: usize) -> Vec<usize> {
    let mut b = vec![clique, clique + bridge.max(1) - 1];
    b.dedup();
    b
}

/// Indices within 1e-9 of the maximum and of the minimum.
pub fn extremes(x: &[f64]) -> (Vec<usize>, Vec<usize>) {
    let max = x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = x.iter().copied().fold(f64::INFINITY, f64::min);
    let argmax = (0..x.len()).filter(|&v| x[v] >= max - 1e-9).collect();
    let argmin = (0..x.len()).filter(|&v| x[v] <= min + 1e-9).collect();
    (argmax, argmin)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_classification() {
        // left two columns of a 2x4 grid
        assert_eq!(cut_axis(2, 4, &[0, 1, 4, 5]), CutAxis::Columns);
        assert_eq!(cut_axis(2, 4, &[0, 1, 2, 3]), CutAxis::Rows);
        assert_eq!(cut_axis(2, 2, &[0]), CutAxis::Mixed);
    }

    #[test]
    fn default_figure4_flips() {
        let f = figure4(FIGURE4_ROWS, FIGURE4_COLS, &FIGURE4_BOUNDARY).unwrap();
        assert_eq!(f.psi_axis, CutAxis::Columns);
        assert_eq!(f.psi_r_axis, CutAxis::Rows);
    }

    #[test]
    fn figure4_without_boundary_coincides() {
        let f = figure4(4, 6, &BoundarySpec::None).unwrap();
        assert_eq!(f.psi_cut, f.psi_r_cut);
        assert_eq!(f.psi_axis, CutAxis::Columns);
    }

    #[test]
    fn figure5_extremes_are_interior() {
        let f = figure5(FIGURE5_CLIQUE, FIGURE5_BRIDGE).unwrap();
        assert_eq!(f.graph.boundary(), vec![5, 7]);
        assert!(f.argmax.iter().chain(&f.argmin).all(|&v| !f.graph.is_boundary(v)));
        let (gmax, gmin) = extremes(&f.g);
        assert!(gmax.iter().chain(&gmin).all(|&v| !f.graph.is_boundary(v)));
    }

    #[test]
    fn figure5_clique_junctions_put_extremes_on_boundary() {
        let g = generate(GraphKind::Barbell { clique: 5, bridge: 3 }, &BoundarySpec::List(vec![4, 8])).unwrap();
        let (argmax, argmin) = extremes(&reflected_spectrum(&g, DEFAULT_TOL).unwrap().psi_r());
        let mut both = [argmax, argmin].concat();
        both.sort();
        assert_eq!(both, vec![4, 8]);
    }

    #[test]
    fn figure5_single_bridge_vertex() {
        assert_eq!(figure5_boundary(4, 1), vec![4]);
        assert!(figure5(4, 0).is_err());
        let f = figure5(4, 1).unwrap();
        assert!(f.argmax.iter().chain(&f.argmin).all(|&v| !f.graph.is_boundary(v)));
    }
}
