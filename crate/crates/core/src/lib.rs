//! Reflected Neumann Laplacians for graphs with boundary.
//!
//! A [`BoundaryGraph`] is a simple graph with a designated set of boundary
//! vertices. Doubling it ([`BoundaryGraph::double`]) glues a mirrored copy of
//! the interior onto the boundary; the even eigenvectors of the doubled
//! graph's Laplacian restrict to eigenvectors of the reflected Neumann
//! Laplacian `L_R`, the odd ones to the Dirichlet Laplacian.
//!
//! The crate assembles these operators ([`operators`]), computes their
//! spectra with a dense Jacobi solver ([`spectra`]), and checks the Cheeger
//! inequality `sqrt(2 λ_R) >= h_R >= λ_R / 2` against an exact enumeration
//! of the boundary-weighted Cheeger constant ([`cheeger`]).
//!
//! ```
//! use reflap::{generate, verify_theorem, BoundarySpec, GraphKind};
//!
//! let p4 = generate(GraphKind::Path(4), &BoundarySpec::Endpoints).unwrap();
//! let report = verify_theorem(&p4, 22, 1e-12).unwrap();
//! assert!(report.holds);
//! assert_eq!(report.h_r(), reflap::Ratio::new(1, 3));
//! ```

pub mod cheeger;
pub mod demo;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod half;
pub mod matrix;
pub mod operators;
pub mod spectra;

pub use cheeger::{
    cheeger_exact, edge_measure, sweep_cut, verify_theorem, volume, CheegerReport, CutResult,
    DEFAULT_MAX_N, THEOREM_TOL,
};
pub use error::{Error, Result};
pub use format::{parse_graph, write_graph};
pub use generate::{generate, BoundarySpec, GraphKind};
pub use graph::{BoundaryGraph, DoubledGraph};
pub use half::Halves;
pub use matrix::Matrix;
pub use operators::{
    adjacency_blocks, dirichlet_laplacian, reflected_laplacian, AdjacencyBlocks, BlockOrdering,
    OperatorSet,
};
pub use spectra::{
    dirichlet_spectrum, parity_classify, path_closed_form, reflected_spectrum, sym_eig,
    ParityCluster, ParityReport, PathEigenpair, PathKind, ReflectedSpectrum, Spectrum,
    DEFAULT_CLUSTER_GAP, DEFAULT_TOL,
};
pub use num_rational::Ratio;
