//! Spectra of the reflected Neumann and Dirichlet operators.

mod jacobi;
mod parity;

pub use jacobi::{sym_eig, MAX_SWEEPS};
pub use parity::{parity_classify, ParityCluster, ParityReport, DEFAULT_CLUSTER_GAP};

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::graph::BoundaryGraph;
use crate::matrix::Matrix;
use crate::operators::{dirichlet_laplacian, OperatorSet};

/// Default Jacobi convergence tolerance, relative to `||M||_F`.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Ascending eigenvalues with orthonormal eigenvectors (as columns) and the
/// residual `||M x - lambda x||_2` of each pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Matrix,
    pub residuals: Vec<f64>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn eigenvector(&self, k: usize) -> Vec<f64> {
        self.eigenvectors.column(k)
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    /// `V diag(lambda) V^T`.
    pub fn reconstruct(&self) -> Matrix {
        let v = &self.eigenvectors;
        let scaled = v.scale(&vec![1.0; v.rows()], &self.eigenvalues);
        scaled.matmul(&v.transpose())
    }
}

/// Spectrum of the normalized reflected Laplacian, indexed by vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct ReflectedSpectrum {
    /// Eigenpairs of the symmetric form `S = Q^{1/2} L_R_norm Q^{-1/2}`,
    /// which shares its eigenvalues with `L_R_norm`.
    pub spectrum: Spectrum,
    /// Eigenvectors of `L_R_norm` itself, `Q^{-1/2} y`, as columns.
    pub operator_vectors: Matrix,
    /// Sweep vectors `g = (DQ)^{-1/2} y` as columns. They satisfy
    /// `L_R g = lambda D g` and, for nonzero eigenvalues, `g^T D Q 1 = 0`.
    pub sweep_vectors: Matrix,
    /// Diagonal of D by vertex.
    pub d: Vec<f64>,
    /// Diagonal of Q by vertex.
    pub q: Vec<f64>,
}

impl ReflectedSpectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.spectrum.eigenvalues
    }

    /// The first nontrivial eigenvalue.
    pub fn lambda_r(&self) -> f64 {
        self.spectrum.eigenvalues[1]
    }

    /// Eigenvector of `L_R_norm` for `lambda_r`.
    pub fn psi_r(&self) -> Vec<f64> {
        self.operator_vectors.column(1)
    }

    pub fn sweep_vector(&self, k: usize) -> Vec<f64> {
        self.sweep_vectors.column(k)
    }
}

/// Eigendecomposes the normalized reflected Laplacian through its symmetric
/// form and back-transforms the eigenvectors.
pub fn reflected_spectrum(g: &BoundaryGraph, tol: f64) -> Result<ReflectedSpectrum> {
    let ops = OperatorSet::assemble(g)?;
    let ord = &ops.ordering;
    let sym = ord.to_vertex_order(&ops.sym);
    let d = ord.vec_to_vertex_order(&ops.d);
    let q = ord.vec_to_vertex_order(&ops.q);
    let spectrum = sym_eig(&sym, tol)?;

    let q_inv_sqrt: Vec<f64> = q.iter().map(|x| 1.0 / x.sqrt()).collect();
    let dq_inv_sqrt: Vec<f64> = d.iter().zip(&q).map(|(d, q)| 1.0 / (d * q).sqrt()).collect();
    let ones = vec![1.0; spectrum.len()];
    let operator_vectors = spectrum.eigenvectors.scale(&q_inv_sqrt, &ones);
    let sweep_vectors = spectrum.eigenvectors.scale(&dq_inv_sqrt, &ones);
    Ok(ReflectedSpectrum { spectrum, operator_vectors, sweep_vectors, d, q })
}

/// Spectrum of the Dirichlet Laplacian; vector entries follow ascending
/// interior-vertex order.
pub fn dirichlet_spectrum(g: &BoundaryGraph, tol: f64) -> Result<Spectrum> {
    sym_eig(&dirichlet_laplacian(g)?, tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathKind {
    Dirichlet,
    Neumann,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathEigenpair {
    pub k: usize,
    pub eigenvalue: f64,
    /// Unnormalized sine (Dirichlet) or cosine (Neumann) profile.
    pub vector: Vec<f64>,
}

/// Closed-form eigenpairs of the path on `n` vertices with both endpoints on
/// the boundary.
///
/// Dirichlet: `k = 1..n-2`, entries `sin(pi j k / (n-1))` for `j = 1..n-2`.
/// Neumann (`L_R`): `k = 0..n-1`, entries `cos(pi j k / (n-1))` for `j = 0..n-1`.
/// The eigenvalue is `2 (1 - cos(pi k / (n-1)))` in both cases.
pub fn path_closed_form(n: usize, kind: PathKind) -> Result<Vec<PathEigenpair>> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let h = PI / (n - 1) as f64;
    let (ks, js) = match kind {
        PathKind::Dirichlet => (1..n - 1, 1..n - 1),
        PathKind::Neumann => (0..n, 0..n),
    };
    Ok(ks
        .map(|k| PathEigenpair {
            k,
            eigenvalue: 2.0 * (1.0 - (h * k as f64).cos()),
            vector: js
                .clone()
                .map(|j| {
                    let t = h * (j * k) as f64;
                    match kind {
                        PathKind::Dirichlet => t.sin(),
                        PathKind::Neumann => t.cos(),
                    }
                })
                .collect(),
        })
        .collect())
}
