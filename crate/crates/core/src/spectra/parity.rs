//! Even/odd classification of the doubled graph's Laplacian eigenvectors.
//!
//! The reflection `P` (boundary fixed, each interior vertex swapped with its
//! copy) commutes with the doubled Laplacian, so every eigenspace is
//! `P`-invariant and splits into `+1` (even) and `-1` (odd) parts. Parity is
//! decided per eigenspace, never per raw solver vector: inside a degenerate
//! cluster the solver's basis may mix parities.

use crate::error::{Error, Result};
use crate::graph::DoubledGraph;
use crate::matrix::Matrix;

use super::{sym_eig, DEFAULT_TOL};

/// Default gap separating eigenvalue clusters.
pub const DEFAULT_CLUSTER_GAP: f64 = 1e-8;

/// Eigenvalues of `P` restricted to a cluster must be this close to +-1.
const INVOLUTION_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct ParityCluster {
    /// Mean of the clustered eigenvalues.
    pub eigenvalue: f64,
    pub multiplicity: usize,
    pub even_dim: usize,
    pub odd_dim: usize,
    /// Orthonormal even eigenvectors on the doubled graph's vertices.
    pub even_basis: Vec<Vec<f64>>,
    /// Orthonormal odd eigenvectors on the doubled graph's vertices.
    pub odd_basis: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParityReport {
    pub even_count: usize,
    pub odd_count: usize,
    pub clusters: Vec<ParityCluster>,
}

/// Splits every eigenspace of the doubled graph's Laplacian into even and odd
/// parts. `tol` is the eigenvalue gap that separates clusters.
pub fn parity_classify(dg: &DoubledGraph, tol: f64) -> Result<ParityReport> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    let lap = dg.graph().laplacian();
    let p = dg.reflection();
    let n = p.len();

    // P L P^T = L, entries are small integers so compare exactly
    for i in 0..n {
        for j in 0..n {
            if lap[(p[i], p[j])] != lap[(i, j)] {
                return Err(Error::ReflectionMismatch);
            }
        }
    }

    let spec = sym_eig(&lap, DEFAULT_TOL)?;
    let floor = spec.max_residual();
    if tol <= 10.0 * floor {
        return Err(Error::ClusteringAmbiguous {
            eigenvalue: f64::NAN,
            detail: format!("gap {tol:e} is below the residual floor {floor:e}"),
        });
    }

    let mut clusters = Vec::new();
    let mut start = 0;
    for end in 1..=n {
        if end < n && spec.eigenvalues[end] - spec.eigenvalues[end - 1] <= tol {
            continue;
        }
        clusters.push(split_cluster(&spec.eigenvectors, &spec.eigenvalues, start..end, &p)?);
        start = end;
    }

    Ok(ParityReport {
        even_count: clusters.iter().map(|c| c.even_dim).sum(),
        odd_count: clusters.iter().map(|c| c.odd_dim).sum(),
        clusters,
    })
}

fn split_cluster(
    vectors: &Matrix,
    values: &[f64],
    range: std::ops::Range<usize>,
    p: &[usize],
) -> Result<ParityCluster> {
    let n = p.len();
    let cols: Vec<usize> = range.clone().collect();
    let k = cols.len();
    let eigenvalue = values[range].iter().sum::<f64>() / k as f64;
    let basis = vectors.select(&(0..n).collect::<Vec<_>>(), &cols);

    // B = V^T P V on the cluster
    let mut b = Matrix::zeros(k, k);
    for a in 0..k {
        for c in 0..k {
            b[(a, c)] = (0..n).map(|i| basis[(i, a)] * basis[(p[i], c)]).sum();
        }
    }
    let bt = b.transpose();
    let b = b.add_scaled(1.0, &bt).scale(&vec![0.5; k], &vec![1.0; k]);
    let split = sym_eig(&b, DEFAULT_TOL)?;

    let mut even_basis = Vec::new();
    let mut odd_basis = Vec::new();
    for (idx, &mu) in split.eigenvalues.iter().enumerate() {
        let w = split.eigenvector(idx);
        let mut x = basis.mul_vec(&w);
        super::jacobi::orient(&mut x);
        if (mu - 1.0).abs() <= INVOLUTION_TOL {
            even_basis.push(x);
        } else if (mu + 1.0).abs() <= INVOLUTION_TOL {
            odd_basis.push(x);
        } else {
            return Err(Error::ClusteringAmbiguous {
                eigenvalue,
                detail: format!("reflection restricted to the cluster has eigenvalue {mu}, not +-1"),
            });
        }
    }
    Ok(ParityCluster {
        eigenvalue,
        multiplicity: k,
        even_dim: even_basis.len(),
        odd_dim: odd_basis.len(),
        even_basis,
        odd_basis,
    })
}
