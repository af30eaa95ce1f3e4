//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! Each sweep visits every off-diagonal pair `(p, q)` in row order and
//! applies the plane rotation that annihilates `a[p][q]`. Iteration stops once
//! the off-diagonal Frobenius norm falls below `tol * ||M||_F`.

use crate::error::{Error, Result};
use crate::matrix::{norm, Matrix};

use super::Spectrum;

pub const MAX_SWEEPS: usize = 100;

/// Components at or below this magnitude are skipped by the sign convention.
const SIGN_EPS: f64 = 1e-12;

/// Full eigendecomposition of a symmetric matrix.
///
/// Eigenvalues are ascending (ties keep the solver's order), eigenvectors are
/// orthonormal columns whose first non-negligible component is positive.
pub fn sym_eig(m: &Matrix, tol: f64) -> Result<Spectrum> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    m.check_symmetric(1e-12)?;
    let n = m.rows();

    let mut a = m.clone();
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (a[(i, j)] + a[(j, i)]);
            a[(i, j)] = avg;
            a[(j, i)] = avg;
        }
    }
    let mut v = Matrix::identity(n);
    let target = tol * m.frobenius_norm();

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]).then(i.cmp(&j)));

    let eigenvalues: Vec<f64> = idx.iter().map(|&i| a[(i, i)]).collect();
    let vectors: Vec<Vec<f64>> = idx
        .iter()
        .map(|&i| {
            let mut x = v.column(i);
            orient(&mut x);
            x
        })
        .collect();
    let residuals = eigenvalues
        .iter()
        .zip(&vectors)
        .map(|(&lam, x)| {
            let mx = m.mul_vec(x);
            let r: Vec<f64> = mx.iter().zip(x).map(|(a, b)| a - lam * b).collect();
            norm(&r)
        })
        .collect();

    Ok(Spectrum { eigenvalues, eigenvectors: Matrix::from_columns(&vectors), residuals })
}

/// Flips `x` so that its first component with magnitude above 1e-12 is positive.
pub(crate) fn orient(x: &mut [f64]) {
    if let Some(&first) = x.iter().find(|c| c.abs() > SIGN_EPS) {
        if first < 0.0 {
            x.iter_mut().for_each(|c| *c = -*c);
        }
    }
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)] * a[(i, j)];
            }
        }
    }
    s.sqrt()
}

fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == 0.0 {
        return;
    }
    let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        let t = 1.0 / (theta.abs() + (theta * theta + 1.0).sqrt());
        if theta < 0.0 {
            -t
        } else {
            t
        }
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = a.rows();

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}
