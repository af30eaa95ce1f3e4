//! Matrix operators of a boundary graph.
//!
//! All matrices in [`OperatorSet`] and [`AdjacencyBlocks`] use the block
//! ordering "interior vertices ascending, then boundary vertices ascending".
//! [`BlockOrdering`] converts between that ordering and vertex indices.

use crate::error::{Error, Result};
use crate::graph::BoundaryGraph;
use crate::matrix::Matrix;

/// Permutation between graph vertex indices and block positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
    interior_len: usize,
}

impl BlockOrdering {
    pub fn new(g: &BoundaryGraph) -> Self {
        let mut order = g.interior();
        let interior_len = order.len();
        order.extend(g.boundary());
        let mut position = vec![0; order.len()];
        for (p, &v) in order.iter().enumerate() {
            position[v] = p;
        }
        BlockOrdering { order, position, interior_len }
    }

    /// Block position -> vertex.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Vertex -> block position.
    pub fn position(&self) -> &[usize] {
        &self.position
    }

    pub fn interior_len(&self) -> usize {
        self.interior_len
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Reindexes a block-ordered square matrix by vertex.
    pub fn to_vertex_order(&self, m: &Matrix) -> Matrix {
        m.permuted(&self.position)
    }

    /// Reindexes a vertex-ordered square matrix into block order.
    pub fn to_block_order(&self, m: &Matrix) -> Matrix {
        m.permuted(&self.order)
    }

    pub fn vec_to_vertex_order(&self, x: &[f64]) -> Vec<f64> {
        self.position.iter().map(|&p| x[p]).collect()
    }

    pub fn vec_to_block_order(&self, x: &[f64]) -> Vec<f64> {
        self.order.iter().map(|&v| x[v]).collect()
    }
}

/// The adjacency matrix split into interior/boundary blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjacencyBlocks {
    /// Interior x interior.
    pub a11: Matrix,
    /// Interior x boundary.
    pub a12: Matrix,
    /// Boundary x boundary.
    pub a22: Matrix,
    pub ordering: BlockOrdering,
}

impl AdjacencyBlocks {
    /// Reassembles `[[a11, a12], [a12^T, a22]]` in block order.
    pub fn assembled(&self) -> Matrix {
        let ni = self.a11.rows();
        let n = ni + self.a22.rows();
        let mut a = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                a[(i, j)] = match (i < ni, j < ni) {
                    (true, true) => self.a11[(i, j)],
                    (true, false) => self.a12[(i, j - ni)],
                    (false, true) => self.a12[(j, i - ni)],
                    (false, false) => self.a22[(i - ni, j - ni)],
                };
            }
        }
        a
    }
}

pub fn adjacency_blocks(g: &BoundaryGraph) -> AdjacencyBlocks {
    let ordering = BlockOrdering::new(g);
    let a = g.adjacency_matrix();
    let interior = &ordering.order[..ordering.interior_len];
    let boundary = &ordering.order[ordering.interior_len..];
    AdjacencyBlocks {
        a11: a.select(interior, interior),
        a12: a.select(interior, boundary),
        a22: a.select(boundary, boundary),
        ordering,
    }
}

/// Every operator built from a boundary graph, in block order.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorSet {
    pub ordering: BlockOrdering,
    /// Reflected adjacency: boundary-to-interior entries doubled.
    pub r: Matrix,
    /// `R * 1`, the diagonal of D. Equals the degree in the doubled graph.
    pub d: Vec<f64>,
    /// Diagonal of Q: 1 on interior, 1/2 on boundary.
    pub q: Vec<f64>,
    /// Standard Laplacian of the graph.
    pub l: Matrix,
    /// Laplacian of the subgraph induced on the boundary, zero elsewhere.
    pub l_boundary: Matrix,
    /// Reflected Neumann Laplacian `D - R`.
    pub l_r: Matrix,
    /// Dirichlet Laplacian, the interior block of `l` (interior x interior).
    pub l_d: Matrix,
    /// `D^{-1/2} L_R D^{-1/2}`.
    pub l_r_norm: Matrix,
    /// `(DQ)^{-1/2} (L - L_boundary / 2) (DQ)^{-1/2}`, symmetric and
    /// similar to `l_r_norm`.
    pub sym: Matrix,
}

struct Unnormalized {
    ordering: BlockOrdering,
    r: Matrix,
    d: Vec<f64>,
    q: Vec<f64>,
    l: Matrix,
    l_boundary: Matrix,
    l_r: Matrix,
}

fn unnormalized(g: &BoundaryGraph) -> Unnormalized {
    let blocks = adjacency_blocks(g);
    let a = blocks.assembled();
    let ordering = blocks.ordering;
    let n = ordering.len();
    let ni = ordering.interior_len;

    let mut r = a.clone();
    for i in ni..n {
        for j in 0..ni {
            r[(i, j)] *= 2.0;
        }
    }
    let d = r.row_sums();
    let q: Vec<f64> = (0..n).map(|i| if i < ni { 1.0 } else { 0.5 }).collect();

    let mut l = a.scale(&vec![-1.0; n], &vec![1.0; n]);
    for (i, deg) in a.row_sums().into_iter().enumerate() {
        l[(i, i)] = deg;
    }

    let mut l_boundary = Matrix::zeros(n, n);
    for i in ni..n {
        for j in ni..n {
            if i != j && a[(i, j)] != 0.0 {
                l_boundary[(i, j)] = -1.0;
                l_boundary[(i, i)] += 1.0;
            }
        }
    }

    let mut l_r = r.scale(&vec![-1.0; n], &vec![1.0; n]);
    for (i, &di) in d.iter().enumerate() {
        l_r[(i, i)] += di;
    }

    Unnormalized { ordering, r, d, q, l, l_boundary, l_r }
}

impl OperatorSet {
    /// Assembles every operator. Fails with [`Error::IsolatedVertex`] if some
    /// vertex has no neighbours, since the normalized forms need `D > 0`.
    pub fn assemble(g: &BoundaryGraph) -> Result<Self> {
        let u = unnormalized(g);
        if let Some(p) = u.d.iter().position(|&x| x == 0.0) {
            return Err(Error::IsolatedVertex(u.ordering.order[p]));
        }
        let ni = u.ordering.interior_len;
        let interior: Vec<usize> = (0..ni).collect();
        let l_d = u.l.select(&interior, &interior);

        let l_r_norm = normalize(&u.l_r, &u.d);
        let dq: Vec<f64> = u.d.iter().zip(&u.q).map(|(d, q)| d * q).collect();
        let sym = normalize(&u.l.add_scaled(-0.5, &u.l_boundary), &dq);

        Ok(OperatorSet {
            ordering: u.ordering,
            r: u.r,
            d: u.d,
            q: u.q,
            l: u.l,
            l_boundary: u.l_boundary,
            l_r: u.l_r,
            l_d,
            l_r_norm,
            sym,
        })
    }

    /// `Q * L_R`, which equals `L - L_boundary / 2` exactly.
    pub fn q_l_r(&self) -> Matrix {
        self.l_r.scale(&self.q, &vec![1.0; self.q.len()])
    }

    /// `m({v}, V) = d[v] * q[v]` per block position.
    pub fn vertex_measure(&self) -> Vec<f64> {
        self.d.iter().zip(&self.q).map(|(d, q)| d * q).collect()
    }
}

/// `W^{-1/2} M W^{-1/2}` for diagonal `W`, entrywise as `m_ij / sqrt(w_i w_j)`.
fn normalize(m: &Matrix, w: &[f64]) -> Matrix {
    let mut out = m.clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out[(i, j)] = m[(i, j)] / (w[i] * w[j]).sqrt();
        }
    }
    out
}

/// Reflected Neumann Laplacian `L_R = D - R` indexed by vertex. Defined even
/// when the graph has isolated vertices.
pub fn reflected_laplacian(g: &BoundaryGraph) -> Matrix {
    let u = unnormalized(g);
    u.ordering.to_vertex_order(&u.l_r)
}

/// Dirichlet Laplacian on the interior, rows and columns in ascending
/// interior-vertex order: `diag(deg) - A11`.
pub fn dirichlet_laplacian(g: &BoundaryGraph) -> Result<Matrix> {
    let interior = g.interior();
    if interior.is_empty() {
        return Err(Error::EmptyInterior);
    }
    Ok(g.laplacian().select(&interior, &interior))
}
