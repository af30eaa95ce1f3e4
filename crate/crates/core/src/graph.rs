//! Simple undirected graphs with a designated boundary vertex set, and the
//! doubling construction that mirrors the interior across the boundary.

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n` with a boundary set.
///
/// Edges are stored canonically as `(u, v)` with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    boundary: Vec<bool>,
    adj: Vec<Vec<usize>>,
}

impl BoundaryGraph {
    /// Validates and canonicalizes a graph. Repeated boundary indices are
    /// accepted; repeated edges (in either orientation) are not.
    pub fn new(n: usize, edges: &[(usize, usize)], boundary: &[usize]) -> Result<Self> {
        let mut canon = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut is_boundary = vec![false; n];
        for &b in boundary {
            if b >= n {
                return Err(Error::InvalidVertex { vertex: b, n });
            }
            is_boundary[b] = true;
        }

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &canon {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(BoundaryGraph { n, edges: canon, boundary: is_boundary, adj })
    }

    /// Same edges, different boundary.
    pub fn with_boundary(&self, boundary: &[usize]) -> Result<Self> {
        BoundaryGraph::new(self.n, &self.edges, boundary)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        self.boundary[v]
    }

    /// Boundary vertices in ascending order.
    pub fn boundary(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.boundary[v]).collect()
    }

    /// Interior vertices in ascending order.
    pub fn interior(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| !self.boundary[v]).collect()
    }

    pub fn boundary_len(&self) -> usize {
        self.boundary.iter().filter(|&&b| b).count()
    }

    pub fn interior_len(&self) -> usize {
        self.n - self.boundary_len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Number of interior neighbours of `v`.
    pub fn interior_degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&w| !self.boundary[w]).count()
    }

    /// Number of boundary neighbours of `v`.
    pub fn boundary_degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&w| self.boundary[w]).count()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Errors with [`Error::Disconnected`] carrying the component of vertex 0.
    pub fn require_connected(&self) -> Result<()> {
        let comps = self.components();
        if comps.len() > 1 {
            return Err(Error::Disconnected { component: comps.into_iter().next().unwrap() });
        }
        Ok(())
    }

    /// Dense 0/1 adjacency matrix in vertex order.
    pub fn adjacency_matrix(&self) -> crate::Matrix {
        let mut a = crate::Matrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            a[(u, v)] = 1.0;
            a[(v, u)] = 1.0;
        }
        a
    }

    /// Standard Laplacian `diag(deg) - A` in vertex order.
    pub fn laplacian(&self) -> crate::Matrix {
        let mut l = crate::Matrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            l[(u, v)] = -1.0;
            l[(v, u)] = -1.0;
        }
        for v in 0..self.n {
            l[(v, v)] = self.degree(v) as f64;
        }
        l
    }

    /// Subgraph induced on `subset`, relabeled `0..k` in ascending original
    /// order. Boundary membership is inherited. The second value maps each
    /// new index to its original vertex.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<(BoundaryGraph, Vec<usize>)> {
        let mut keep = subset.to_vec();
        for &v in &keep {
            if v >= self.n {
                return Err(Error::InvalidVertex { vertex: v, n: self.n });
            }
        }
        keep.sort_unstable();
        keep.dedup();

        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_index[u] != usize::MAX && new_index[v] != usize::MAX)
            .map(|&(u, v)| (new_index[u], new_index[v]))
            .collect();
        let boundary: Vec<_> =
            keep.iter().enumerate().filter(|&(_, &v)| self.boundary[v]).map(|(i, _)| i).collect();
        Ok((BoundaryGraph::new(keep.len(), &edges, &boundary)?, keep))
    }

    /// Builds the doubled graph: an isomorphic copy of the interior is appended
    /// after the original vertices (in ascending interior order) and attached
    /// to the boundary exactly as the original interior is.
    pub fn double(&self) -> DoubledGraph {
        let interior = self.interior();
        let mut copy_of = vec![None; self.n];
        for (rank, &v) in interior.iter().enumerate() {
            copy_of[v] = Some(self.n + rank);
        }

        let mut edges = self.edges.clone();
        for &(u, v) in &self.edges {
            match (copy_of[u], copy_of[v]) {
                // interior-interior: F
                (Some(cu), Some(cv)) => edges.push((cu, cv)),
                // interior-boundary: F'
                (Some(cu), None) => edges.push((v, cu)),
                (None, Some(cv)) => edges.push((u, cv)),
                (None, None) => {}
            }
        }
        let graph = BoundaryGraph::new(self.n + interior.len(), &edges, &self.boundary())
            .expect("doubling preserves simplicity");
        let mirror = interior.iter().map(|&v| (v, copy_of[v].unwrap())).collect();
        DoubledGraph { graph, original_n: self.n, mirror }
    }
}

/// The doubled graph together with the interior mirror map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubledGraph {
    graph: BoundaryGraph,
    original_n: usize,
    mirror: Vec<(usize, usize)>,
}

impl DoubledGraph {
    /// The doubled graph; its boundary is the original boundary.
    pub fn graph(&self) -> &BoundaryGraph {
        &self.graph
    }

    /// Vertex count of the graph that was doubled. Original vertices keep
    /// their indices `0..original_n`.
    pub fn original_n(&self) -> usize {
        self.original_n
    }

    /// `(interior vertex, copy)` pairs in ascending interior order.
    pub fn mirror(&self) -> &[(usize, usize)] {
        &self.mirror
    }

    pub fn mirror_of(&self, v: usize) -> Option<usize> {
        self.mirror.iter().find(|&&(a, _)| a == v).map(|&(_, c)| c)
    }

    /// Inverse of [`mirror_of`](Self::mirror_of).
    pub fn original_of(&self, copy: usize) -> Option<usize> {
        let rank = copy.checked_sub(self.original_n)?;
        self.mirror.get(rank).map(|&(v, _)| v)
    }

    /// The reflection permutation: fixes the boundary, swaps each interior
    /// vertex with its copy.
    pub fn reflection(&self) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.graph.n()).collect();
        for &(v, c) in &self.mirror {
            p[v] = c;
            p[c] = v;
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> BoundaryGraph {
        BoundaryGraph::new(4, &[(0, 1), (1, 2), (2, 3)], &[0, 3]).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(BoundaryGraph::new(3, &[(0, 0)], &[]), Err(Error::SelfLoop(0)));
        assert_eq!(
            BoundaryGraph::new(3, &[(0, 3)], &[]),
            Err(Error::InvalidVertex { vertex: 3, n: 3 })
        );
        assert_eq!(
            BoundaryGraph::new(3, &[(0, 1), (1, 0)], &[]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            BoundaryGraph::new(3, &[], &[5]),
            Err(Error::InvalidVertex { vertex: 5, n: 3 })
        );
    }

    #[test]
    fn canonical_form() {
        let g = BoundaryGraph::new(4, &[(3, 2), (1, 0), (2, 1)], &[3, 0, 0]).unwrap();
        assert_eq!(g, p4());
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.boundary(), vec![0, 3]);
        assert_eq!(g.interior(), vec![1, 2]);
    }

    #[test]
    fn single_vertex_is_valid() {
        let g = BoundaryGraph::new(1, &[], &[]).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn double_p4_is_six_cycle() {
        let dg = p4().double();
        let g = dg.graph();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 6);
        assert!((0..6).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
        assert_eq!(dg.mirror(), &[(1, 4), (2, 5)]);
        assert_eq!(g.boundary(), vec![0, 3]);
        assert!(g.has_edge(0, 4) && g.has_edge(4, 5) && g.has_edge(5, 3));
    }

    #[test]
    fn double_all_boundary_is_identity() {
        let g = BoundaryGraph::new(3, &[(0, 1), (1, 2), (0, 2)], &[0, 1, 2]).unwrap();
        let dg = g.double();
        assert_eq!(dg.graph(), &g);
        assert!(dg.mirror().is_empty());
        assert_eq!(dg.reflection(), vec![0, 1, 2]);
    }

    #[test]
    fn double_path_two_has_no_interior() {
        let g = BoundaryGraph::new(2, &[(0, 1)], &[0, 1]).unwrap();
        assert_eq!(g.double().graph(), &g);
    }

    #[test]
    fn mirror_round_trip() {
        let g = BoundaryGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)], &[2]).unwrap();
        let dg = g.double();
        for v in g.interior() {
            let c = dg.mirror_of(v).unwrap();
            assert_eq!(dg.original_of(c), Some(v));
        }
        assert_eq!(dg.mirror_of(2), None);
        assert_eq!(dg.original_of(2), None);
        let p = dg.reflection();
        assert!((0..p.len()).all(|i| p[p[i]] == i));
    }

    #[test]
    fn doubled_degrees() {
        let g = BoundaryGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3), (0, 4)], &[0, 4])
            .unwrap();
        let dg = g.double();
        for v in 0..g.n() {
            let expect = if g.is_boundary(v) {
                g.degree(v) + g.interior_degree(v)
            } else {
                g.degree(v)
            };
            assert_eq!(dg.graph().degree(v), expect, "vertex {v}");
        }
    }

    #[test]
    fn induced_subgraphs() {
        let (sub, map) = p4().induced_subgraph(&[1, 2]).unwrap();
        assert_eq!(sub, BoundaryGraph::new(2, &[(0, 1)], &[]).unwrap());
        assert_eq!(map, vec![1, 2]);

        let (same, map) = p4().induced_subgraph(&[3, 2, 1, 0]).unwrap();
        assert_eq!(same, p4());
        assert_eq!(map, vec![0, 1, 2, 3]);

        let c4 = BoundaryGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], &[]).unwrap();
        let (sub, map) = c4.induced_subgraph(&[0, 1, 3]).unwrap();
        // surviving edges {0,1} and {0,3}; 3 relabels to 2
        assert_eq!(sub.edges(), &[(0, 1), (0, 2)]);
        assert_eq!(map, vec![0, 1, 3]);

        assert_eq!(
            p4().induced_subgraph(&[4]).unwrap_err(),
            Error::InvalidVertex { vertex: 4, n: 4 }
        );
    }

    #[test]
    fn components_report() {
        let g = BoundaryGraph::new(4, &[(0, 1), (2, 3)], &[]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(g.require_connected(), Err(Error::Disconnected { component: vec![0, 1] }));
    }
}
