//! Random graph generators and brute-force oracles shared by the integration
//! tests. The oracles work from raw edge lists and never call into the crate's
//! own cut or operator code.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reflap::BoundaryGraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected graph on `n` vertices: a random spanning tree plus each
/// remaining pair with probability `p`.
pub fn random_connected_edges(rng: &mut impl Rng, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        let (a, b) = (order[i], parent);
        edges.push((a.min(b), a.max(b)));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

pub enum BoundaryMode {
    Empty,
    All,
    Random,
}

pub fn random_boundary(rng: &mut impl Rng, n: usize, mode: BoundaryMode) -> Vec<usize> {
    match mode {
        BoundaryMode::Empty => vec![],
        BoundaryMode::All => (0..n).collect(),
        BoundaryMode::Random => (0..n).filter(|_| rng.gen_bool(0.4)).collect(),
    }
}

/// Connected boundary graph with `min_n <= n <= max_n`. Every tenth index has
/// an empty boundary and every tenth (offset 5) an all-boundary set.
pub fn random_boundary_graph(rng: &mut impl Rng, index: usize, min_n: usize, max_n: usize) -> BoundaryGraph {
    let n = rng.gen_range(min_n..=max_n);
    let p = rng.gen_range(0.1..0.6);
    let edges = random_connected_edges(rng, n, p);
    let mode = match index % 10 {
        0 => BoundaryMode::Empty,
        5 => BoundaryMode::All,
        _ => BoundaryMode::Random,
    };
    let boundary = random_boundary(rng, n, mode);
    BoundaryGraph::new(n, &edges, &boundary).unwrap()
}

/// `m(U, W)` in halves, counted over ordered pairs `(x in U, y in W)` joined by
/// an edge; pairs of two boundary vertices count one half.
pub fn oracle_measure(n: usize, edges: &[(usize, usize)], boundary: &[usize], u: &[usize], w: &[usize]) -> i64 {
    let in_b = |x: usize| boundary.contains(&x);
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let mut halves = 0;
    for &x in u {
        for &y in w {
            if adj[x][y] {
                halves += if in_b(x) && in_b(y) { 1 } else { 2 };
            }
        }
    }
    halves
}

/// Reflected Cheeger constant by plain enumeration of every nonempty proper
/// subset, returned as an unreduced `(cut, min_vol)` pair in halves.
pub fn oracle_reflected_cheeger(g: &BoundaryGraph) -> (i64, i64) {
    let n = g.n();
    let edges = g.edges().to_vec();
    let boundary = g.boundary();
    let all: Vec<usize> = (0..n).collect();
    let vol = |s: &[usize]| oracle_measure(n, &edges, &boundary, s, &all);
    let mut best: Option<(i64, i64)> = None;
    for mask in 1u64..(1 << n) - 1 {
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let t: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 0).collect();
        let cut = oracle_measure(n, &edges, &boundary, &s, &t);
        let den = vol(&s).min(vol(&t));
        if best.is_none_or(|(c, d)| cut * d < c * den) {
            best = Some((cut, den));
        }
    }
    best.unwrap()
}

/// Standard Cheeger constant (crossing edges over smaller degree sum) by
/// enumeration, as an unreduced `(cut, min_vol)` pair.
pub fn oracle_standard_cheeger(n: usize, edges: &[(usize, usize)]) -> (i64, i64) {
    let mut deg = vec![0i64; n];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    let total: i64 = deg.iter().sum();
    let mut best: Option<(i64, i64)> = None;
    for mask in 1u64..(1 << n) - 1 {
        let inside = |v: usize| mask >> v & 1 == 1;
        let cut = edges.iter().filter(|&&(a, b)| inside(a) != inside(b)).count() as i64;
        let vs: i64 = (0..n).filter(|&v| inside(v)).map(|v| deg[v]).sum();
        let den = vs.min(total - vs);
        if best.is_none_or(|(c, d)| cut * d < c * den) {
            best = Some((cut, den));
        }
    }
    best.unwrap()
}

/// `I - D^{-1/2} A D^{-1/2}` built directly from an edge list.
pub fn standard_normalized_laplacian(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<f64>> {
    let mut deg = vec![0.0f64; n];
    for &(a, b) in edges {
        deg[a] += 1.0;
        deg[b] += 1.0;
    }
    let mut m = vec![vec![0.0; n]; n];
    for (v, row) in m.iter_mut().enumerate() {
        row[v] = 1.0;
    }
    for &(a, b) in edges {
        let w = -1.0 / (deg[a] * deg[b]).sqrt();
        m[a][b] = w;
        m[b][a] = w;
    }
    m
}

/// Eigenvalues of a symmetric matrix via nalgebra, ascending.
pub fn nalgebra_eigenvalues(m: &reflap::Matrix) -> Vec<f64> {
    let n = m.rows();
    let dm = nalgebra::DMatrix::from_fn(n, n, |i, j| m[(i, j)]);
    let mut ev: Vec<f64> = dm.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

pub fn unit(x: &[f64]) -> Vec<f64> {
    let nrm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    x.iter().map(|v| v / nrm).collect()
}

/// `min(||a - b||_inf, ||a + b||_inf)` after normalizing both.
pub fn sign_free_distance(a: &[f64], b: &[f64]) -> f64 {
    let (a, b) = (unit(a), unit(b));
    let plus = a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    let minus = a.iter().zip(&b).map(|(x, y)| (x + y).abs()).fold(0.0, f64::max);
    plus.min(minus)
}
