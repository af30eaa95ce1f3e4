//! Library results against frozen hand-derived values and brute-force oracles.

mod common;

use common::*;
use rand::Rng;
use reflap::{
    cheeger_exact, dirichlet_spectrum, edge_measure, generate, reflected_spectrum, sweep_cut, sym_eig,
    verify_theorem, volume, BoundaryGraph, BoundarySpec, GraphKind, Halves, Matrix, OperatorSet, Ratio,
};

fn path(n: usize, spec: BoundarySpec) -> BoundaryGraph {
    generate(GraphKind::Path(n), &spec).unwrap()
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

#[test]
fn frozen_p4_endpoints() {
    let g = path(4, BoundarySpec::Endpoints);
    let s = reflected_spectrum(&g, 1e-12).unwrap();
    assert!(close(s.eigenvalues(), &[0.0, 0.5, 1.5, 2.0], 1e-12));

    let cut = cheeger_exact(&g, 22).unwrap();
    assert_eq!(cut.subset, vec![0, 1]);
    assert_eq!(cut.cut_measure, Halves::from_int(1));
    assert_eq!((cut.vol_subset, cut.vol_complement), (Halves::from_int(3), Halves::from_int(3)));
    assert_eq!(cut.ratio(), Ratio::new(1, 3));

    let r = verify_theorem(&g, 22, 1e-12).unwrap();
    assert!((r.lambda_r - 0.5).abs() < 1e-12);
    assert!((r.upper - 1.0).abs() < 1e-12 && (r.lower - 0.25).abs() < 1e-12);
    assert!(r.holds && r.sweep_within_upper);
    assert_eq!(r.sweep.ratio(), Ratio::new(1, 3));
}

#[test]
fn frozen_p3_endpoints() {
    // doubles to C4: even spectrum of L'/2 is {0, 1, 2}, odd part is L_D = [2]
    let g = path(3, BoundarySpec::Endpoints);
    let s = reflected_spectrum(&g, 1e-12).unwrap();
    assert!(close(s.eigenvalues(), &[0.0, 1.0, 2.0], 1e-12));
    assert!(close(&dirichlet_spectrum(&g, 1e-12).unwrap().eigenvalues, &[2.0], 1e-12));
    assert_eq!(volume(&g, &[0, 1, 2]).unwrap(), Halves::from_int(4));
    assert_eq!(cheeger_exact(&g, 22).unwrap().ratio(), Ratio::from_integer(1));
}

#[test]
fn frozen_c6_and_p4_free() {
    let c6 = generate(GraphKind::Cycle(6), &BoundarySpec::None).unwrap();
    let r = verify_theorem(&c6, 22, 1e-12).unwrap();
    assert!((r.lambda_r - 0.5).abs() < 1e-12);
    assert_eq!(r.h_r(), Ratio::new(1, 3));
    assert_eq!(r.optimal.subset.len(), 3);

    let p4 = path(4, BoundarySpec::None);
    let cut = cheeger_exact(&p4, 22).unwrap();
    assert_eq!(cut.ratio(), Ratio::new(1, 3));
    assert_eq!(cut.subset, vec![0, 1]);
}

#[test]
fn frozen_triangle_half_edge() {
    let tri = BoundaryGraph::new(3, &[(0, 1), (1, 2), (0, 2)], &[0, 1]).unwrap();
    assert_eq!(edge_measure(&tri, &[0], &[1]).unwrap(), Halves::from_halves(1));
    // d = [3, 3, 2], q = [1/2, 1/2, 1]: vol(V) = 3/2 + 3/2 + 2
    assert_eq!(volume(&tri, &[0, 1, 2]).unwrap(), Halves::from_int(5));
    let ops = OperatorSet::assemble(&tri).unwrap();
    assert_eq!(ops.d, vec![2.0, 3.0, 3.0]);
}

#[test]
fn measure_matches_oracle() {
    let mut rng = rng(11);
    for i in 0..200 {
        let g = random_boundary_graph(&mut rng, i, 2, 10);
        let n = g.n();
        let u: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        let w: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        let expect = oracle_measure(n, g.edges(), &g.boundary(), &u, &w);
        assert_eq!(edge_measure(&g, &u, &w).unwrap().halves(), expect);
        let all: Vec<usize> = (0..n).collect();
        let vol = oracle_measure(n, g.edges(), &g.boundary(), &u, &all);
        assert_eq!(volume(&g, &u).unwrap().halves(), vol);
    }
}

#[test]
fn exact_cheeger_matches_oracle() {
    let mut rng = rng(12);
    for i in 0..150 {
        let g = random_boundary_graph(&mut rng, i, 2, 9);
        let (cut, den) = oracle_reflected_cheeger(&g);
        let got = cheeger_exact(&g, 22).unwrap();
        assert_eq!(got.ratio(), Ratio::new(cut, den), "graph {i}: {g:?}");
        assert_eq!(got.cut_measure.halves(), oracle_measure(g.n(), g.edges(), &g.boundary(), &got.subset, &got.complement(g.n())));
    }
}

#[test]
fn free_boundary_matches_standard_cheeger() {
    let mut rng = rng(13);
    for _ in 0..100 {
        let n = rng.gen_range(2..=10);
        let edges = random_connected_edges(&mut rng, n, 0.3);
        let g = BoundaryGraph::new(n, &edges, &[]).unwrap();
        let (cut, den) = oracle_standard_cheeger(n, &edges);
        assert_eq!(cheeger_exact(&g, 22).unwrap().ratio(), Ratio::new(cut, den));
    }
}

#[test]
fn sweep_of_optimal_indicator_recovers_h() {
    let mut rng = rng(14);
    for i in 0..100 {
        let g = random_boundary_graph(&mut rng, i, 2, 10);
        let best = cheeger_exact(&g, 22).unwrap();
        let values: Vec<f64> = (0..g.n()).map(|v| if best.subset.contains(&v) { -1.0 } else { 1.0 }).collect();
        assert_eq!(sweep_cut(&g, &values).unwrap().ratio(), best.ratio());
    }
}

#[test]
fn jacobi_matches_nalgebra() {
    let mut rng = rng(15);
    for _ in 0..60 {
        let n = rng.gen_range(1..=14);
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let x: f64 = rng.gen_range(-3.0..3.0);
                m[(i, j)] = x;
            }
        }
        let m = Matrix::from_rows(&(0..n).map(|i| (0..n).map(|j| m[(i.min(j), i.max(j))]).collect::<Vec<_>>()).collect::<Vec<_>>());
        let ours = sym_eig(&m, 1e-12).unwrap();
        let theirs = nalgebra_eigenvalues(&m);
        assert!(close(&ours.eigenvalues, &theirs, 1e-9 * m.frobenius_norm().max(1.0)));
    }
}

#[test]
fn reflected_eigenvalues_match_nalgebra() {
    let mut rng = rng(16);
    for i in 0..100 {
        let g = random_boundary_graph(&mut rng, i, 2, 10);
        let ops = OperatorSet::assemble(&g).unwrap();
        let ours = reflected_spectrum(&g, 1e-12).unwrap();
        assert!(close(ours.eigenvalues(), &nalgebra_eigenvalues(&ops.sym), 1e-9));
    }
}
