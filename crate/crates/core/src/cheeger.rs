//! Boundary-weighted cut measure, volumes, and the Cheeger constant `h_R`.
//!
//! `m(U, W) = |E(U, W)| - |E(U ∩ ∂V, W ∩ ∂V)| / 2` and
//! `vol(U) = Σ_{u ∈ U} m({u}, V)`. All of these are half-integers and are
//! kept exact as [`Halves`]; cut ratios are exact rationals.

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::BoundaryGraph;
use crate::half::Halves;
use crate::spectra::reflected_spectrum;

/// Default ceiling on the vertex count for exhaustive search (2^21 subsets).
pub const DEFAULT_MAX_N: usize = 22;

/// Subsets are enumerated as `u64` bitmasks.
pub const HARD_MAX_N: usize = 63;

/// Slack allowed on both sides of the Cheeger inequality.
pub const THEOREM_TOL: f64 = 1e-9;

const CHUNK: u64 = 1 << 14;

/// A nonempty proper vertex subset with its exact cut statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    /// Sorted vertex indices.
    pub subset: Vec<usize>,
    pub cut_measure: Halves,
    pub vol_subset: Halves,
    pub vol_complement: Halves,
}

impl CutResult {
    /// Evaluates an arbitrary nonempty proper subset.
    pub fn evaluate(g: &BoundaryGraph, subset: &[usize]) -> Result<CutResult> {
        let inside = membership(g, subset)?;
        let k = inside.iter().filter(|&&b| b).count();
        if k == 0 || k == g.n() {
            return Err(Error::ImproperSubset);
        }
        let subset: Vec<usize> = (0..g.n()).filter(|&v| inside[v]).collect();
        let complement: Vec<usize> = (0..g.n()).filter(|&v| !inside[v]).collect();
        Ok(CutResult {
            cut_measure: measure(g, &inside, &inside.iter().map(|b| !b).collect::<Vec<_>>()),
            vol_subset: volume_of(g, &subset),
            vol_complement: volume_of(g, &complement),
            subset,
        })
    }

    pub fn denominator(&self) -> Halves {
        self.vol_subset.min(self.vol_complement)
    }

    /// `m(S, V \ S) / min(vol S, vol(V \ S))`. Panics on a zero volume,
    /// which cannot happen for graphs without isolated vertices.
    pub fn ratio(&self) -> Ratio<i64> {
        self.cut_measure.ratio(self.denominator())
    }

    pub fn ratio_f64(&self) -> f64 {
        let r = self.ratio();
        *r.numer() as f64 / *r.denom() as f64
    }

    /// Vertices not in the subset.
    pub fn complement(&self, n: usize) -> Vec<usize> {
        let mut inside = vec![false; n];
        self.subset.iter().for_each(|&v| inside[v] = true);
        (0..n).filter(|&v| !inside[v]).collect()
    }
}

fn membership(g: &BoundaryGraph, set: &[usize]) -> Result<Vec<bool>> {
    let mut inside = vec![false; g.n()];
    for &v in set {
        if v >= g.n() {
            return Err(Error::InvalidVertex { vertex: v, n: g.n() });
        }
        inside[v] = true;
    }
    Ok(inside)
}

fn measure(g: &BoundaryGraph, u: &[bool], w: &[bool]) -> Halves {
    let mut halves = 0;
    for &(a, b) in g.edges() {
        let weight = if g.is_boundary(a) && g.is_boundary(b) { 1 } else { 2 };
        halves += weight * ((u[a] && w[b]) as i64 + (u[b] && w[a]) as i64);
    }
    Halves::from_halves(halves)
}

/// `m({v}, V)` in halves: the degree, with boundary-boundary edges at ½.
fn vertex_halves(g: &BoundaryGraph, v: usize) -> i64 {
    let bb = if g.is_boundary(v) { g.boundary_degree(v) } else { 0 };
    2 * g.degree(v) as i64 - bb as i64
}

fn volume_of(g: &BoundaryGraph, set: &[usize]) -> Halves {
    set.iter().map(|&v| Halves::from_halves(vertex_halves(g, v))).sum()
}

/// The edge measure `m(U, W)`, summed over ordered pairs `(x in U, y in W)`
/// joined by an edge. An edge inside `U ∩ W` counts in both directions, so
/// `m` is additive in each argument and `m(U, V) = vol(U)`.
pub fn edge_measure(g: &BoundaryGraph, u: &[usize], w: &[usize]) -> Result<Halves> {
    Ok(measure(g, &membership(g, u)?, &membership(g, w)?))
}

/// `vol(U)`. Repeated vertices count once.
pub fn volume(g: &BoundaryGraph, u: &[usize]) -> Result<Halves> {
    let inside = membership(g, u)?;
    Ok(volume_of(g, &(0..g.n()).filter(|&v| inside[v]).collect::<Vec<_>>()))
}

/// Candidate cut during enumeration: `(cut halves, min volume halves, mask)`.
#[derive(Clone, Copy)]
struct Candidate {
    cut: i64,
    den: i64,
    mask: u64,
}

impl Candidate {
    /// Smaller ratio wins, then the smaller mask.
    fn better(self, other: Candidate) -> Candidate {
        let lhs = self.cut as i128 * other.den as i128;
        let rhs = other.cut as i128 * self.den as i128;
        if lhs < rhs || (lhs == rhs && self.mask < other.mask) {
            self
        } else {
            other
        }
    }
}

/// Exact `h_R` by enumerating every nonempty proper subset containing vertex
/// 0 (complements give the same ratio). Ties go to the smallest bitmask.
///
/// Fails with [`Error::Disconnected`] (carrying a zero-measure cut) on
/// disconnected graphs and [`Error::TooLarge`] above `max_n` vertices.
pub fn cheeger_exact(g: &BoundaryGraph, max_n: usize) -> Result<CutResult> {
    let n = g.n();
    let cap = max_n.min(HARD_MAX_N);
    if n > cap {
        return Err(Error::TooLarge { n, max_n: cap });
    }
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    g.require_connected()?;

    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)).collect();
    let bb: Vec<u64> = (0..n)
        .map(|v| {
            if !g.is_boundary(v) {
                return 0;
            }
            g.neighbors(v).iter().filter(|&&w| g.is_boundary(w)).fold(0, |m, &w| m | 1 << w)
        })
        .collect();
    let weight: Vec<i64> = (0..n).map(|v| vertex_halves(g, v)).collect();
    let total: i64 = weight.iter().sum();
    let full: u64 = (1 << n) - 1;

    let eval = |s: u64| -> Candidate {
        let out = !s & full;
        let (mut cut, mut vol) = (0i64, 0i64);
        let mut bits = s;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            cut += 2 * (adj[u] & out).count_ones() as i64 - (bb[u] & out).count_ones() as i64;
            vol += weight[u];
        }
        Candidate { cut, den: vol.min(total - vol), mask: s }
    };

    let count: u64 = 1 << (n - 1);
    let chunks = count.div_ceil(CHUNK);
    let best = (0..chunks)
        .into_par_iter()
        .filter_map(|c| {
            (c * CHUNK..((c + 1) * CHUNK).min(count))
                .map(|m| (m << 1) | 1)
                .filter(|&s| s != full)
                .map(eval)
                .reduce(Candidate::better)
        })
        .reduce_with(Candidate::better)
        .expect("n >= 2 leaves at least one proper subset");

    let subset: Vec<usize> = (0..n).filter(|&v| best.mask >> v & 1 == 1).collect();
    let vol_s: i64 = subset.iter().map(|&v| weight[v]).sum();
    Ok(CutResult {
        subset,
        cut_measure: Halves::from_halves(best.cut),
        vol_subset: Halves::from_halves(vol_s),
        vol_complement: Halves::from_halves(total - vol_s),
    })
}

/// Best prefix cut after sorting vertices by `values` (ascending, ties by
/// vertex index). Among equal ratios the shortest prefix wins.
pub fn sweep_cut(g: &BoundaryGraph, values: &[f64]) -> Result<CutResult> {
    let n = g.n();
    if values.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: values.len() });
    }
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    g.require_connected()?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));

    let weight: Vec<i64> = (0..n).map(|v| vertex_halves(g, v)).collect();
    let total: i64 = weight.iter().sum();
    let mut inside = vec![false; n];
    let (mut cut, mut vol) = (0i64, 0i64);
    let mut best: Option<(i64, i64, usize)> = None;

    for (j, &u) in order.iter().enumerate().take(n - 1) {
        for &w in g.neighbors(u) {
            let e = if g.is_boundary(u) && g.is_boundary(w) { 1 } else { 2 };
            cut += if inside[w] { -e } else { e };
        }
        inside[u] = true;
        vol += weight[u];
        let den = vol.min(total - vol);
        let improves = match best {
            None => true,
            Some((bc, bd, _)) => (cut as i128) * (bd as i128) < (bc as i128) * (den as i128),
        };
        if improves {
            best = Some((cut, den, j + 1));
        }
    }

    let (cut, _, len) = best.expect("n >= 2");
    let mut subset = order[..len].to_vec();
    subset.sort_unstable();
    let vol_s: i64 = subset.iter().map(|&v| weight[v]).sum();
    Ok(CutResult {
        subset,
        cut_measure: Halves::from_halves(cut),
        vol_subset: Halves::from_halves(vol_s),
        vol_complement: Halves::from_halves(total - vol_s),
    })
}

/// Both sides of `sqrt(2 λ_R) >= h_R >= λ_R / 2`, checked on one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct CheegerReport {
    /// An optimal cut; its ratio is `h_R`.
    pub optimal: CutResult,
    pub lambda_r: f64,
    /// Best prefix cut of the `λ_R` sweep vector.
    pub sweep: CutResult,
    pub upper: f64,
    pub lower: f64,
    /// Both inequalities hold within [`THEOREM_TOL`].
    pub holds: bool,
    /// The sweep cut ratio is at most `upper` within [`THEOREM_TOL`].
    pub sweep_within_upper: bool,
}

impl CheegerReport {
    pub fn h_r(&self) -> Ratio<i64> {
        self.optimal.ratio()
    }
}

/// Computes `λ_R`, the exact `h_R`, and the `λ_R` sweep cut, then checks the
/// Cheeger inequality. `tol` is the eigensolver tolerance.
pub fn verify_theorem(g: &BoundaryGraph, max_n: usize, tol: f64) -> Result<CheegerReport> {
    if g.n() < 2 {
        return Err(Error::TooSmall { n: g.n(), min: 2 });
    }
    g.require_connected()?;
    if g.n() > max_n.min(HARD_MAX_N) {
        return Err(Error::TooLarge { n: g.n(), max_n: max_n.min(HARD_MAX_N) });
    }
    let spectrum = reflected_spectrum(g, tol)?;
    let lambda_r = spectrum.lambda_r();
    let optimal = cheeger_exact(g, max_n)?;
    let sweep = sweep_cut(g, &spectrum.sweep_vector(1))?;

    let h = optimal.ratio_f64();
    let upper = (2.0 * lambda_r.max(0.0)).sqrt();
    let lower = lambda_r / 2.0;
    Ok(CheegerReport {
        holds: upper >= h - THEOREM_TOL && h >= lower - THEOREM_TOL,
        sweep_within_upper: sweep.ratio_f64() <= upper + THEOREM_TOL,
        optimal,
        lambda_r,
        sweep,
        upper,
        lower,
    })
}
