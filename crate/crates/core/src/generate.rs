//! Named graph families and boundary rules.
//!
//! Vertex numbering:
//! * path: `0..n` in order along the path;
//! * cycle: `0..n` around the cycle;
//! * grid: row-major, vertex `(row, col)` is `row * cols + col`;
//! * barbell: first clique `0..k`, then the bridge path, then the second
//!   clique. The bridge joins clique vertex `k - 1` to the first vertex of
//!   the second clique.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::BoundaryGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Path(usize),
    Cycle(usize),
    Grid { rows: usize, cols: usize },
    Barbell { clique: usize, bridge: usize },
}

/// Rule selecting the boundary vertices of a generated graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundarySpec {
    None,
    /// First and last vertex of a path.
    Endpoints,
    List(Vec<usize>),
    /// The `depth` leftmost and `depth` rightmost grid columns.
    Columns(usize),
    /// The `depth` top and `depth` bottom grid rows.
    Rows(usize),
}

impl GraphKind {
    pub fn vertex_count(&self) -> usize {
        match *self {
            GraphKind::Path(n) | GraphKind::Cycle(n) => n,
            GraphKind::Grid { rows, cols } => rows * cols,
            GraphKind::Barbell { clique, bridge } => 2 * clique + bridge,
        }
    }

    fn edges(&self) -> Result<Vec<(usize, usize)>> {
        let edges = match *self {
            GraphKind::Path(n) => {
                if n == 0 {
                    return Err(Error::InvalidSpec("path needs at least 1 vertex".into()));
                }
                (1..n).map(|i| (i - 1, i)).collect()
            }
            GraphKind::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidSpec("cycle needs at least 3 vertices".into()));
                }
                (0..n).map(|i| (i, (i + 1) % n)).collect()
            }
            GraphKind::Grid { rows, cols } => {
                if rows == 0 || cols == 0 {
                    return Err(Error::InvalidSpec("grid dimensions must be positive".into()));
                }
                let mut e = Vec::with_capacity(rows * (cols - 1) + cols * (rows - 1));
                for r in 0..rows {
                    for c in 0..cols {
                        let v = r * cols + c;
                        if c + 1 < cols {
                            e.push((v, v + 1));
                        }
                        if r + 1 < rows {
                            e.push((v, v + cols));
                        }
                    }
                }
                e
            }
            GraphKind::Barbell { clique, bridge } => {
                if clique == 0 {
                    return Err(Error::InvalidSpec("barbell clique size must be positive".into()));
                }
                let second = clique + bridge;
                let mut e = Vec::new();
                for offset in [0, second] {
                    for i in 0..clique {
                        for j in (i + 1)..clique {
                            e.push((offset + i, offset + j));
                        }
                    }
                }
                let chain: Vec<usize> =
                    std::iter::once(clique - 1).chain(clique..second).chain([second]).collect();
                e.extend(chain.windows(2).map(|w| (w[0], w[1])));
                e
            }
        };
        Ok(edges)
    }

    /// Planar layout for plotting.
    ///
    /// Grids use `x = column`, `y = row`; paths lie on the x-axis; cycles on the
    /// unit circle; barbell cliques on unit circles joined by a straight bridge.
    pub fn coordinates(&self) -> Vec<(f64, f64)> {
        match *self {
            GraphKind::Path(n) => (0..n).map(|i| (i as f64, 0.0)).collect(),
            GraphKind::Cycle(n) => (0..n)
                .map(|i| {
                    let t = 2.0 * PI * i as f64 / n as f64;
                    (t.cos(), t.sin())
                })
                .collect(),
            GraphKind::Grid { rows, cols } => (0..rows * cols)
                .map(|v| ((v % cols) as f64, (v / cols) as f64))
                .collect(),
            GraphKind::Barbell { clique, bridge } => {
                let k = clique as f64;
                let mut pts = Vec::with_capacity(2 * clique + bridge);
                for i in 0..clique {
                    let t = 2.0 * PI * (i as f64 - (k - 1.0)) / k;
                    pts.push((t.cos(), t.sin()));
                }
                for t in 0..bridge {
                    pts.push((2.0 + t as f64, 0.0));
                }
                let cx = bridge as f64 + 3.0;
                for i in 0..clique {
                    let t = PI + 2.0 * PI * i as f64 / k;
                    pts.push((cx + t.cos(), t.sin()));
                }
                pts
            }
        }
    }

    fn boundary(&self, spec: &BoundarySpec) -> Result<Vec<usize>> {
        let n = self.vertex_count();
        match (spec, *self) {
            (BoundarySpec::None, _) => Ok(Vec::new()),
            (BoundarySpec::List(list), _) => Ok(list.clone()),
            (BoundarySpec::Endpoints, GraphKind::Path(n)) => {
                Ok(if n == 1 { vec![0] } else { vec![0, n - 1] })
            }
            (BoundarySpec::Columns(depth), GraphKind::Grid { cols, .. }) if *depth > 0 => {
                Ok((0..n)
                    .filter(|v| {
                        let c = v % cols;
                        c < *depth || c + depth >= cols
                    })
                    .collect())
            }
            (BoundarySpec::Rows(depth), GraphKind::Grid { rows, cols }) if *depth > 0 => {
                Ok((0..n)
                    .filter(|v| {
                        let r = v / cols;
                        r < *depth || r + depth >= rows
                    })
                    .collect())
            }
            (spec, kind) => Err(Error::InvalidSpec(format!("boundary rule {spec} does not apply to {kind}"))),
        }
    }
}

/// Generates a named graph with the requested boundary.
pub fn generate(kind: GraphKind, boundary: &BoundarySpec) -> Result<BoundaryGraph> {
    let edges = kind.edges()?;
    let boundary = kind.boundary(boundary)?;
    BoundaryGraph::new(kind.vertex_count(), &edges, &boundary)
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Path(n) => write!(f, "path({n})"),
            GraphKind::Cycle(n) => write!(f, "cycle({n})"),
            GraphKind::Grid { rows, cols } => write!(f, "grid({rows}, {cols})"),
            GraphKind::Barbell { clique, bridge } => write!(f, "barbell({clique}, {bridge})"),
        }
    }
}

impl fmt::Display for BoundarySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundarySpec::None => write!(f, "none"),
            BoundarySpec::Endpoints => write!(f, "endpoints"),
            BoundarySpec::Columns(1) => write!(f, "cols"),
            BoundarySpec::Columns(d) => write!(f, "cols:{d}"),
            BoundarySpec::Rows(1) => write!(f, "rows"),
            BoundarySpec::Rows(d) => write!(f, "rows:{d}"),
            BoundarySpec::List(l) => {
                let s: Vec<String> = l.iter().map(|v| v.to_string()).collect();
                write!(f, "{}", s.join(","))
            }
        }
    }
}

/// Parses `none`, `endpoints`, `cols`, `cols:K`, `rows`, `rows:K`, or a
/// comma-separated vertex list such as `0,3`.
impl FromStr for BoundarySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let depth = |d: &str| {
            d.parse::<usize>()
                .ok()
                .filter(|&k| k > 0)
                .ok_or_else(|| Error::InvalidSpec(format!("bad boundary depth {d:?}")))
        };
        Ok(match s {
            "none" | "" => BoundarySpec::None,
            "endpoints" => BoundarySpec::Endpoints,
            "cols" => BoundarySpec::Columns(1),
            "rows" => BoundarySpec::Rows(1),
            _ if s.starts_with("cols:") => BoundarySpec::Columns(depth(&s[5..])?),
            _ if s.starts_with("rows:") => BoundarySpec::Rows(depth(&s[5..])?),
            _ => BoundarySpec::List(
                s.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::InvalidSpec(format!("bad boundary vertex {t:?}")))
                    })
                    .collect::<Result<_>>()?,
            ),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_with_endpoints() {
        let g = generate(GraphKind::Path(4), &BoundarySpec::Endpoints).unwrap();
        assert_eq!(g, BoundaryGraph::new(4, &[(0, 1), (1, 2), (2, 3)], &[0, 3]).unwrap());
    }

    #[test]
    fn cycle_counts() {
        let g = generate(GraphKind::Cycle(6), &BoundarySpec::None).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.boundary_len()), (6, 6, 0));
        assert!(generate(GraphKind::Cycle(2), &BoundarySpec::None).is_err());
    }

    #[test]
    fn grid_counts() {
        let g = generate(GraphKind::Grid { rows: 4, cols: 6 }, &BoundarySpec::Columns(1)).unwrap();
        // rows*(cols-1) + cols*(rows-1)
        assert_eq!(g.n(), 24);
        assert_eq!(g.edge_count(), 4 * 5 + 6 * 3);
        assert_eq!(g.boundary(), vec![0, 5, 6, 11, 12, 17, 18, 23]);

        let g = generate(GraphKind::Grid { rows: 4, cols: 6 }, &BoundarySpec::Rows(1)).unwrap();
        assert_eq!(g.boundary(), vec![0, 1, 2, 3, 4, 5, 18, 19, 20, 21, 22, 23]);

        let g = generate(GraphKind::Grid { rows: 2, cols: 5 }, &BoundarySpec::Columns(2)).unwrap();
        assert_eq!(g.interior(), vec![2, 7]);
    }

    #[test]
    fn barbell_layout() {
        let g = generate(GraphKind::Barbell { clique: 4, bridge: 2 }, &BoundarySpec::None).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 6 + 6 + 3);
        assert!(g.has_edge(3, 4) && g.has_edge(4, 5) && g.has_edge(5, 6));
        assert!(g.is_connected());

        let g = generate(GraphKind::Barbell { clique: 3, bridge: 0 }, &BoundarySpec::None).unwrap();
        assert!(g.has_edge(2, 3));
        assert_eq!(g.edge_count(), 7);
    }

    #[test]
    fn invalid_specs() {
        assert!(matches!(
            generate(GraphKind::Cycle(5), &BoundarySpec::Endpoints),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            generate(GraphKind::Path(5), &BoundarySpec::Columns(1)),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(generate(GraphKind::Path(0), &BoundarySpec::None), Err(Error::InvalidSpec(_))));
        assert!(matches!(
            generate(GraphKind::Path(3), &BoundarySpec::List(vec![7])),
            Err(Error::InvalidVertex { .. })
        ));
    }

    #[test]
    fn parse_boundary_specs() {
        for s in ["none", "endpoints", "cols", "rows:2", "0,3,5"] {
            let spec: BoundarySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("cols:0".parse::<BoundarySpec>().is_err());
        assert!("a,b".parse::<BoundarySpec>().is_err());
    }

    #[test]
    fn coordinates_match_vertex_count() {
        for kind in [
            GraphKind::Path(5),
            GraphKind::Cycle(7),
            GraphKind::Grid { rows: 3, cols: 4 },
            GraphKind::Barbell { clique: 5, bridge: 3 },
        ] {
            assert_eq!(kind.coordinates().len(), kind.vertex_count());
        }
        assert_eq!(GraphKind::Grid { rows: 3, cols: 4 }.coordinates()[6], (2.0, 1.0));
    }
}
