//! Text and JSON renderings of every command result.
//!
//! JSON keys are emitted in a fixed order; reals carry 17 significant digits.

use std::fmt::Write;
use std::str::FromStr;

use clap::ValueEnum;
use reflap::demo::{Figure4, Figure5};
use reflap::{
    write_graph, BoundaryGraph, CheegerReport, CutResult, DoubledGraph, Matrix, OperatorSet, ParityReport,
    ReflectedSpectrum, Spectrum,
};
use serde_json::{json, Map, Number, Value};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn real(x: f64) -> Value {
    if x.is_finite() {
        Value::Number(Number::from_str(&format!("{x:.16e}")).expect("formatted float is a JSON number"))
    } else {
        Value::Null
    }
}

fn reals(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| real(x)).collect())
}

fn matrix(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| reals(m.row(i))).collect())
}

fn columns(m: &Matrix) -> Value {
    Value::Array((0..m.cols()).map(|j| reals(&m.column(j))).collect())
}

fn finish(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn graph_json(g: &BoundaryGraph) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("n".into(), json!(g.n()));
    m.insert("boundary".into(), json!(g.boundary()));
    m.insert("edges".into(), json!(g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>()));
    m
}

pub fn graph(g: &BoundaryGraph, fmt: Format) -> String {
    match fmt {
        Format::Text => write_graph(g),
        Format::Json => finish(Value::Object(graph_json(g))),
    }
}

pub fn doubled(dg: &DoubledGraph, fmt: Format) -> String {
    match fmt {
        Format::Text => {
            let mut s = write_graph(dg.graph());
            for &(v, c) in dg.mirror() {
                writeln!(s, "# mirror {v} {c}").unwrap();
            }
            s
        }
        Format::Json => {
            let mut m = graph_json(dg.graph());
            m.insert("original_n".into(), json!(dg.original_n()));
            m.insert("mirror".into(), json!(dg.mirror().iter().map(|&(v, c)| [v, c]).collect::<Vec<_>>()));
            finish(Value::Object(m))
        }
    }
}

fn text_matrix(s: &mut String, name: &str, m: &Matrix) {
    writeln!(s, "{name} {}x{}", m.rows(), m.cols()).unwrap();
    for i in 0..m.rows() {
        writeln!(s, "{}", join(m.row(i))).unwrap();
    }
}

pub fn operators(ops: &OperatorSet, fmt: Format) -> String {
    let named = [
        ("R", &ops.r),
        ("L", &ops.l),
        ("L_boundary", &ops.l_boundary),
        ("L_R", &ops.l_r),
        ("L_D", &ops.l_d),
        ("L_R_norm", &ops.l_r_norm),
        ("S", &ops.sym),
    ];
    match fmt {
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "order {}", join(ops.ordering.order())).unwrap();
            writeln!(s, "interior {}", ops.ordering.interior_len()).unwrap();
            writeln!(s, "d {}", join(&ops.d)).unwrap();
            writeln!(s, "q {}", join(&ops.q)).unwrap();
            for (name, m) in named {
                text_matrix(&mut s, name, m);
            }
            s
        }
        Format::Json => {
            let mut m = Map::new();
            m.insert("order".into(), json!(ops.ordering.order()));
            m.insert("interior_len".into(), json!(ops.ordering.interior_len()));
            m.insert("d".into(), reals(&ops.d));
            m.insert("q".into(), reals(&ops.q));
            for (name, mat) in named {
                m.insert(name.into(), matrix(mat));
            }
            finish(Value::Object(m))
        }
    }
}

fn spectrum_text(s: &mut String, sp: &Spectrum, vectors: &Matrix) {
    for k in 0..sp.len() {
        writeln!(s, "lambda {k} {} residual {:e}", sp.eigenvalues[k], sp.residuals[k]).unwrap();
    }
    for k in 0..vectors.cols() {
        writeln!(s, "vector {k} {}", join(&vectors.column(k))).unwrap();
    }
}

pub fn reflected(rs: &ReflectedSpectrum, fmt: Format) -> String {
    match fmt {
        Format::Text => {
            let mut s = String::from("operator reflected\n");
            spectrum_text(&mut s, &rs.spectrum, &rs.operator_vectors);
            s
        }
        Format::Json => finish(json!({
            "operator": "reflected",
            "eigenvalues": reals(&rs.spectrum.eigenvalues),
            "residuals": reals(&rs.spectrum.residuals),
            "eigenvectors": columns(&rs.operator_vectors),
            "sweep_vectors": columns(&rs.sweep_vectors),
        })),
    }
}

pub fn dirichlet(interior: &[usize], sp: &Spectrum, fmt: Format) -> String {
    match fmt {
        Format::Text => {
            let mut s = format!("operator dirichlet\ninterior {}\n", join(interior));
            spectrum_text(&mut s, sp, &sp.eigenvectors);
            s
        }
        Format::Json => finish(json!({
            "operator": "dirichlet",
            "interior": interior,
            "eigenvalues": reals(&sp.eigenvalues),
            "residuals": reals(&sp.residuals),
            "eigenvectors": columns(&sp.eigenvectors),
        })),
    }
}

pub fn parity(r: &ParityReport, fmt: Format) -> String {
    match fmt {
        Format::Text => {
            let mut s = format!("even {}\nodd {}\n", r.even_count, r.odd_count);
            for c in &r.clusters {
                writeln!(s, "cluster {} multiplicity {} even {} odd {}", c.eigenvalue, c.multiplicity, c.even_dim, c.odd_dim)
                    .unwrap();
            }
            s
        }
        Format::Json => finish(json!({
            "even_count": r.even_count,
            "odd_count": r.odd_count,
            "clusters": r.clusters.iter().map(|c| json!({
                "eigenvalue": real(c.eigenvalue),
                "multiplicity": c.multiplicity,
                "even": c.even_dim,
                "odd": c.odd_dim,
            })).collect::<Vec<_>>(),
        })),
    }
}

fn ratio_json(c: &CutResult) -> Value {
    let r = c.ratio();
    json!({ "numerator": r.numer(), "denominator": r.denom(), "value": real(c.ratio_f64()) })
}

fn cut_json(c: &CutResult) -> Value {
    json!({
        "subset": c.subset,
        "ratio": ratio_json(c),
        "cut_measure": real(c.cut_measure.to_f64()),
        "vol_subset": real(c.vol_subset.to_f64()),
        "vol_complement": real(c.vol_complement.to_f64()),
    })
}

fn cut_text(s: &mut String, name: &str, c: &CutResult) {
    writeln!(s, "{name} {}", join(&c.subset)).unwrap();
    writeln!(
        s,
        "{name}_ratio {} = {} / min({}, {})",
        c.ratio(),
        c.cut_measure,
        c.vol_subset,
        c.vol_complement
    )
    .unwrap();
}

pub fn cut(name: &str, c: &CutResult, fmt: Format) -> String {
    match fmt {
        Format::Text => {
            let mut s = format!("h_r {} ({})\n", c.ratio(), c.ratio_f64());
            cut_text(&mut s, name, c);
            s
        }
        Format::Json => finish(json!({ "h_r": ratio_json(c), name: cut_json(c) })),
    }
}

pub fn sweep(lambda_r: f64, values: &[f64], c: &CutResult, fmt: Format) -> String {
    match fmt {
        Format::Text => {
            let mut s = format!("lambda_r {lambda_r}\nvector {}\n", join(values));
            cut_text(&mut s, "sweep", c);
            s
        }
        Format::Json => finish(json!({
            "lambda_r": real(lambda_r),
            "vector": reals(values),
            "sweep": cut_json(c),
        })),
    }
}

pub fn report(r: &CheegerReport, fmt: Format) -> String {
    match fmt {
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "lambda_r {}", r.lambda_r).unwrap();
            writeln!(s, "h_r {} ({})", r.h_r(), r.optimal.ratio_f64()).unwrap();
            writeln!(s, "upper {}", r.upper).unwrap();
            writeln!(s, "lower {}", r.lower).unwrap();
            cut_text(&mut s, "optimal", &r.optimal);
            cut_text(&mut s, "sweep", &r.sweep);
            writeln!(s, "sweep_within_upper {}", r.sweep_within_upper).unwrap();
            writeln!(s, "holds {}", r.holds).unwrap();
            s
        }
        Format::Json => finish(json!({
            "h_r": ratio_json(&r.optimal),
            "lambda_r": real(r.lambda_r),
            "upper": real(r.upper),
            "lower": real(r.lower),
            "holds": r.holds,
            "sweep_within_upper": r.sweep_within_upper,
            "optimal": cut_json(&r.optimal),
            "sweep": cut_json(&r.sweep),
        })),
    }
}

fn side(subset: &[usize], v: usize) -> u8 {
    subset.contains(&v) as u8
}

pub fn figure4(f: &Figure4, fmt: Format) -> String {
    match fmt {
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "# {} boundary {}", f.kind, join(&f.graph.boundary())).unwrap();
            writeln!(s, "# psi_cut {} ({})", join(&f.psi_cut.subset), f.psi_axis).unwrap();
            writeln!(s, "# psi_r_cut {} ({})", join(&f.psi_r_cut.subset), f.psi_r_axis).unwrap();
            writeln!(s, "vertex x y boundary psi psi_r psi_side psi_r_side").unwrap();
            for (v, &(x, y)) in f.coordinates.iter().enumerate() {
                writeln!(
                    s,
                    "{v} {x} {y} {} {} {} {} {}",
                    f.graph.is_boundary(v) as u8,
                    f.psi[v],
                    f.psi_r[v],
                    side(&f.psi_cut.subset, v),
                    side(&f.psi_r_cut.subset, v)
                )
                .unwrap();
            }
            s
        }
        Format::Json => finish(json!({
            "graph": f.kind.to_string(),
            "boundary": f.graph.boundary(),
            "x": reals(&f.coordinates.iter().map(|p| p.0).collect::<Vec<_>>()),
            "y": reals(&f.coordinates.iter().map(|p| p.1).collect::<Vec<_>>()),
            "psi": reals(&f.psi),
            "psi_r": reals(&f.psi_r),
            "psi_cut": f.psi_cut.subset,
            "psi_r_cut": f.psi_r_cut.subset,
            "psi_axis": f.psi_axis.to_string(),
            "psi_r_axis": f.psi_r_axis.to_string(),
        })),
    }
}

pub fn figure5(f: &Figure5, fmt: Format) -> String {
    match fmt {
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "# {} boundary {}", f.kind, join(&f.graph.boundary())).unwrap();
            writeln!(s, "# argmax {} argmin {}", join(&f.argmax), join(&f.argmin)).unwrap();
            writeln!(s, "vertex x y boundary psi_r").unwrap();
            for (v, &(x, y)) in f.coordinates.iter().enumerate() {
                writeln!(s, "{v} {x} {y} {} {}", f.graph.is_boundary(v) as u8, f.psi_r[v]).unwrap();
            }
            s
        }
        Format::Json => finish(json!({
            "graph": f.kind.to_string(),
            "boundary": f.graph.boundary(),
            "x": reals(&f.coordinates.iter().map(|p| p.0).collect::<Vec<_>>()),
            "y": reals(&f.coordinates.iter().map(|p| p.1).collect::<Vec<_>>()),
            "psi_r": reals(&f.psi_r),
            "argmax": f.argmax,
            "argmin": f.argmin,
        })),
    }
}
