mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use reflap::demo::{figure4, figure5, FIGURE4_BOUNDARY, FIGURE4_COLS, FIGURE4_ROWS, FIGURE5_BRIDGE, FIGURE5_CLIQUE};
use reflap::{
    cheeger_exact, dirichlet_spectrum, generate, parity_classify, parse_graph, reflected_spectrum, sweep_cut,
    verify_theorem, BoundaryGraph, BoundarySpec, Error, GraphKind, OperatorSet, DEFAULT_CLUSTER_GAP, DEFAULT_MAX_N,
    DEFAULT_TOL,
};

use render::Format;

#[derive(Parser, Debug)]
#[command(name = "reflap", version, about = "Reflected Neumann Laplacians of graphs with boundary")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input graph file ("-" for stdin)
    #[arg(short, long, global = true)]
    input: Option<PathBuf>,

    /// Output file (default stdout)
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Solver tolerance; for `parity`, the eigenvalue cluster gap
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Largest graph accepted by the exhaustive Cheeger search
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,

    /// none | endpoints | cols[:K] | rows[:K] | comma-separated vertex list
    #[arg(long, global = true, value_parser = parse_boundary)]
    boundary: Option<BoundarySpec>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a named graph
    Gen {
        #[arg(value_enum)]
        kind: Kind,
        /// path/cycle: N; grid: ROWS COLS; barbell: CLIQUE BRIDGE
        #[arg(required = true, num_args = 1..=2)]
        sizes: Vec<usize>,
    },
    /// Double a graph along its boundary
    Double,
    /// Dump the assembled operators (interior then boundary ordering)
    Ops,
    /// Eigenpairs of the normalized reflected or the Dirichlet Laplacian
    Spectrum {
        #[arg(long, value_enum, default_value_t = Operator::Reflected)]
        operator: Operator,
    },
    /// Even/odd split of the doubled graph's Laplacian eigenspaces
    Parity,
    /// Exact reflected Cheeger constant
    Cheeger,
    /// Sweep cut of the second reflected eigenvector
    Sweep,
    /// Check the Cheeger inequality; exits 0 iff it holds
    Verify,
    /// Plot-ready data for the two illustrative examples
    Demo {
        #[arg(value_enum)]
        name: DemoName,
        /// figure4 grid rows
        #[arg(long, default_value_t = FIGURE4_ROWS)]
        rows: usize,
        /// figure4 grid columns
        #[arg(long, default_value_t = FIGURE4_COLS)]
        cols: usize,
        /// figure5 clique size
        #[arg(long, default_value_t = FIGURE5_CLIQUE)]
        clique: usize,
        /// figure5 bridge length
        #[arg(long, default_value_t = FIGURE5_BRIDGE)]
        bridge: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Path,
    Cycle,
    Grid,
    Barbell,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operator {
    Reflected,
    Dirichlet,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DemoName {
    Figure4,
    Figure5,
}

fn parse_boundary(s: &str) -> Result<BoundarySpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure reported as `error[kind]: message` with exit status 1.
struct Failure {
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { kind: e.kind(), message: e.to_string() }
    }
}

fn io_failure(path: &std::path::Path, e: io::Error) -> Failure {
    Failure { kind: "Io", message: format!("{}: {e}", path.display()) }
}

fn usage_error(message: &str) -> ! {
    Cli::command().error(clap::error::ErrorKind::ArgumentConflict, message).exit()
}

fn read_graph(cli: &Cli) -> Result<BoundaryGraph, Failure> {
    let Some(path) = &cli.input else { usage_error("this subcommand requires --input FILE") };
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| io_failure(path, e))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| io_failure(path, e))?
    };
    let g = parse_graph(&text)?;
    match &cli.boundary {
        None => Ok(g),
        Some(BoundarySpec::None) => Ok(g.with_boundary(&[])?),
        Some(BoundarySpec::List(b)) => Ok(g.with_boundary(b)?),
        Some(other) => Err(Error::InvalidSpec(format!(
            "--boundary {other} needs a generated graph; use none or a vertex list with --input"
        ))
        .into()),
    }
}

fn gen_kind(kind: Kind, sizes: &[usize]) -> GraphKind {
    let arity = match kind {
        Kind::Path | Kind::Cycle => 1,
        Kind::Grid | Kind::Barbell => 2,
    };
    if sizes.len() != arity {
        let name = format!("{kind:?}").to_lowercase();
        usage_error(&format!("{name} takes {arity} size argument(s), got {}", sizes.len()));
    }
    match kind {
        Kind::Path => GraphKind::Path(sizes[0]),
        Kind::Cycle => GraphKind::Cycle(sizes[0]),
        Kind::Grid => GraphKind::Grid { rows: sizes[0], cols: sizes[1] },
        Kind::Barbell => GraphKind::Barbell { clique: sizes[0], bridge: sizes[1] },
    }
}

/// Runs the command; `Ok(false)` means success with exit status 1 (a failed `verify`).
fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let fmt = cli.format;
    let tol = cli.tol.unwrap_or(DEFAULT_TOL);
    Ok(match &cli.command {
        Command::Gen { kind, sizes } => {
            let spec = cli.boundary.clone().unwrap_or(BoundarySpec::None);
            let g = generate(gen_kind(*kind, sizes), &spec)?;
            (render::graph(&g, fmt), true)
        }
        Command::Double => (render::doubled(&read_graph(cli)?.double(), fmt), true),
        Command::Ops => (render::operators(&OperatorSet::assemble(&read_graph(cli)?)?, fmt), true),
        Command::Spectrum { operator } => {
            let g = read_graph(cli)?;
            let out = match operator {
                Operator::Reflected => render::reflected(&reflected_spectrum(&g, tol)?, fmt),
                Operator::Dirichlet => render::dirichlet(&g.interior(), &dirichlet_spectrum(&g, tol)?, fmt),
            };
            (out, true)
        }
        Command::Parity => {
            let g = read_graph(cli)?;
            let report = parity_classify(&g.double(), cli.tol.unwrap_or(DEFAULT_CLUSTER_GAP))?;
            (render::parity(&report, fmt), true)
        }
        Command::Cheeger => (render::cut("optimal", &cheeger_exact(&read_graph(cli)?, cli.max_n)?, fmt), true),
        Command::Sweep => {
            let g = read_graph(cli)?;
            g.require_connected()?;
            let s = reflected_spectrum(&g, tol)?;
            let cut = sweep_cut(&g, &s.sweep_vector(1))?;
            (render::sweep(s.lambda_r(), &s.sweep_vector(1), &cut, fmt), true)
        }
        Command::Verify => {
            let report = verify_theorem(&read_graph(cli)?, cli.max_n, tol)?;
            (render::report(&report, fmt), report.holds)
        }
        Command::Demo { name, rows, cols, clique, bridge } => match name {
            DemoName::Figure4 => {
                let spec = cli.boundary.clone().unwrap_or(FIGURE4_BOUNDARY);
                (render::figure4(&figure4(*rows, *cols, &spec)?, fmt), true)
            }
            DemoName::Figure5 => (render::figure5(&figure5(*clique, *bridge)?, fmt), true),
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(tol) = cli.tol {
        if !(tol > 0.0 && tol.is_finite()) {
            return fail(Error::InvalidTolerance(tol).into());
        }
    }
    let (text, ok) = match run(&cli) {
        Ok(r) => r,
        Err(f) => return fail(f),
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &text).map_err(|e| io_failure(path, e)),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| io_failure("<stdout>".as_ref(), e)),
    };
    if let Err(f) = written {
        return fail(f);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn fail(f: Failure) -> ExitCode {
    eprintln!("error[{}]: {}", f.kind, f.message);
    ExitCode::from(1)
}
