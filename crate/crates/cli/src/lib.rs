//! The `xint` command line: generate graphs, color them with any of the
//! constructive methods, verify colorings, compute exact optima and run
//! resumable extremal searches.
//!
//! Exit codes: 0 success, 1 verification failure (or no certified answer),
//! 2 usage or input error, 3 precondition violation.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use xint_core::degree_six::DEFAULT_SEARCH_BUDGET;
use xint_core::generators;
use xint_core::interval::{biregular_decompose, uniform_x_degree};
use xint_core::io::{
    emit_coloring, emit_dot, emit_frontier, emit_graph, parse_coloring, parse_frontier, parse_graph,
};
use xint_core::oracle::{
    exact_chi_int, resume_search, Exact, Frontier, GeneratorSpec, NodeBudget, SearchReport,
};
use xint_core::{
    best_method, color_with, verify_coloring, BipartiteGraph, EdgeColoring, Error, Method,
    MethodOutput,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

/// Environment variable holding the default node budget for searches.
pub const BUDGET_ENV: &str = "XINT_SEARCH_BUDGET";

#[derive(Parser, Debug)]
#[command(
    name = "xint",
    version,
    about = "One-sided interval edge colorings of bipartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated graph document.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Output file (stdout if absent).
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Color a graph and print the bound certificate and the coloring.
    Color(ColorArgs),
    /// Check that a coloring is proper and interval at every X-vertex.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Compute χ'_int(G, X) exactly by backtracking.
    Exact {
        graph: PathBuf,
        /// Largest number of colors to try.
        #[arg(long)]
        t_max: Option<u32>,
        #[command(flatten)]
        budget: BudgetArg,
        /// Write the optimal coloring here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Split a graph with uniform X-degree into parts of maximum degree a.
    Decompose {
        graph: PathBuf,
        /// Common X-degree (inferred if absent).
        #[arg(long)]
        a: Option<usize>,
        /// Y-degree cap (the largest Y-degree if absent).
        #[arg(long)]
        b: Option<usize>,
    },
    /// Track the largest χ'_int / Δ² over a stream of graphs.
    Search(SearchArgs),
}

#[derive(Subcommand, Debug)]
enum Family {
    /// K_{m,n}.
    Complete { m: usize, n: usize },
    /// Random simple (a, b)-biregular graph with nx X-vertices.
    Biregular {
        a: usize,
        b: usize,
        nx: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random simple bipartite graph.
    Random {
        nx: usize,
        ny: usize,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random bipartite multigraph.
    Multigraph {
        nx: usize,
        ny: usize,
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random tree on n vertices.
    Tree {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum MethodChoice {
    Auto,
    Biregular,
    General,
    Multigraph,
    Delta6Restricted,
    Delta6,
    Palette,
}

#[derive(Args, Debug)]
struct BudgetArg {
    /// Search node budget.
    #[arg(long, env = BUDGET_ENV)]
    budget: Option<u64>,
}

impl BudgetArg {
    fn nodes(&self) -> NodeBudget {
        NodeBudget::new(self.budget.unwrap_or(DEFAULT_SEARCH_BUDGET))
    }
}

#[derive(Args, Debug)]
struct ColorArgs {
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = MethodChoice::Auto)]
    method: MethodChoice,
    /// Proper coloring to convert (palette method; König if absent).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Write the coloring here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a Graphviz rendering of the colored graph.
    #[arg(long)]
    dot: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArg,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Frontier file: resumed from when it exists and no stream is given,
    /// written when the budget runs out.
    #[arg(long)]
    frontier: Option<PathBuf>,
    /// Write the final report as JSON.
    #[arg(long)]
    report: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArg,
    #[command(subcommand)]
    stream: Option<Stream>,
}

#[derive(Subcommand, Debug)]
enum Stream {
    /// Every graph with nx + ny vertices and at most max_edges edges.
    Enumerate {
        nx: usize,
        ny: usize,
        max_edges: usize,
    },
    /// Seeded random simple graphs.
    Random {
        nx: usize,
        ny: usize,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Seeded random trees.
    Trees {
        n: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Seeded random biregular graphs.
    Biregular {
        a: usize,
        b: usize,
        nx: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl From<&Stream> for GeneratorSpec {
    fn from(s: &Stream) -> Self {
        match *s {
            Stream::Enumerate { nx, ny, max_edges } => GeneratorSpec::Enumerate {
                n_x: nx,
                n_y: ny,
                max_edges,
            },
            Stream::Random {
                nx,
                ny,
                max_degree,
                density,
                count,
                seed,
            } => GeneratorSpec::Random {
                n_x: nx,
                n_y: ny,
                max_degree,
                density,
                count,
                seed,
            },
            Stream::Trees { n, count, seed } => GeneratorSpec::Trees {
                vertices: n,
                count,
                seed,
            },
            Stream::Biregular {
                a,
                b,
                nx,
                count,
                seed,
            } => GeneratorSpec::Biregular {
                a,
                b,
                n_x: nx,
                count,
                seed,
            },
        }
    }
}

/// A failed command: message and exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::PreconditionViolated(_) | Error::InfeasibleDegrees(_) | Error::NotProper => {
                EXIT_PRECONDITION
            }
            Error::IndexOutOfRange { .. }
            | Error::DuplicateEdge { .. }
            | Error::LengthMismatch { .. }
            | Error::InvalidColor { .. } => EXIT_USAGE,
            Error::Internal(_) => EXIT_VERIFY,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<BipartiteGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_coloring(path: &Path) -> Result<EdgeColoring, Failure> {
    parse_coloring(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit
/// code.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match cli.command {
        Command::Gen { family, out } => gen(&family, out.as_deref()),
        Command::Color(args) => color(&args),
        Command::Verify { graph, coloring } => verify(&graph, &coloring),
        Command::Exact {
            graph,
            t_max,
            budget,
            out,
        } => exact(&graph, t_max, &budget, out.as_deref()),
        Command::Decompose { graph, a, b } => decompose(&graph, a, b),
        Command::Search(args) => search(&args),
    };
    let _ = std::io::stdout().flush();
    match outcome {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

/// [`run_cli`] on the process arguments.
pub fn main_exit() -> ExitCode {
    ExitCode::from(run_cli(std::env::args_os()) as u8)
}

fn gen(family: &Family, out: Option<&Path>) -> Outcome {
    let g = match *family {
        Family::Complete { m, n } => generators::complete_bipartite(m, n),
        Family::Biregular { a, b, nx, seed } => generators::random_biregular(a, b, nx, seed)?
            .ok_or_else(|| Failure {
                code: EXIT_PRECONDITION,
                message: format!("no simple ({a}, {b})-biregular graph was found"),
            })?,
        Family::Random {
            nx,
            ny,
            max_degree,
            density,
            seed,
        } => {
            if !(0.0..=1.0).contains(&density) {
                return Err(Failure::usage("density must lie in [0, 1]"));
            }
            generators::random_bipartite(nx, ny, max_degree, density, seed)
        }
        Family::Multigraph {
            nx,
            ny,
            max_degree,
            edges,
            seed,
        } => generators::random_multigraph(nx, ny, max_degree, edges, seed),
        Family::Tree { n, seed } => generators::random_tree(n, seed),
    };
    emit(out, &emit_graph(&g))?;
    Ok(EXIT_OK)
}

fn color(args: &ColorArgs) -> Outcome {
    let g = load_graph(&args.graph)?;
    let method = match args.method {
        MethodChoice::Auto => best_method(&g),
        MethodChoice::Biregular => Method::Biregular,
        MethodChoice::General => Method::General,
        MethodChoice::Multigraph => Method::Multigraph,
        MethodChoice::Delta6Restricted => Method::Delta6Restricted,
        MethodChoice::Delta6 => Method::Delta6,
        MethodChoice::Palette => Method::Palette,
    };
    if args.input.is_some() && method != Method::Palette {
        return Err(Failure::usage("--input only applies to the palette method"));
    }
    let input = args.input.as_deref().map(load_coloring).transpose()?;
    let MethodOutput {
        coloring,
        certificate: cert,
        fallback,
    } = color_with(method, &g, input.as_ref(), &mut args.budget.nodes())?;
    let recheck = verify_coloring(&g, &coloring)?;
    let verified = cert.verified
        && recheck.is_x_interval()
        && u64::from(coloring.max_color()) <= cert.guaranteed_bound;
    match fallback {
        Some(f) => println!("{cert} fallback={f}"),
        None => println!("{cert}"),
    }
    emit(args.out.as_deref(), &emit_coloring(&coloring))?;
    if let Some(p) = &args.dot {
        write(p, &emit_dot(&g, Some(&coloring)))?;
    }
    Ok(if verified { EXIT_OK } else { EXIT_VERIFY })
}

fn verify(graph: &Path, coloring: &Path) -> Outcome {
    let g = load_graph(graph)?;
    let c = load_coloring(coloring)?;
    let report = verify_coloring(&g, &c)?;
    println!(
        "proper={} interval_at_x={} colors_used={}",
        report.proper,
        report.interval_at_x,
        c.max_color()
    );
    for &(i, j) in &report.violating_edge_pairs {
        println!("conflict edges {i} {j}");
    }
    for &x in &report.violating_vertices {
        println!("gap at x{x}");
    }
    Ok(if report.is_x_interval() {
        EXIT_OK
    } else {
        EXIT_VERIFY
    })
}

fn exact(graph: &Path, t_max: Option<u32>, budget: &BudgetArg, out: Option<&Path>) -> Outcome {
    let g = load_graph(graph)?;
    let mut nodes = budget.nodes();
    let outcome = exact_chi_int(&g, t_max, &mut nodes);
    match outcome {
        Exact::Optimal { t, coloring } => {
            if !verify_coloring(&g, &coloring)?.is_x_interval() {
                eprintln!("error: witness coloring failed verification");
                return Ok(EXIT_VERIFY);
            }
            println!(
                "chi_int={t} max_degree={} nodes={}",
                g.max_degree(),
                nodes.spent()
            );
            if let Some(p) = out {
                write(p, &emit_coloring(&coloring))?;
            }
            Ok(EXIT_OK)
        }
        Exact::AboveLimit => {
            println!(
                "chi_int>{} nodes={}",
                t_max.unwrap_or_default(),
                nodes.spent()
            );
            Ok(EXIT_VERIFY)
        }
        Exact::Exhausted => {
            println!("status=exhausted nodes={}", nodes.spent());
            Ok(EXIT_VERIFY)
        }
    }
}

fn decompose(graph: &Path, a: Option<usize>, b: Option<usize>) -> Outcome {
    let g = load_graph(graph)?;
    let a = match a {
        Some(a) => a,
        None => uniform_x_degree(&g).ok_or_else(|| Failure {
            code: EXIT_PRECONDITION,
            message: "X-vertices do not share a common degree".into(),
        })?,
    };
    let b = b.unwrap_or_else(|| g.y_degrees().into_iter().max().unwrap_or(0));
    let dec = biregular_decompose(&g, a, b)?;
    if let Err(msg) = dec.check(&g, a) {
        eprintln!("error: {msg}");
        return Ok(EXIT_VERIFY);
    }
    println!("parts {}", dec.parts.len());
    for (i, part) in dec.parts.iter().enumerate() {
        let xs: Vec<String> = (0..g.x_count())
            .filter(|&x| dec.x_assignment[x] == Some(i))
            .map(|x| x.to_string())
            .collect();
        println!("part {i} edges {} x {}", part.len(), xs.join(" "));
    }
    Ok(EXIT_OK)
}

fn print_report(report: &SearchReport, status: &str) {
    let ratio = report
        .max_ratio
        .map_or_else(|| "none".to_string(), |r| r.to_string());
    println!(
        "status={status} graphs_examined={} max_ratio={ratio} budget_spent={}",
        report.graphs_examined, report.budget_spent
    );
    if let Some(w) = &report.witness {
        println!(
            "witness chi_int={} max_degree={}",
            w.chi_int,
            w.graph.max_degree()
        );
        print!("{}", emit_graph(&w.graph));
    }
}

fn search(args: &SearchArgs) -> Outcome {
    let frontier = match (&args.stream, &args.frontier) {
        (Some(stream), _) => Frontier {
            spec: stream.into(),
            next_index: 0,
            report: SearchReport::default(),
        },
        (None, Some(path)) => parse_frontier(&read(path)?)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
        (None, None) => return Err(Failure::usage("give a graph stream or --frontier")),
    };
    let budget = args.budget.budget.unwrap_or(DEFAULT_SEARCH_BUDGET);
    match resume_search(frontier, budget) {
        Ok(report) => {
            print_report(&report, "complete");
            if let Some(p) = &args.report {
                let json = serde_json::to_string_pretty(&report).expect("report serializes");
                write(p, &json)?;
            }
            Ok(EXIT_OK)
        }
        Err(interrupted) => {
            print_report(&interrupted.frontier.report, "interrupted");
            match &args.frontier {
                Some(p) => write(p, &emit_frontier(&interrupted.frontier))?,
                None => eprintln!("note: pass --frontier to keep the progress"),
            }
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_cli(["xint"]), EXIT_USAGE);
        assert_eq!(run_cli(["xint", "color"]), EXIT_USAGE);
        assert_eq!(
            run_cli(["xint", "color", "g.txt", "--method", "fastest"]),
            EXIT_USAGE
        );
        assert_eq!(run_cli(["xint", "--help"]), EXIT_OK);
    }
}
