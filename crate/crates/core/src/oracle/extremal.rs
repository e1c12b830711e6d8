//! Runs the exact oracle over a stream of graphs and tracks the largest
//! observed `χ'_int / Δ²`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::generators;
use crate::graph::{BipartiteGraph, EdgeColoring};

use super::{exact_chi_int, Exact, NodeBudget};

/// Source of graphs for a search. Every variant is deterministic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorSpec {
    Enumerate {
        n_x: usize,
        n_y: usize,
        max_edges: usize,
    },
    Random {
        n_x: usize,
        n_y: usize,
        max_degree: usize,
        density: f64,
        count: usize,
        seed: u64,
    },
    Trees {
        vertices: usize,
        count: usize,
        seed: u64,
    },
    Biregular {
        a: usize,
        b: usize,
        n_x: usize,
        count: usize,
        seed: u64,
    },
}

impl GeneratorSpec {
    /// The graph stream. Biregular seeds that fail to produce a graph are
    /// skipped.
    pub fn graphs(&self) -> Box<dyn Iterator<Item = BipartiteGraph>> {
        match *self {
            GeneratorSpec::Enumerate {
                n_x,
                n_y,
                max_edges,
            } => Box::new(generators::enumerate_bipartite(n_x, n_y, max_edges)),
            GeneratorSpec::Random {
                n_x,
                n_y,
                max_degree,
                density,
                count,
                seed,
            } => Box::new((0..count as u64).map(move |i| {
                generators::random_bipartite(n_x, n_y, max_degree, density, seed + i)
            })),
            GeneratorSpec::Trees {
                vertices,
                count,
                seed,
            } => Box::new(
                (0..count as u64).map(move |i| generators::random_tree(vertices, seed + i)),
            ),
            GeneratorSpec::Biregular {
                a,
                b,
                n_x,
                count,
                seed,
            } => Box::new((0..count as u64).filter_map(move |i| {
                generators::random_biregular(a, b, n_x, seed + i)
                    .ok()
                    .flatten()
            })),
        }
    }
}

/// A nonnegative fraction compared by cross-multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (u128::from(self.num) * u128::from(other.den))
            .cmp(&(u128::from(other.num) * u128::from(self.den)))
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// The graph attaining the current maximum ratio, with an optimal coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub graph: BipartiteGraph,
    pub coloring: EdgeColoring,
    pub chi_int: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub graphs_examined: usize,
    /// Largest `χ'_int / Δ²` over graphs with at least one edge.
    pub max_ratio: Option<Ratio>,
    pub witness: Option<Witness>,
    pub budget_spent: u64,
    /// `(χ'_int, Δ)` per examined graph, in stream order.
    pub trace: Vec<(u32, u32)>,
}

impl SearchReport {
    fn record(&mut self, g: &BipartiteGraph, t: u32, coloring: EdgeColoring) {
        let delta = g.max_degree() as u32;
        self.graphs_examined += 1;
        self.trace.push((t, delta));
        if delta == 0 {
            return;
        }
        let ratio = Ratio {
            num: u64::from(t),
            den: u64::from(delta) * u64::from(delta),
        };
        if self.max_ratio.is_none_or(|m| ratio > m) {
            self.max_ratio = Some(ratio);
            self.witness = Some(Witness {
                graph: g.clone(),
                coloring,
                chi_int: t,
            });
        }
    }
}

/// Saved progress: the stream, the index of the next graph to solve, and the
/// report so far.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Frontier {
    pub spec: GeneratorSpec,
    pub next_index: usize,
    pub report: SearchReport,
}

/// The budget ran out; `frontier` resumes where the search stopped and holds
/// the partial report.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchInterrupted {
    pub frontier: Box<Frontier>,
}

impl fmt::Display for SearchInterrupted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "search budget exhausted after {} graphs",
            self.frontier.report.graphs_examined
        )
    }
}

impl std::error::Error for SearchInterrupted {}

/// Solves every graph of `spec` exactly, spending at most `budget` search
/// nodes in total.
pub fn extremal_search(
    spec: GeneratorSpec,
    budget: u64,
) -> Result<SearchReport, SearchInterrupted> {
    resume_search(
        Frontier {
            spec,
            next_index: 0,
            report: SearchReport::default(),
        },
        budget,
    )
}

/// Continues a search from a saved frontier with a fresh `budget`.
pub fn resume_search(frontier: Frontier, budget: u64) -> Result<SearchReport, SearchInterrupted> {
    let Frontier {
        spec,
        next_index,
        mut report,
    } = frontier;
    let mut nodes = NodeBudget::new(budget);
    let mut index = next_index;
    for g in spec.graphs().skip(next_index) {
        if nodes.is_exhausted() {
            break;
        }
        let before = nodes.spent();
        let outcome = exact_chi_int(&g, None, &mut nodes);
        report.budget_spent += nodes.spent() - before;
        match outcome {
            Exact::Optimal { t, coloring } => report.record(&g, t, coloring),
            Exact::AboveLimit => unreachable!("the constructive bound is always attained"),
            Exact::Exhausted => break,
        }
        index += 1;
    }
    if nodes.is_exhausted() && spec.graphs().nth(index).is_some() {
        return Err(SearchInterrupted {
            frontier: Box::new(Frontier {
                spec,
                next_index: index,
                report,
            }),
        });
    }
    Ok(report)
}
