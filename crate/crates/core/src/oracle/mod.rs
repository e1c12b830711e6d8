//! Exact `χ'_int(G, X)` at desk scale and the extremal-search harness.

mod extremal;
pub mod search;

pub use extremal::{
    extremal_search, resume_search, Frontier, GeneratorSpec, Ratio, SearchInterrupted,
    SearchReport, Witness,
};
pub use search::{find_x_interval_coloring, NodeBudget, Search, MAX_COLORS};

use crate::graph::{BipartiteGraph, EdgeColoring};
use crate::interval::{general_bound, multigraph_bound};

/// Outcome of [`exact_chi_int`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Exact {
    /// `t` is the least number of colors admitting an X-interval coloring.
    Optimal { t: u32, coloring: EdgeColoring },
    /// No X-interval coloring with at most `t_max` colors.
    AboveLimit,
    /// The node budget ran out before the answer was settled.
    Exhausted,
}

/// Default upper end of the search: the constructive bound for `g`, capped
/// at [`MAX_COLORS`].
pub fn default_t_max(g: &BipartiteGraph) -> u32 {
    let delta = g.max_degree();
    let bound = if g.is_simple() {
        general_bound(delta)
    } else {
        multigraph_bound(delta)
    };
    bound.min(u64::from(MAX_COLORS)) as u32
}

/// Least `t ∈ [Δ(G), t_max]` with an X-interval `t`-coloring, searching `t`
/// upwards. Any X-interval coloring is proper, so nothing below `Δ(G)` is
/// tried.
pub fn exact_chi_int(g: &BipartiteGraph, t_max: Option<u32>, budget: &mut NodeBudget) -> Exact {
    let t_max = t_max.unwrap_or_else(|| default_t_max(g)).min(MAX_COLORS);
    let delta = g.max_degree() as u32;
    for t in delta..=t_max {
        match find_x_interval_coloring(g, t, budget) {
            Search::Found(coloring) => return Exact::Optimal { t, coloring },
            Search::Infeasible => {}
            Search::Exhausted => return Exact::Exhausted,
        }
    }
    Exact::AboveLimit
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::complete_bipartite;
    use crate::graph::verify_coloring;

    fn optimum(g: &BipartiteGraph) -> u32 {
        match exact_chi_int(g, None, &mut NodeBudget::unlimited()) {
            Exact::Optimal { t, coloring } => {
                let r = verify_coloring(g, &coloring).unwrap();
                assert!(r.is_x_interval());
                assert!(coloring.max_color() <= t);
                t
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cycle_c6() {
        let g = BipartiteGraph::new(
            3,
            3,
            vec![(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)],
            false,
        )
        .unwrap();
        assert_eq!(optimum(&g), 2);
    }

    #[test]
    fn star_k13() {
        assert_eq!(optimum(&complete_bipartite(1, 3)), 3);
    }

    #[test]
    fn k23_degree_two_side() {
        // X = the three degree-2 vertices. With t = 3 both Y-vertices need
        // colors 1 and 3, i.e. two {1,2} and two {2,3} windows, but there are
        // only three X-vertices.
        assert_eq!(optimum(&complete_bipartite(3, 2)), 4);
    }

    #[test]
    fn empty_graph_needs_no_colors() {
        assert_eq!(optimum(&BipartiteGraph::empty(2, 2)), 0);
    }

    #[test]
    fn limit_and_budget() {
        let g = complete_bipartite(3, 2);
        assert_eq!(
            exact_chi_int(&g, Some(3), &mut NodeBudget::unlimited()),
            Exact::AboveLimit
        );
        assert_eq!(
            exact_chi_int(&complete_bipartite(4, 4), None, &mut NodeBudget::new(0)),
            Exact::Exhausted
        );
    }
}
