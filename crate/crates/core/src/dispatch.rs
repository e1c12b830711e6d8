//! Uniform entry point over the constructive methods, and the choice of the
//! method with the best a-priori guarantee.

use crate::degree_six::{interval_color_deg6_restricted, interval_color_delta6, RESTRICTED_BOUND};
use crate::error::Result;
use crate::graph::{BipartiteGraph, EdgeColoring};
use crate::interval::{
    general_bound, interval_color_biregular, interval_color_general, interval_color_multigraph,
    multigraph_bound, uniform_x_degree, BoundCertificate, Method,
};
use crate::konig::konig_edge_color;
use crate::oracle::NodeBudget;
use crate::palette::{interval_from_palettes, x_palettes};

/// A coloring produced by [`color_with`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodOutput {
    pub coloring: EdgeColoring,
    pub certificate: BoundCertificate,
    /// Set by the Δ ≤ 6 composition: whether its search fell back.
    pub fallback: Option<bool>,
}

/// The bound `method` promises on `g` before running, or `None` when its
/// preconditions fail. The palette guarantee refers to the König coloring
/// used as input by [`color_with`].
pub fn guarantee(method: Method, g: &BipartiteGraph) -> Option<u64> {
    let delta = g.max_degree();
    let xdeg = g.x_degrees();
    match method {
        Method::Biregular => {
            let a = uniform_x_degree(g)?;
            let b = g.y_degrees().into_iter().max().unwrap_or(0);
            g.is_simple().then_some((a * b) as u64)
        }
        Method::General => g.is_simple().then(|| general_bound(delta)),
        Method::Multigraph => Some(multigraph_bound(delta)),
        Method::Delta6Restricted => (delta <= 6 && !xdeg.contains(&3)).then_some(RESTRICTED_BOUND),
        Method::Delta6 => {
            if delta > 6 {
                return None;
            }
            let three = if xdeg.contains(&3) { 7 } else { 0 };
            let rest = if xdeg.iter().any(|&d| d > 0 && d != 3) {
                RESTRICTED_BOUND
            } else {
                0
            };
            Some(three + rest)
        }
        Method::Palette => {
            let groups = x_palettes(g, &konig_edge_color(g)).ok()?;
            Some((g.max_x_degree() * groups.len()) as u64)
        }
    }
}

/// The applicable method with the smallest guarantee, earlier methods
/// winning ties. The multigraph method applies to every graph.
pub fn best_method(g: &BipartiteGraph) -> Method {
    Method::ALL
        .into_iter()
        .filter_map(|m| guarantee(m, g).map(|b| (b, m)))
        .min()
        .map_or(Method::Multigraph, |(_, m)| m)
}

/// Runs `method` on `g`. The palette method converts `input` when given and
/// a König coloring otherwise; `budget` feeds the Δ ≤ 6 search.
pub fn color_with(
    method: Method,
    g: &BipartiteGraph,
    input: Option<&EdgeColoring>,
    budget: &mut NodeBudget,
) -> Result<MethodOutput> {
    let (coloring, certificate) = match method {
        Method::Biregular => interval_color_biregular(g)?,
        Method::General => interval_color_general(g)?,
        Method::Multigraph => interval_color_multigraph(g)?,
        Method::Delta6Restricted => interval_color_deg6_restricted(g)?,
        Method::Delta6 => {
            let out = interval_color_delta6(g, budget)?;
            return Ok(MethodOutput {
                coloring: out.coloring,
                certificate: out.certificate,
                fallback: Some(out.fallback),
            });
        }
        Method::Palette => match input {
            Some(c) => interval_from_palettes(g, c)?,
            None => interval_from_palettes(g, &konig_edge_color(g))?,
        },
    };
    Ok(MethodOutput {
        coloring,
        certificate,
        fallback: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_bipartite, random_bipartite};

    #[test]
    fn regular_graph_prefers_palette() {
        let k33 = complete_bipartite(3, 3);
        assert_eq!(guarantee(Method::Biregular, &k33), Some(9));
        assert_eq!(guarantee(Method::Palette, &k33), Some(3));
        assert_eq!(best_method(&k33), Method::Palette);
    }

    #[test]
    fn ties_go_to_the_earlier_method() {
        // Biregular and palette both promise 4.
        let star = complete_bipartite(1, 4);
        assert_eq!(guarantee(Method::Biregular, &star), Some(4));
        assert_eq!(guarantee(Method::Palette, &star), Some(4));
        assert_eq!(best_method(&star), Method::Biregular);
    }

    #[test]
    fn inapplicable_methods() {
        let multi = BipartiteGraph::new(1, 1, vec![(0, 0), (0, 0)], true).unwrap();
        assert_eq!(guarantee(Method::General, &multi), None);
        assert_eq!(guarantee(Method::Biregular, &multi), None);
        let k77 = complete_bipartite(7, 7);
        assert_eq!(guarantee(Method::Delta6, &k77), None);
        assert_eq!(guarantee(Method::Delta6Restricted, &k77), None);
    }

    #[test]
    fn every_applicable_method_meets_its_guarantee() {
        for seed in 0..20 {
            let g = random_bipartite(7, 7, 5, 0.5, seed);
            for m in Method::ALL {
                let Some(bound) = guarantee(m, &g) else {
                    continue;
                };
                let out = color_with(m, &g, None, &mut NodeBudget::unlimited()).unwrap();
                assert!(out.certificate.verified, "{}", out.certificate);
                if out.fallback != Some(true) {
                    assert!(out.certificate.colors_used <= bound);
                }
            }
        }
    }
}
