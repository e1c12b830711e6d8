//! X-interval colorings for graphs of maximum degree 6.
//!
//! When no X-vertex has degree 3, `G` and a copy are padded into a 6-regular
//! multigraph, split into three 2-factors, and factor `i` is colored
//! alternately with `2i-1, 2i`. Restricted to `G` this is proper and interval
//! at X except on five palettes, which a fixed shift by 6 repairs, giving at
//! most 10 colors. Degree-3 X-vertices are handled separately by a 7-color
//! search and the two pieces are stacked, for at most 17 colors.

mod doubled;
mod factor;

pub use doubled::{build_doubled, Doubled, Provenance};
pub use factor::{
    alternate_color_factors, eulerian_orientation, petersen_two_factorization, TwoFactorization,
};

use crate::error::{precondition, Error, Result};
use crate::graph::{BipartiteGraph, EdgeColoring};
use crate::interval::{
    interval_color_biregular_with, interval_color_multigraph, BoundCertificate, Method,
};
use crate::oracle::search::{find_x_interval_coloring, NodeBudget, Search};

/// Bound of the restricted pipeline.
pub const RESTRICTED_BOUND: u64 = 10;
/// Bound of the 7-color search on degree-3 X-vertices.
pub const DEGREE_THREE_BOUND: u64 = 7;
/// Default node cap for the 7-color search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 2_000_000;

/// Palettes of X-vertices that the alternating coloring can leave
/// non-interval, with the colors to move up by 6. Each entry is the only
/// subset of `{1,2,3,4}` whose shift turns the palette into an interval.
pub const BAD_PALETTE_SHIFTS: [(&[u32], &[u32]); 5] = [
    (&[1, 2, 5, 6], &[1, 2]),
    (&[1, 2, 3, 4, 6], &[1, 2, 3, 4]),
    (&[1, 2, 3, 5, 6], &[1, 2, 3]),
    (&[1, 2, 4, 5, 6], &[1, 2]),
    (&[1, 3, 4, 5, 6], &[1]),
];

/// Colors to shift for a given palette, if it is one of the bad five.
pub fn bad_palette_shift(palette: &[u32]) -> Option<&'static [u32]> {
    BAD_PALETTE_SHIFTS
        .iter()
        .find(|(p, _)| *p == palette)
        .map(|&(_, s)| s)
}

/// The alternating 6-coloring of the doubled graph restricted to `G`, before
/// any recoloring.
pub fn alternate_coloring_of(g: &BipartiteGraph) -> Result<EdgeColoring> {
    let doubled = build_doubled(g)?;
    let factors = petersen_two_factorization(&doubled.graph)?;
    let h_colors = alternate_color_factors(&doubled.graph, &factors, &doubled.provenance)?;
    // G's edges come first in the doubled graph.
    Ok(EdgeColoring::from_positive(
        h_colors[..g.edge_count()].to_vec(),
    ))
}

/// X-interval coloring with at most 10 colors when `Δ(G) ≤ 6` and no
/// X-vertex has degree 3. Parallel edges are allowed.
pub fn interval_color_deg6_restricted(
    g: &BipartiteGraph,
) -> Result<(EdgeColoring, BoundCertificate)> {
    let mut colors = alternate_coloring_of(g)?.into_colors();
    for (x, inc) in g.x_incidence().iter().enumerate() {
        let mut palette: Vec<u32> = inc.iter().map(|&e| colors[e]).collect();
        palette.sort_unstable();
        palette.dedup();
        if palette.len() <= 1 || palette[palette.len() - 1] - palette[0] + 1 == palette.len() as u32
        {
            continue;
        }
        let shift = bad_palette_shift(&palette)
            .ok_or_else(|| Error::Internal(format!("x{x} has unexpected palette {palette:?}")))?;
        for &e in inc {
            if shift.contains(&colors[e]) {
                colors[e] += 6;
            }
        }
    }
    let coloring = EdgeColoring::from_positive(colors);
    let cert = BoundCertificate::issue(Method::Delta6Restricted, RESTRICTED_BOUND, g, &coloring)?;
    Ok((coloring, cert))
}

/// Searches for a coloring with at most 7 colors that is proper and interval
/// at every X-vertex, for graphs whose X-vertices have degree 3 and whose
/// Y-vertices have degree at most 6. `None` when the budget runs out first.
pub fn interval7_search_36(g: &BipartiteGraph, budget: &mut NodeBudget) -> Option<EdgeColoring> {
    let p = g.degree_profile();
    debug_assert!(p.x_degrees.iter().all(|&d| d == 0 || d == 3));
    debug_assert!(p.y_degrees.iter().all(|&d| d <= 6));
    match find_x_interval_coloring(g, DEGREE_THREE_BOUND as u32, budget) {
        Search::Found(c) => Some(c),
        Search::Infeasible | Search::Exhausted => None,
    }
}

/// Result of the Δ ≤ 6 composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Delta6Coloring {
    pub coloring: EdgeColoring,
    pub certificate: BoundCertificate,
    /// The 7-color search failed and the degree-3 part was colored by the
    /// biregular (or multigraph) method instead.
    pub fallback: bool,
}

/// X-interval coloring of a graph with `Δ(G) ≤ 6` in at most 17 colors.
///
/// Degree-3 X-vertices are colored by [`interval7_search_36`] in `1..=7`; the
/// rest by [`interval_color_deg6_restricted`] shifted above them.
pub fn interval_color_delta6(
    g: &BipartiteGraph,
    budget: &mut NodeBudget,
) -> Result<Delta6Coloring> {
    let delta = g.max_degree();
    if delta > 6 {
        return Err(precondition(format!("Δ(G) = {delta} exceeds 6")));
    }
    let xdeg = g.x_degrees();
    let (a, a_map) = g.edge_induced_subgraph(|x| xdeg[x] == 3);
    let (b, b_map) = g.edge_induced_subgraph(|x| xdeg[x] != 3);

    let mut fallback = false;
    let (a_colors, a_bound) = if a.edge_count() == 0 {
        (Vec::new(), 0)
    } else if let Some(c) = interval7_search_36(&a, budget) {
        (c.into_colors(), DEGREE_THREE_BOUND)
    } else {
        fallback = true;
        let (c, cert) = if a.is_simple() {
            interval_color_biregular_with(&a, 3, 6)?
        } else {
            interval_color_multigraph(&a)?
        };
        (c.into_colors(), cert.guaranteed_bound)
    };
    let (b_colors, b_bound) = if b.edge_count() == 0 {
        (Vec::new(), 0)
    } else {
        let (c, _) = interval_color_deg6_restricted(&b)?;
        (c.into_colors(), RESTRICTED_BOUND)
    };

    let offset = a_colors.iter().copied().max().unwrap_or(0);
    let mut colors = vec![0; g.edge_count()];
    a_map.lift_into(&a_colors, 0, &mut colors);
    b_map.lift_into(&b_colors, offset, &mut colors);
    let coloring = EdgeColoring::from_positive(colors);
    let certificate = BoundCertificate::issue(Method::Delta6, a_bound + b_bound, g, &coloring)?;
    Ok(Delta6Coloring {
        coloring,
        certificate,
        fallback,
    })
}
