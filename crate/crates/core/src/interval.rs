//! X-interval colorings from biregular decompositions.
//!
//! A graph whose X-vertices all have degree `a` and whose Y-vertices have
//! degree at most `b` splits into at most `b` pieces of maximum degree `a`,
//! each owning whole X-stars. König-coloring every piece in its own block of
//! `a` colors gives each X-vertex a full block as its palette, for at most
//! `ab` colors. Running that per X-degree class in stacked windows covers
//! arbitrary simple bipartite graphs with `Δ²(Δ+1)/2` colors.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::graph::{verify_coloring, BipartiteGraph, EdgeColoring};
use crate::hypergraph::Hypergraph;
use crate::konig::konig_edge_color;

/// Coloring methods, in tie-break order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Biregular,
    General,
    Multigraph,
    Delta6Restricted,
    Delta6,
    Palette,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Biregular,
        Method::General,
        Method::Multigraph,
        Method::Delta6Restricted,
        Method::Delta6,
        Method::Palette,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Biregular => "biregular",
            Method::General => "general",
            Method::Multigraph => "multigraph",
            Method::Delta6Restricted => "delta6_restricted",
            Method::Delta6 => "delta6",
            Method::Palette => "palette",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

/// What a method promised and what it delivered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub method: Method,
    pub guaranteed_bound: u64,
    /// Largest color in the output.
    pub colors_used: u64,
    /// Proper, interval at every X-vertex, and within the bound.
    pub verified: bool,
}

impl BoundCertificate {
    /// Verifies `coloring` against `g` and records the outcome.
    pub fn issue(
        method: Method,
        guaranteed_bound: u64,
        g: &BipartiteGraph,
        coloring: &EdgeColoring,
    ) -> Result<Self> {
        let report = verify_coloring(g, coloring)?;
        let colors_used = u64::from(coloring.max_color());
        Ok(Self {
            method,
            guaranteed_bound,
            colors_used,
            verified: report.is_x_interval() && colors_used <= guaranteed_bound,
        })
    }
}

impl fmt::Display for BoundCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "method={} guaranteed_bound={} colors_used={} verified={}",
            self.method, self.guaranteed_bound, self.colors_used, self.verified
        )
    }
}

/// Edge-disjoint pieces of a graph, each owning whole X-stars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Edge positions of each part, increasing.
    pub parts: Vec<Vec<usize>>,
    /// Part of each X-vertex; `None` for isolated vertices.
    pub x_assignment: Vec<Option<usize>>,
}

impl Decomposition {
    /// Checks the partition invariants and the per-part degree cap `a`.
    pub fn check(&self, g: &BipartiteGraph, a: usize) -> std::result::Result<(), String> {
        let mut owner = vec![None; g.edge_count()];
        for (i, part) in self.parts.iter().enumerate() {
            let mut xdeg = vec![0; g.x_count()];
            let mut ydeg = vec![0; g.y_count()];
            for &e in part {
                if owner[e].replace(i).is_some() {
                    return Err(format!("edge {e} in two parts"));
                }
                let (x, y) = g.edges()[e];
                xdeg[x] += 1;
                ydeg[y] += 1;
                if self.x_assignment[x] != Some(i) {
                    return Err(format!("edge {e} lies in part {i} but x{x} does not"));
                }
            }
            if xdeg.iter().chain(&ydeg).any(|&d| d > a) {
                return Err(format!("part {i} has a vertex of degree above {a}"));
            }
        }
        if let Some(e) = owner.iter().position(Option::is_none) {
            return Err(format!("edge {e} is in no part"));
        }
        let deg = g.x_degrees();
        for (x, slot) in self.x_assignment.iter().enumerate() {
            if (deg[x] > 0) != slot.is_some() {
                return Err(format!("x{x} assignment does not match its degree"));
            }
        }
        Ok(())
    }
}

/// The degree shared by all non-isolated X-vertices, if there is one.
pub fn uniform_x_degree(g: &BipartiteGraph) -> Option<usize> {
    let mut degs = g.x_degrees().into_iter().filter(|&d| d > 0);
    let first = degs.next().unwrap_or(0);
    degs.all(|d| d == first).then_some(first)
}

/// Splits `g` into at most `b` parts of maximum degree `a`.
///
/// Requires a simple graph where every non-isolated X-vertex has degree `a`
/// and every Y-vertex has degree at most `b`. The neighborhood hypergraph is
/// greedily colored with at most `a(b-1)+1` colors; color `c` goes to block
/// `(c-1)/a`. Empty blocks are dropped and the rest renumbered in order.
pub fn biregular_decompose(g: &BipartiteGraph, a: usize, b: usize) -> Result<Decomposition> {
    if !g.is_simple() {
        return Err(precondition("biregular decomposition needs a simple graph"));
    }
    let xdeg = g.x_degrees();
    if let Some(x) = xdeg.iter().position(|&d| d > 0 && d != a) {
        return Err(precondition(format!(
            "x{x} has degree {}, expected {a}",
            xdeg[x]
        )));
    }
    if let Some((y, d)) = g.y_degrees().into_iter().enumerate().find(|&(_, d)| d > b) {
        return Err(precondition(format!("y{y} has degree {d}, above {b}")));
    }
    if g.edge_count() == 0 {
        return Ok(Decomposition {
            parts: Vec::new(),
            x_assignment: vec![None; g.x_count()],
        });
    }

    let colors = Hypergraph::from_neighborhoods(g).greedy_edge_color();
    let block_of = |x: usize| (colors[x] - 1) / a;
    let used: BTreeSet<usize> = (0..g.x_count())
        .filter(|&x| xdeg[x] > 0)
        .map(block_of)
        .collect();
    let rank: BTreeMap<usize, usize> = used.iter().enumerate().map(|(i, &blk)| (blk, i)).collect();

    let x_assignment: Vec<Option<usize>> = (0..g.x_count())
        .map(|x| (xdeg[x] > 0).then(|| rank[&block_of(x)]))
        .collect();
    let mut parts = vec![Vec::new(); rank.len()];
    for (e, &(x, _)) in g.edges().iter().enumerate() {
        parts[x_assignment[x].unwrap()].push(e);
    }
    if parts.len() > b.max(1) {
        return Err(Error::Internal(format!(
            "{} parts exceed the limit {b}",
            parts.len()
        )));
    }
    Ok(Decomposition {
        parts,
        x_assignment,
    })
}

/// König-colors every part in its own window: part `i` gets
/// `offset + i*width + 1 ..= offset + (i+1)*width`.
fn color_parts(
    g: &BipartiteGraph,
    x_assignment: &[Option<usize>],
    part_count: usize,
    width: u32,
    offset: u32,
    target: &mut [u32],
) {
    for part in 0..part_count {
        let (sub, map) = g.edge_induced_subgraph(|x| x_assignment[x] == Some(part));
        let coloring = konig_edge_color(&sub);
        map.lift_into(coloring.colors(), offset + part as u32 * width, target);
    }
}

/// X-interval coloring of a graph with uniform X-degree `a` and Y-degrees at
/// most `b`, using at most `ab` colors.
pub fn interval_color_biregular_with(
    g: &BipartiteGraph,
    a: usize,
    b: usize,
) -> Result<(EdgeColoring, BoundCertificate)> {
    let dec = biregular_decompose(g, a, b)?;
    let mut colors = vec![0; g.edge_count()];
    color_parts(
        g,
        &dec.x_assignment,
        dec.parts.len(),
        a as u32,
        0,
        &mut colors,
    );
    let coloring = EdgeColoring::from_positive(colors);
    let cert = BoundCertificate::issue(Method::Biregular, (a * b) as u64, g, &coloring)?;
    Ok((coloring, cert))
}

/// [`interval_color_biregular_with`] where `a` is the common X-degree and `b`
/// the largest Y-degree.
pub fn interval_color_biregular(g: &BipartiteGraph) -> Result<(EdgeColoring, BoundCertificate)> {
    let a = uniform_x_degree(g)
        .ok_or_else(|| precondition("X-vertices do not share a common degree"))?;
    let b = g.y_degrees().into_iter().max().unwrap_or(0);
    interval_color_biregular_with(g, a, b)
}

/// `Δ²(Δ+1)/2`.
pub fn general_bound(max_degree: usize) -> u64 {
    let d = max_degree as u64;
    d * d * (d + 1) / 2
}

/// `Σ_{d=1}^{Δ} d·(d(Δ-1)+1)`, the multigraph guarantee.
pub fn multigraph_bound(max_degree: usize) -> u64 {
    let delta = max_degree as u64;
    (1..=delta).map(|d| d * (d * (delta - 1) + 1)).sum()
}

/// X-interval coloring of any simple bipartite graph.
///
/// Each nonempty X-degree class `d` is colored as a subgraph of a
/// `(d, Δ)`-biregular graph inside its own window of `dΔ` colors; windows are
/// stacked by increasing `d`.
pub fn interval_color_general(g: &BipartiteGraph) -> Result<(EdgeColoring, BoundCertificate)> {
    if !g.is_simple() {
        return Err(precondition(
            "the cubic bound needs a simple graph; use the multigraph method",
        ));
    }
    let delta = g.max_degree();
    let xdeg = g.x_degrees();
    let mut colors = vec![0; g.edge_count()];
    let mut offset = 0u32;
    for d in 1..=delta {
        if !xdeg.contains(&d) {
            continue;
        }
        let (sub, map) = g.edge_induced_subgraph(|x| xdeg[x] == d);
        let dec = biregular_decompose(&sub, d, delta)?;
        let mut sub_colors = vec![0; sub.edge_count()];
        color_parts(
            &sub,
            &dec.x_assignment,
            dec.parts.len(),
            d as u32,
            0,
            &mut sub_colors,
        );
        map.lift_into(&sub_colors, offset, &mut colors);
        offset += (d * delta) as u32;
    }
    let coloring = EdgeColoring::from_positive(colors);
    let cert = BoundCertificate::issue(Method::General, general_bound(delta), g, &coloring)?;
    Ok((coloring, cert))
}

/// X-interval coloring of a bipartite multigraph.
///
/// Per X-degree class `d`, every greedy color class of the neighborhood
/// hypergraph is its own part (a disjoint union of X-stars), König-colored in
/// a window of width `d`. A class costs at most `d(d(Δ-1)+1)` colors.
pub fn interval_color_multigraph(g: &BipartiteGraph) -> Result<(EdgeColoring, BoundCertificate)> {
    let delta = g.max_degree();
    let xdeg = g.x_degrees();
    let mut colors = vec![0; g.edge_count()];
    let mut offset = 0u32;
    for d in 1..=delta {
        if !xdeg.contains(&d) {
            continue;
        }
        let (sub, map) = g.edge_induced_subgraph(|x| xdeg[x] == d);
        let h = Hypergraph::from_neighborhoods(&sub);
        let hcolors = h.greedy_edge_color();
        let used = hcolors.iter().copied().max().unwrap_or(0);
        let assignment: Vec<Option<usize>> = hcolors.iter().map(|&c| Some(c - 1)).collect();
        let mut sub_colors = vec![0; sub.edge_count()];
        color_parts(&sub, &assignment, used, d as u32, 0, &mut sub_colors);
        map.lift_into(&sub_colors, offset, &mut colors);
        offset += (d * used) as u32;
    }
    let coloring = EdgeColoring::from_positive(colors);
    let cert = BoundCertificate::issue(Method::Multigraph, multigraph_bound(delta), g, &coloring)?;
    Ok((coloring, cert))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(m: usize, n: usize) -> BipartiteGraph {
        let edges = (0..m).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
        BipartiteGraph::new(m, n, edges, false).unwrap()
    }

    #[test]
    fn matching_is_one_part() {
        let g = BipartiteGraph::new(3, 3, vec![(0, 0), (1, 1), (2, 2)], false).unwrap();
        let dec = biregular_decompose(&g, 1, 1).unwrap();
        assert_eq!(dec.parts, vec![vec![0, 1, 2]]);
        dec.check(&g, 1).unwrap();
        let (c, cert) = interval_color_biregular(&g).unwrap();
        assert_eq!(c.max_color(), 1);
        assert!(cert.verified);
    }

    #[test]
    fn k22_decomposition() {
        let g = complete(2, 2);
        let dec = biregular_decompose(&g, 2, 2).unwrap();
        assert!(dec.parts.len() <= 2);
        dec.check(&g, 2).unwrap();
    }

    #[test]
    fn two_three_biregular_has_at_most_three_parts() {
        // K_{3,2} with X on the size-3 side is (2,3)-biregular.
        let g = complete(3, 2);
        let dec = biregular_decompose(&g, 2, 3).unwrap();
        assert!(dec.parts.len() <= 3);
        dec.check(&g, 2).unwrap();
    }

    #[test]
    fn decompose_rejects_wrong_degrees() {
        let g = BipartiteGraph::new(2, 2, vec![(0, 0), (0, 1), (1, 0)], false).unwrap();
        assert!(matches!(
            biregular_decompose(&g, 2, 2),
            Err(Error::PreconditionViolated(_))
        ));
        let g = complete(3, 1);
        assert!(matches!(
            biregular_decompose(&g, 1, 2),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn biregular_palettes_are_full_blocks() {
        let g = complete(3, 3);
        let (c, cert) = interval_color_biregular(&g).unwrap();
        assert!(cert.verified);
        assert!(cert.colors_used <= 9);
        for p in c.x_palettes(&g) {
            let lo = *p.first().unwrap();
            assert_eq!((lo - 1) % 3, 0);
            assert_eq!(p, (lo..lo + 3).collect::<BTreeSet<_>>());
        }
    }

    #[test]
    fn k23_degree_two_side() {
        // X = the three degree-2 vertices.
        let g = complete(3, 2);
        let (_, cert) = interval_color_biregular(&g).unwrap();
        assert!(cert.verified);
        assert!(cert.colors_used <= 6);
    }

    #[test]
    fn biregular_rejects_mixed_degrees() {
        let g = BipartiteGraph::new(2, 2, vec![(0, 0), (0, 1), (1, 0)], false).unwrap();
        assert!(matches!(
            interval_color_biregular(&g),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn general_star() {
        let g = complete(1, 5);
        let (c, cert) = interval_color_general(&g).unwrap();
        assert!(cert.verified);
        assert_eq!(c.x_palettes(&g)[0], (1..=5).collect::<BTreeSet<_>>());
    }

    #[test]
    fn general_mixed_degrees_within_cubic_bound() {
        // X-degrees 1 and 3, Δ = 3.
        let g = BipartiteGraph::new(
            3,
            3,
            vec![(0, 0), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2), (2, 0)],
            false,
        )
        .unwrap();
        assert_eq!(g.max_degree(), 3);
        let (c, cert) = interval_color_general(&g).unwrap();
        assert_eq!(cert.guaranteed_bound, 18);
        assert!(cert.verified);
        // Degree-1 class sits below the degree-3 window.
        let pal = c.x_palettes(&g);
        assert!(pal[0].iter().all(|&c| c <= 3));
        assert!(pal[1].iter().chain(&pal[2]).all(|&c| c > 3));
    }

    #[test]
    fn general_rejects_multigraph() {
        let g = BipartiteGraph::new(1, 1, vec![(0, 0), (0, 0)], true).unwrap();
        assert!(interval_color_general(&g).is_err());
    }

    #[test]
    fn multigraph_double_edge() {
        let g = BipartiteGraph::new(1, 1, vec![(0, 0), (0, 0)], true).unwrap();
        let (c, cert) = interval_color_multigraph(&g).unwrap();
        assert!(cert.verified);
        assert_eq!(c.x_palettes(&g)[0], [1, 2].into_iter().collect());
    }

    #[test]
    fn multigraph_two_double_edges() {
        let g = BipartiteGraph::new(2, 2, vec![(0, 0), (0, 0), (1, 1), (1, 1)], true).unwrap();
        let (_, cert) = interval_color_multigraph(&g).unwrap();
        assert!(cert.verified);
        assert!(cert.colors_used <= 2 * (2 + 1));
    }

    #[test]
    fn multigraph_accepts_simple_graphs() {
        let g = complete(3, 3);
        let (_, cert) = interval_color_multigraph(&g).unwrap();
        assert!(cert.verified);
        assert!(multigraph_bound(3) >= general_bound(3));
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>(), Ok(m));
        }
    }
}
