//! The 6-regular looped multigraph built from two copies of `G`.

use crate::error::{precondition, Result};
use crate::graph::{BipartiteGraph, LoopedMultigraph};

/// Where an edge of the doubled graph came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Edge `e` of `G`.
    Original(usize),
    /// The copy of edge `e` in `G'`.
    Copy(usize),
    /// The edge `v v'` added at an odd-degree vertex `v` of `G`.
    Cross(usize),
    /// A padding loop at the given vertex of the doubled graph.
    Loop(usize),
}

impl Provenance {
    /// Cross edges and loops: edges with no counterpart in `G` or `G'`.
    pub fn is_padding(self) -> bool {
        matches!(self, Provenance::Cross(_) | Provenance::Loop(_))
    }
}

/// A doubled graph together with the origin of each of its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Doubled {
    pub graph: LoopedMultigraph,
    pub provenance: Vec<Provenance>,
    /// Vertices of `G` (X first, then Y); vertex `v` of `G` is `v` in the
    /// doubled graph and its copy is `v + base`.
    pub base: usize,
}

/// Checks the degree conditions shared by the restricted Δ=6 pipeline.
pub(crate) fn check_restricted(g: &BipartiteGraph) -> Result<()> {
    let p = g.degree_profile();
    if p.max_degree > 6 {
        return Err(precondition(format!("Δ(G) = {} exceeds 6", p.max_degree)));
    }
    if let Some(x) = p.x_degrees.iter().position(|&d| d == 3) {
        return Err(precondition(format!("x{x} has degree 3")));
    }
    Ok(())
}

/// Joins `G` and a copy `G'` into a 6-regular multigraph.
///
/// An odd-degree vertex `v` gets the edge `v v'` plus `3-(d+1)/2` loops at
/// both `v` and `v'`; an even-degree vertex gets `3-d/2` loops at each. Edge
/// order: the `G` edges, their copies, then per vertex of `G` its cross edge
/// and loops.
pub fn build_doubled(g: &BipartiteGraph) -> Result<Doubled> {
    check_restricted(g)?;
    let nx = g.x_count();
    let base = nx + g.y_count();
    let degrees: Vec<usize> = g.x_degrees().into_iter().chain(g.y_degrees()).collect();

    let mut edges = Vec::with_capacity(3 * base * 2);
    let mut provenance = Vec::with_capacity(3 * base * 2);
    for (e, &(x, y)) in g.edges().iter().enumerate() {
        edges.push((x, nx + y));
        provenance.push(Provenance::Original(e));
    }
    for (e, &(x, y)) in g.edges().iter().enumerate() {
        edges.push((base + x, base + nx + y));
        provenance.push(Provenance::Copy(e));
    }
    for (v, &d) in degrees.iter().enumerate() {
        let loops = if d % 2 == 1 {
            edges.push((v, base + v));
            provenance.push(Provenance::Cross(v));
            3 - d.div_ceil(2)
        } else {
            3 - d / 2
        };
        for w in [v, base + v] {
            for _ in 0..loops {
                edges.push((w, w));
                provenance.push(Provenance::Loop(w));
            }
        }
    }
    Ok(Doubled {
        graph: LoopedMultigraph::new(2 * base, edges)?,
        provenance,
        base,
    })
}
