//! Petersen 2-factorization of 6-regular looped multigraphs and the
//! alternating coloring of its factors.

use crate::error::{precondition, Error, Result};
use crate::graph::{BipartiteGraph, LoopedMultigraph};
use crate::konig::konig_edge_color;

use super::doubled::Provenance;

/// Three edge sets of a 6-regular looped multigraph, each a 2-factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactorization {
    pub factors: [Vec<usize>; 3],
}

impl TwoFactorization {
    /// Checks that the factors partition the edges and are spanning and
    /// 2-regular, with loops counting 2.
    pub fn check(&self, h: &LoopedMultigraph) -> std::result::Result<(), String> {
        let mut seen = vec![false; h.edges().len()];
        for (i, factor) in self.factors.iter().enumerate() {
            let mut deg = vec![0; h.vertex_count()];
            for &e in factor {
                if std::mem::replace(&mut seen[e], true) {
                    return Err(format!("edge {e} repeated"));
                }
                let (u, v) = h.edges()[e];
                deg[u] += 1;
                deg[v] += 1;
            }
            if let Some(v) = deg.iter().position(|&d| d != 2) {
                return Err(format!("vertex {v} has degree {} in factor {i}", deg[v]));
            }
        }
        if let Some(e) = seen.iter().position(|&s| !s) {
            return Err(format!("edge {e} in no factor"));
        }
        Ok(())
    }
}

/// Orients every edge along an Eulerian circuit of its component
/// (Hierholzer). Returns `(tail, head)` per edge; loops point at themselves.
pub fn eulerian_orientation(h: &LoopedMultigraph) -> Vec<(usize, usize)> {
    let inc = h.incidence();
    let edges = h.edges();
    let mut used = vec![false; edges.len()];
    let mut next = vec![0usize; h.vertex_count()];
    let mut orient = vec![(0, 0); edges.len()];
    for start in 0..h.vertex_count() {
        let mut stack = vec![start];
        while let Some(&v) = stack.last() {
            // Skip incidences of edges already walked.
            while next[v] < inc[v].len() && used[inc[v][next[v]]] {
                next[v] += 1;
            }
            if next[v] == inc[v].len() {
                stack.pop();
                continue;
            }
            let e = inc[v][next[v]];
            used[e] = true;
            let (a, b) = edges[e];
            let w = if a == v { b } else { a };
            orient[e] = (v, w);
            stack.push(w);
        }
    }
    orient
}

/// Splits a 6-regular looped multigraph into three 2-factors.
///
/// Orient along Eulerian circuits so every vertex has in- and out-degree 3,
/// then König-3-color the bipartite graph joining out-copies to in-copies.
/// Each color class is a perfect matching there, hence a 2-factor here.
pub fn petersen_two_factorization(h: &LoopedMultigraph) -> Result<TwoFactorization> {
    if let Some(v) = h.degrees().iter().position(|&d| d != 6) {
        return Err(precondition(format!("vertex {v} does not have degree 6")));
    }
    let n = h.vertex_count();
    let orient = eulerian_orientation(h);
    let split = BipartiteGraph::new(n, n, orient, true)?;
    let colors = konig_edge_color(&split);
    let mut factors: [Vec<usize>; 3] = Default::default();
    for (e, &c) in colors.colors().iter().enumerate() {
        match c {
            1..=3 => factors[c as usize - 1].push(e),
            _ => return Err(Error::Internal(format!("split graph used color {c}"))),
        }
    }
    Ok(TwoFactorization { factors })
}

/// Colors factor `i` (0-based) alternately with `2i+1` and `2i+2` along its
/// cycles.
///
/// An odd cycle is started at its first cross edge or loop, so the single
/// pair of equal consecutive colors meets at an edge outside `G`.
pub fn alternate_color_factors(
    h: &LoopedMultigraph,
    factorization: &TwoFactorization,
    provenance: &[Provenance],
) -> Result<Vec<u32>> {
    let edges = h.edges();
    let mut colors = vec![0u32; edges.len()];
    let mut inc: Vec<Vec<usize>> = vec![Vec::new(); h.vertex_count()];
    for (i, factor) in factorization.factors.iter().enumerate() {
        for list in inc.iter_mut() {
            list.clear();
        }
        for &e in factor {
            let (u, v) = edges[e];
            inc[u].push(e);
            inc[v].push(e);
        }
        let (odd_color, even_color) = (2 * i as u32 + 1, 2 * i as u32 + 2);
        let mut done = vec![false; edges.len()];
        for &first in factor {
            if done[first] {
                continue;
            }
            let mut cycle = vec![first];
            let (u, mut v) = edges[first];
            let mut cur = first;
            // A loop is a cycle on its own; otherwise walk until back at u.
            while v != u {
                let next = *inc[v]
                    .iter()
                    .find(|&&f| f != cur)
                    .ok_or_else(|| Error::Internal("vertex with one factor edge".into()))?;
                cycle.push(next);
                let (a, b) = edges[next];
                v = if a == v { b } else { a };
                cur = next;
            }
            if cycle.len() % 2 == 1 {
                let start = cycle
                    .iter()
                    .position(|&e| provenance[e].is_padding())
                    .ok_or_else(|| Error::Internal("odd cycle made of graph edges".into()))?;
                cycle.rotate_left(start);
            }
            for (k, &e) in cycle.iter().enumerate() {
                done[e] = true;
                colors[e] = if k % 2 == 0 { odd_color } else { even_color };
            }
        }
    }
    Ok(colors)
}
