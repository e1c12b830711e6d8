//! Bipartite (multi)graphs, positional edge colorings and the coloring verifier.
//!
//! Edges are identified by their position in the edge list. Every coloring in
//! this crate is a vector aligned with that list, which keeps parallel edges
//! distinguishable without extra keys.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bipartite graph `G = (X, Y; E)` with an ordered edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BipartiteGraph {
    x_count: usize,
    y_count: usize,
    edges: Vec<(usize, usize)>,
    allow_multi: bool,
}

impl BipartiteGraph {
    /// Builds a graph, checking index ranges and, unless `allow_multi` is set,
    /// rejecting repeated `(x, y)` pairs.
    pub fn new(
        x_count: usize,
        y_count: usize,
        edges: Vec<(usize, usize)>,
        allow_multi: bool,
    ) -> Result<Self> {
        let mut seen = HashSet::new();
        for (i, &(x, y)) in edges.iter().enumerate() {
            if x >= x_count {
                return Err(Error::IndexOutOfRange {
                    edge: i,
                    side: 'x',
                    index: x,
                    count: x_count,
                });
            }
            if y >= y_count {
                return Err(Error::IndexOutOfRange {
                    edge: i,
                    side: 'y',
                    index: y,
                    count: y_count,
                });
            }
            if !allow_multi && !seen.insert((x, y)) {
                return Err(Error::DuplicateEdge { x, y });
            }
        }
        Ok(Self {
            x_count,
            y_count,
            edges,
            allow_multi,
        })
    }

    /// A graph with no edges.
    pub fn empty(x_count: usize, y_count: usize) -> Self {
        Self {
            x_count,
            y_count,
            edges: Vec::new(),
            allow_multi: false,
        }
    }

    pub fn x_count(&self) -> usize {
        self.x_count
    }

    pub fn y_count(&self) -> usize {
        self.y_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn allow_multi(&self) -> bool {
        self.allow_multi
    }

    /// True when no `(x, y)` pair repeats, regardless of the multi flag.
    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.edges.len());
        self.edges.iter().all(|e| seen.insert(*e))
    }

    pub fn x_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.x_count];
        for &(x, _) in &self.edges {
            deg[x] += 1;
        }
        deg
    }

    pub fn y_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.y_count];
        for &(_, y) in &self.edges {
            deg[y] += 1;
        }
        deg
    }

    /// `Δ(G)`.
    pub fn max_degree(&self) -> usize {
        let dx = self.x_degrees().into_iter().max().unwrap_or(0);
        let dy = self.y_degrees().into_iter().max().unwrap_or(0);
        dx.max(dy)
    }

    /// `Δ(X)`.
    pub fn max_x_degree(&self) -> usize {
        self.x_degrees().into_iter().max().unwrap_or(0)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let x_degrees = self.x_degrees();
        let y_degrees = self.y_degrees();
        let max_x = x_degrees.iter().copied().max().unwrap_or(0);
        let max_y = y_degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile {
            x_degrees,
            y_degrees,
            max_degree: max_x.max(max_y),
            max_x_degree: max_x,
        }
    }

    /// Edge positions incident to each X-vertex, in edge-list order.
    pub fn x_incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.x_count];
        for (i, &(x, _)) in self.edges.iter().enumerate() {
            inc[x].push(i);
        }
        inc
    }

    /// Edge positions incident to each Y-vertex, in edge-list order.
    pub fn y_incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.y_count];
        for (i, &(_, y)) in self.edges.iter().enumerate() {
            inc[y].push(i);
        }
        inc
    }

    /// The subgraph formed by every edge incident to a selected X-vertex.
    ///
    /// Selected X-vertices are renumbered in increasing order; the Y side is
    /// kept whole so Y indices are unchanged.
    pub fn edge_induced_subgraph<F>(&self, mut select: F) -> (BipartiteGraph, SubgraphMap)
    where
        F: FnMut(usize) -> bool,
    {
        let mut x_new = vec![None; self.x_count];
        let mut x_map = Vec::new();
        for (x, slot) in x_new.iter_mut().enumerate() {
            if select(x) {
                *slot = Some(x_map.len());
                x_map.push(x);
            }
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (i, &(x, y)) in self.edges.iter().enumerate() {
            if let Some(nx) = x_new[x] {
                edges.push((nx, y));
                edge_map.push(i);
            }
        }
        let sub = BipartiteGraph {
            x_count: x_map.len(),
            y_count: self.y_count,
            edges,
            allow_multi: self.allow_multi,
        };
        (
            sub,
            SubgraphMap {
                x_map,
                edge_map,
                parent_edge_count: self.edges.len(),
            },
        )
    }
}

/// Degree counts of a graph, including parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub x_degrees: Vec<usize>,
    pub y_degrees: Vec<usize>,
    pub max_degree: usize,
    pub max_x_degree: usize,
}

/// Index maps from an edge-induced subgraph back to its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphMap {
    /// Subgraph X index to parent X index.
    pub x_map: Vec<usize>,
    /// Subgraph edge position to parent edge position.
    pub edge_map: Vec<usize>,
    pub parent_edge_count: usize,
}

impl SubgraphMap {
    /// Writes `colors` (aligned with the subgraph's edges), shifted by
    /// `offset`, into the matching positions of `target`.
    pub fn lift_into(&self, colors: &[u32], offset: u32, target: &mut [u32]) {
        debug_assert_eq!(colors.len(), self.edge_map.len());
        debug_assert_eq!(target.len(), self.parent_edge_count);
        for (&c, &p) in colors.iter().zip(&self.edge_map) {
            target[p] = c + offset;
        }
    }
}

/// A multigraph on `0..vertex_count` where loops are allowed and count 2
/// towards the degree of their vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopedMultigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl LoopedMultigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::IndexOutOfRange {
                        edge: i,
                        side: 'v',
                        index: w,
                        count: vertex_count,
                    });
                }
            }
        }
        Ok(Self {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Edge positions incident to each vertex. A loop is listed twice.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push(i);
            inc[v].push(i);
        }
        inc
    }
}

/// A positional edge coloring; colors are positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeColoring {
    colors: Vec<u32>,
    max_color: u32,
}

impl EdgeColoring {
    /// Wraps a color vector. Zero entries are rejected.
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(edge) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidColor { edge });
        }
        let max_color = colors.iter().copied().max().unwrap_or(0);
        Ok(Self { colors, max_color })
    }

    pub(crate) fn from_positive(colors: Vec<u32>) -> Self {
        debug_assert!(colors.iter().all(|&c| c > 0));
        let max_color = colors.iter().copied().max().unwrap_or(0);
        Self { colors, max_color }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn into_colors(self) -> Vec<u32> {
        self.colors
    }

    /// Largest color in use; 0 for the empty coloring.
    pub fn max_color(&self) -> u32 {
        self.max_color
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Palette of every X-vertex.
    pub fn x_palettes(&self, g: &BipartiteGraph) -> Vec<BTreeSet<u32>> {
        let mut pal = vec![BTreeSet::new(); g.x_count()];
        for (&(x, _), &c) in g.edges().iter().zip(&self.colors) {
            pal[x].insert(c);
        }
        pal
    }

    /// Palette of every Y-vertex.
    pub fn y_palettes(&self, g: &BipartiteGraph) -> Vec<BTreeSet<u32>> {
        let mut pal = vec![BTreeSet::new(); g.y_count()];
        for (&(_, y), &c) in g.edges().iter().zip(&self.colors) {
            pal[y].insert(c);
        }
        pal
    }
}

/// Result of checking a coloring against a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub proper: bool,
    pub interval_at_x: bool,
    /// X-vertices whose palette is not a run of consecutive integers.
    pub violating_vertices: Vec<usize>,
    /// Pairs `(i, j)`, `i < j`, of edges sharing an endpoint and a color.
    pub violating_edge_pairs: Vec<(usize, usize)>,
}

impl VerificationReport {
    pub fn is_x_interval(&self) -> bool {
        self.proper && self.interval_at_x
    }
}

/// True when the set is empty or a run of consecutive integers.
pub fn is_interval(palette: &BTreeSet<u32>) -> bool {
    match (palette.first(), palette.last()) {
        (Some(&lo), Some(&hi)) => (hi - lo) as usize + 1 == palette.len(),
        _ => true,
    }
}

/// Checks properness at every vertex and the interval condition at X.
pub fn verify_coloring(g: &BipartiteGraph, coloring: &EdgeColoring) -> Result<VerificationReport> {
    if coloring.len() != g.edge_count() {
        return Err(Error::LengthMismatch {
            expected: g.edge_count(),
            got: coloring.len(),
        });
    }
    let colors = coloring.colors();
    let mut pairs = BTreeSet::new();
    for inc in g.x_incidence().iter().chain(g.y_incidence().iter()) {
        for (a, &i) in inc.iter().enumerate() {
            for &j in &inc[a + 1..] {
                if colors[i] == colors[j] {
                    pairs.insert((i.min(j), i.max(j)));
                }
            }
        }
    }
    let violating_vertices: Vec<usize> = coloring
        .x_palettes(g)
        .iter()
        .enumerate()
        .filter(|(_, p)| !is_interval(p))
        .map(|(x, _)| x)
        .collect();
    Ok(VerificationReport {
        proper: pairs.is_empty(),
        interval_at_x: violating_vertices.is_empty(),
        violating_vertices,
        violating_edge_pairs: pairs.into_iter().collect(),
    })
}
