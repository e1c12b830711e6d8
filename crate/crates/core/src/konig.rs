//! Proper `Δ`-edge coloring of bipartite multigraphs.
//!
//! Edges are inserted one at a time. For edge `xy` let `α` be the smallest
//! color missing at `x` and `β` the smallest missing at `y`. If `α` is taken
//! at `y`, the `α/β` alternating path starting at `y` is flipped; it cannot
//! reach `x` because the graph is bipartite, so afterwards `α` is free at both
//! ends.

use crate::graph::{BipartiteGraph, EdgeColoring};

const NONE: usize = usize::MAX;

struct Tables {
    // slot[v * width + c] = edge with color c + 1 at vertex v, or NONE
    slot: Vec<usize>,
    width: usize,
}

impl Tables {
    fn get(&self, v: usize, c: u32) -> usize {
        self.slot[v * self.width + (c as usize - 1)]
    }

    fn set(&mut self, v: usize, c: u32, e: usize) {
        self.slot[v * self.width + (c as usize - 1)] = e;
    }

    fn smallest_missing(&self, v: usize) -> u32 {
        let row = &self.slot[v * self.width..(v + 1) * self.width];
        row.iter()
            .position(|&e| e == NONE)
            .map_or(self.width as u32 + 1, |i| i as u32 + 1)
    }
}

/// Colors the edges of `g` with at most `Δ(g)` colors.
pub fn konig_edge_color(g: &BipartiteGraph) -> EdgeColoring {
    let nx = g.x_count();
    let width = g.max_degree();
    let vertex_count = nx + g.y_count();
    let mut t = Tables {
        slot: vec![NONE; vertex_count * width],
        width,
    };
    // Endpoints in the unified vertex space: X first, then Y.
    let ends: Vec<(usize, usize)> = g.edges().iter().map(|&(x, y)| (x, nx + y)).collect();
    let mut colors = vec![0u32; ends.len()];

    let mut path = Vec::new();
    for (e, &(x, y)) in ends.iter().enumerate() {
        let alpha = t.smallest_missing(x);
        let beta = t.smallest_missing(y);
        if alpha != beta && t.get(y, alpha) != NONE {
            // Walk the alpha/beta path from y, collecting its edges.
            path.clear();
            let mut v = y;
            let mut want = alpha;
            loop {
                let f = t.get(v, want);
                if f == NONE {
                    break;
                }
                path.push(f);
                let (a, b) = ends[f];
                v = if a == v { b } else { a };
                want = if want == alpha { beta } else { alpha };
            }
            debug_assert!(path.iter().all(|&f| ends[f].0 != x || colors[f] != alpha));
            for &f in &path {
                let (a, b) = ends[f];
                let c = colors[f];
                if t.get(a, c) == f {
                    t.set(a, c, NONE);
                }
                if t.get(b, c) == f {
                    t.set(b, c, NONE);
                }
            }
            for &f in &path {
                let (a, b) = ends[f];
                let c = if colors[f] == alpha { beta } else { alpha };
                colors[f] = c;
                t.set(a, c, f);
                t.set(b, c, f);
            }
        }
        colors[e] = alpha;
        t.set(x, alpha, e);
        t.set(y, alpha, e);
    }
    EdgeColoring::from_positive(colors)
}
