//! Palettes of proper colorings: grouping X-vertices by palette, turning any
//! proper coloring into an X-interval one, and the palette index of tiny
//! graphs by exhaustive search.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{verify_coloring, BipartiteGraph, EdgeColoring};
use crate::interval::{BoundCertificate, Method};
use crate::konig::konig_edge_color;
use crate::oracle::NodeBudget;

/// A palette and the X-vertices carrying it.
pub type PaletteGroup = (BTreeSet<u32>, Vec<usize>);

/// Distinct palettes over the non-isolated X-vertices, ordered
/// lexicographically by palette, each with its vertices in increasing order.
pub fn x_palettes(g: &BipartiteGraph, coloring: &EdgeColoring) -> Result<Vec<PaletteGroup>> {
    if !verify_coloring(g, coloring)?.proper {
        return Err(Error::NotProper);
    }
    let mut groups: BTreeMap<BTreeSet<u32>, Vec<usize>> = BTreeMap::new();
    for (x, palette) in coloring.x_palettes(g).into_iter().enumerate() {
        if !palette.is_empty() {
            groups.entry(palette).or_default().push(x);
        }
    }
    Ok(groups.into_iter().collect())
}

/// Converts a proper coloring into an X-interval coloring with at most
/// `Δ(X)` colors per distinct X-palette.
///
/// The X-vertices sharing a palette of size `d` span a subgraph whose
/// X-degrees are all `d` and whose Y-degrees are at most `d`, since the input
/// is proper. König-coloring it with `d` colors gives every such X-vertex
/// the full window; the groups take consecutive windows in palette order.
pub fn interval_from_palettes(
    g: &BipartiteGraph,
    coloring: &EdgeColoring,
) -> Result<(EdgeColoring, BoundCertificate)> {
    let groups = x_palettes(g, coloring)?;
    let mut group_of = vec![usize::MAX; g.x_count()];
    for (i, (_, xs)) in groups.iter().enumerate() {
        for &x in xs {
            group_of[x] = i;
        }
    }
    let mut colors = vec![0; g.edge_count()];
    let mut offset = 0u32;
    for (i, (palette, _)) in groups.iter().enumerate() {
        let (sub, map) = g.edge_induced_subgraph(|x| group_of[x] == i);
        let local = konig_edge_color(&sub);
        map.lift_into(local.colors(), offset, &mut colors);
        offset += palette.len() as u32;
    }
    let coloring = EdgeColoring::from_positive(colors);
    let bound = (g.max_x_degree() * groups.len()) as u64;
    let cert = BoundCertificate::issue(Method::Palette, bound, g, &coloring)?;
    Ok((coloring, cert))
}

/// Which vertices contribute palettes to the count.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Scope {
    All,
    XSide,
}

/// Palette index `š(G)`: the fewest distinct palettes over all proper edge
/// colorings, counting every non-isolated vertex on both sides.
///
/// Exhaustive over colorings with at most `|E|` colors, with colors
/// introduced in first-use order. `None` when `budget` runs out. A graph
/// without edges has index 0.
pub fn palette_index_bruteforce(g: &BipartiteGraph, budget: &mut NodeBudget) -> Option<usize> {
    min_palettes(g, Scope::All, budget)
}

/// Like [`palette_index_bruteforce`], counting only X-vertex palettes.
pub fn x_palette_index_bruteforce(g: &BipartiteGraph, budget: &mut NodeBudget) -> Option<usize> {
    min_palettes(g, Scope::XSide, budget)
}

struct Enumerator<'a> {
    g: &'a BipartiteGraph,
    scope: Scope,
    x_used: Vec<u64>,
    y_used: Vec<u64>,
    best: usize,
    budget: &'a mut NodeBudget,
    out_of_budget: bool,
}

impl Enumerator<'_> {
    fn count(&self) -> usize {
        let mut seen = BTreeSet::new();
        let xs = self.x_used.iter();
        let ys = self.y_used.iter().filter(|_| self.scope == Scope::All);
        for &m in xs.chain(ys) {
            if m != 0 {
                seen.insert(m);
            }
        }
        seen.len()
    }

    fn descend(&mut self, e: usize, highest: u32) {
        if self.out_of_budget || self.best == 1 {
            return;
        }
        let edges = self.g.edges();
        if e == edges.len() {
            self.best = self.best.min(self.count());
            return;
        }
        let (x, y) = edges[e];
        let top = (highest + 1).min(edges.len() as u32);
        for c in 1..=top {
            let bit = 1u64 << (c - 1);
            if (self.x_used[x] | self.y_used[y]) & bit != 0 {
                continue;
            }
            if !self.budget.tick() {
                self.out_of_budget = true;
                return;
            }
            self.x_used[x] |= bit;
            self.y_used[y] |= bit;
            self.descend(e + 1, highest.max(c));
            self.x_used[x] &= !bit;
            self.y_used[y] &= !bit;
            if self.out_of_budget {
                return;
            }
        }
    }
}

fn min_palettes(g: &BipartiteGraph, scope: Scope, budget: &mut NodeBudget) -> Option<usize> {
    assert!(
        g.edge_count() <= 64,
        "exhaustive palette search is limited to 64 edges"
    );
    if g.edge_count() == 0 {
        return Some(0);
    }
    let mut run = Enumerator {
        g,
        scope,
        x_used: vec![0; g.x_count()],
        y_used: vec![0; g.y_count()],
        best: usize::MAX,
        budget,
        out_of_budget: false,
    };
    run.descend(0, 0);
    (!run.out_of_budget || run.best == 1).then_some(run.best)
}
