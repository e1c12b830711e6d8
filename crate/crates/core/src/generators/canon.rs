//! Canonical forms under permutations of X and of Y.
//!
//! A graph is cut into connected components. For one component, fixing the
//! row (X) order, the lexicographically least adjacency matrix over column
//! (Y) orders is obtained by sorting the columns, and the first `r` rows of
//! that matrix depend only on the first `r` rows chosen. Rows are therefore
//! chosen greedily, branching only on ties, with X-vertices that have equal
//! neighborhoods treated as one choice. The form of the whole graph is the
//! sorted list of component forms plus the part sizes.

use serde::{Deserialize, Serialize};

use crate::graph::BipartiteGraph;

/// Canonical form of one connected component: part sizes and rows as bit
/// strings, most significant bit = first column.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ComponentForm {
    x: usize,
    y: usize,
    rows: Vec<u64>,
}

/// Canonical form of a bipartite graph; equal iff the graphs are isomorphic
/// by a map sending X to X and Y to Y.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    x_count: usize,
    y_count: usize,
    components: Vec<ComponentForm>,
}

impl CanonicalForm {
    /// A representative graph: components laid out in order, isolated
    /// vertices last.
    pub fn to_graph(&self) -> BipartiteGraph {
        let mut edges = Vec::new();
        let (mut x0, mut y0) = (0, 0);
        for c in &self.components {
            for (r, &row) in c.rows.iter().enumerate() {
                for j in 0..c.y {
                    if row >> (63 - j) & 1 == 1 {
                        edges.push((x0 + r, y0 + j));
                    }
                }
            }
            x0 += c.x;
            y0 += c.y;
        }
        BipartiteGraph::new(self.x_count, self.y_count, edges, false)
            .expect("canonical edges valid")
    }
}

/// Computes the canonical form of a simple bipartite graph. Components are
/// limited to 64 Y-vertices.
pub fn canonical_form(g: &BipartiteGraph) -> CanonicalForm {
    let mut components: Vec<ComponentForm> = components(g)
        .into_iter()
        .map(|(xs, ys)| {
            let mut local = vec![usize::MAX; g.y_count()];
            for (j, &y) in ys.iter().enumerate() {
                local[y] = j;
            }
            let mut rows = vec![0u64; xs.len()];
            let mut xl = vec![usize::MAX; g.x_count()];
            for (i, &x) in xs.iter().enumerate() {
                xl[x] = i;
            }
            for &(x, y) in g.edges() {
                if xl[x] != usize::MAX {
                    rows[xl[x]] |= 1 << local[y];
                }
            }
            ComponentForm {
                x: xs.len(),
                y: ys.len(),
                rows: canonical_rows(&rows, ys.len()),
            }
        })
        .collect();
    components.sort();
    CanonicalForm {
        x_count: g.x_count(),
        y_count: g.y_count(),
        components,
    }
}

/// Connected components with at least one edge, as (X list, Y list).
fn components(g: &BipartiteGraph) -> Vec<(Vec<usize>, Vec<usize>)> {
    let nx = g.x_count();
    let n = nx + g.y_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for &(x, y) in g.edges() {
        let (a, b) = (find(&mut parent, x), find(&mut parent, nx + y));
        parent[a] = b;
    }
    let mut has_edge = vec![false; n];
    for &(x, y) in g.edges() {
        has_edge[x] = true;
        has_edge[nx + y] = true;
    }
    let mut slot = vec![usize::MAX; n];
    let mut out: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for v in (0..n).filter(|&v| has_edge[v]) {
        let r = find(&mut parent, v);
        if slot[r] == usize::MAX {
            slot[r] = out.len();
            out.push((Vec::new(), Vec::new()));
        }
        if v < nx {
            out[slot[r]].0.push(v);
        } else {
            out[slot[r]].1.push(v - nx);
        }
    }
    out
}

/// Adds `row` as row `depth` to the column keys (bit `63 - r` of key `j` is
/// entry `(r, j)`). Returns that row of the column-sorted matrix and the new
/// keys in original column order.
fn row_under(keys: &[u64], row: u64, depth: usize) -> (u64, Vec<u64>) {
    let next: Vec<u64> = keys
        .iter()
        .enumerate()
        .map(|(j, &k)| k | ((row >> j & 1) << (63 - depth)))
        .collect();
    let mut sorted = next.clone();
    sorted.sort_unstable();
    let value = sorted.iter().enumerate().fold(0u64, |acc, (pos, &k)| {
        acc | ((k >> (63 - depth) & 1) << (63 - pos))
    });
    (value, next)
}

fn canonical_rows(rows: &[u64], width: usize) -> Vec<u64> {
    assert!(
        width <= 64 && rows.len() <= 64,
        "component too large to canonicalize"
    );
    let mut best: Option<Vec<u64>> = None;
    let mut prefix = Vec::with_capacity(rows.len());
    let mut used = vec![false; rows.len()];
    search(rows, &vec![0; width], &mut used, &mut prefix, &mut best);
    best.unwrap_or_default()
}

fn search(
    rows: &[u64],
    keys: &[u64],
    used: &mut [bool],
    prefix: &mut Vec<u64>,
    best: &mut Option<Vec<u64>>,
) {
    let depth = prefix.len();
    if depth == rows.len() {
        if best.as_ref().is_none_or(|b| *prefix < *b) {
            *best = Some(prefix.clone());
        }
        return;
    }
    // Candidate rows, one per distinct neighborhood.
    let mut options: Vec<(u64, usize, Vec<u64>)> = Vec::new();
    let mut tried: Vec<u64> = Vec::new();
    for i in (0..rows.len()).filter(|&i| !used[i]) {
        if tried.contains(&rows[i]) {
            continue;
        }
        tried.push(rows[i]);
        let (value, next_keys) = row_under(keys, rows[i], depth);
        options.push((value, i, next_keys));
    }
    let min = options.iter().map(|o| o.0).min().expect("rows remain");
    if let Some(b) = best.as_ref() {
        match prefix[..].cmp(&b[..depth]) {
            std::cmp::Ordering::Greater => return,
            std::cmp::Ordering::Equal if min > b[depth] => return,
            _ => {}
        }
    }
    for (value, i, next_keys) in options.into_iter().filter(|o| o.0 == min) {
        used[i] = true;
        prefix.push(value);
        search(rows, &next_keys, used, prefix, best);
        prefix.pop();
        used[i] = false;
    }
}
