//! Instance factories: complete and random bipartite graphs, random
//! biregular graphs, random trees, and exhaustive enumeration up to
//! part-preserving isomorphism.

mod canon;

pub use canon::{canonical_form, CanonicalForm};

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// Retry cap for [`random_biregular`].
pub const BIREGULAR_RETRIES: usize = 1000;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `K_{m,n}` with edges in row-major order.
pub fn complete_bipartite(m: usize, n: usize) -> BipartiteGraph {
    let edges = (0..m).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
    BipartiteGraph::new(m, n, edges, false).expect("complete graph is valid")
}

/// A random simple `(a, b)`-biregular graph with `n_x` X-vertices and
/// `a·n_x/b` Y-vertices.
///
/// Stubs are paired one X-stub at a time with a uniformly chosen remaining
/// Y-stub that does not repeat an edge; a dead end restarts the pairing.
/// Returns `Ok(None)` after [`BIREGULAR_RETRIES`] failed attempts.
pub fn random_biregular(
    a: usize,
    b: usize,
    n_x: usize,
    seed: u64,
) -> Result<Option<BipartiteGraph>> {
    if b == 0 {
        if a == 0 {
            return Ok(Some(BipartiteGraph::empty(n_x, 0)));
        }
        return Err(Error::InfeasibleDegrees(
            "Y-degree 0 with X-degree > 0".into(),
        ));
    }
    if !(a * n_x).is_multiple_of(b) {
        return Err(Error::InfeasibleDegrees(format!(
            "{a}·{n_x} is not divisible by {b}"
        )));
    }
    let n_y = a * n_x / b;
    if a > n_y || b > n_x {
        return Ok(None);
    }
    let mut rng = rng(seed);
    'attempt: for _ in 0..BIREGULAR_RETRIES {
        let mut pool: Vec<usize> = (0..n_y).flat_map(|y| std::iter::repeat_n(y, b)).collect();
        let mut edges = Vec::with_capacity(a * n_x);
        for x in 0..n_x {
            let mut taken = HashSet::with_capacity(a);
            for _ in 0..a {
                let open: Vec<usize> = (0..pool.len())
                    .filter(|&i| !taken.contains(&pool[i]))
                    .collect();
                let Some(&i) = open.choose(&mut rng) else {
                    continue 'attempt;
                };
                let y = pool.swap_remove(i);
                taken.insert(y);
                edges.push((x, y));
            }
        }
        return BipartiteGraph::new(n_x, n_y, edges, false).map(Some);
    }
    Ok(None)
}

/// Random simple bipartite graph: every pair `(x, y)`, in shuffled order, is
/// kept with probability `density` while both endpoints stay within
/// `max_degree`.
pub fn random_bipartite(
    n_x: usize,
    n_y: usize,
    max_degree: usize,
    density: f64,
    seed: u64,
) -> BipartiteGraph {
    let mut rng = rng(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n_x)
        .flat_map(|x| (0..n_y).map(move |y| (x, y)))
        .collect();
    pairs.shuffle(&mut rng);
    let mut dx = vec![0; n_x];
    let mut dy = vec![0; n_y];
    let mut edges = Vec::new();
    for (x, y) in pairs {
        if rng.gen_bool(density.clamp(0.0, 1.0)) && dx[x] < max_degree && dy[y] < max_degree {
            dx[x] += 1;
            dy[y] += 1;
            edges.push((x, y));
        }
    }
    BipartiteGraph::new(n_x, n_y, edges, false).expect("sampled edges are distinct")
}

/// Random bipartite multigraph with up to `edge_attempts` edges drawn
/// uniformly with repetition, respecting `max_degree`.
pub fn random_multigraph(
    n_x: usize,
    n_y: usize,
    max_degree: usize,
    edge_attempts: usize,
    seed: u64,
) -> BipartiteGraph {
    let mut rng = rng(seed);
    let mut dx = vec![0; n_x];
    let mut dy = vec![0; n_y];
    let mut edges = Vec::new();
    if n_x > 0 && n_y > 0 {
        for _ in 0..edge_attempts {
            let (x, y) = (rng.gen_range(0..n_x), rng.gen_range(0..n_y));
            if dx[x] < max_degree && dy[y] < max_degree {
                dx[x] += 1;
                dy[y] += 1;
                edges.push((x, y));
            }
        }
    }
    BipartiteGraph::new(n_x, n_y, edges, true).expect("indices in range")
}

/// Random recursive tree on `n` vertices, split into X (even depth) and Y
/// (odd depth).
pub fn random_tree(n: usize, seed: u64) -> BipartiteGraph {
    let mut rng = rng(seed);
    let mut depth = vec![0usize; n];
    let mut parent = vec![0usize; n];
    for v in 1..n {
        parent[v] = rng.gen_range(0..v);
        depth[v] = depth[parent[v]] + 1;
    }
    let mut index = vec![0; n];
    let (mut nx, mut ny) = (0, 0);
    for v in 0..n {
        if depth[v].is_multiple_of(2) {
            index[v] = nx;
            nx += 1;
        } else {
            index[v] = ny;
            ny += 1;
        }
    }
    let edges = (1..n)
        .map(|v| {
            let (p, c) = (parent[v], v);
            if depth[p].is_multiple_of(2) {
                (index[p], index[c])
            } else {
                (index[c], index[p])
            }
        })
        .collect();
    BipartiteGraph::new(nx, ny, edges, false).expect("tree is simple")
}

/// Every simple bipartite graph with `n_x + n_y` vertices and at most
/// `max_edges` edges, one per part-preserving isomorphism class.
///
/// Classes are grown level by level: each representative with `k` edges is
/// extended by every missing edge and the results are deduplicated by
/// [`canonical_form`]. Output is ordered by edge count, then canonical form.
pub fn enumerate_bipartite(
    n_x: usize,
    n_y: usize,
    max_edges: usize,
) -> impl Iterator<Item = BipartiteGraph> {
    let mut levels = vec![vec![BipartiteGraph::empty(n_x, n_y)]];
    for k in 0..max_edges.min(n_x * n_y) {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &levels[k] {
            let present: HashSet<(usize, usize)> = g.edges().iter().copied().collect();
            for x in 0..n_x {
                for y in 0..n_y {
                    if present.contains(&(x, y)) {
                        continue;
                    }
                    let mut edges = g.edges().to_vec();
                    edges.push((x, y));
                    let h = BipartiteGraph::new(n_x, n_y, edges, false).expect("new edge");
                    let form = canonical_form(&h);
                    if seen.insert(form.clone()) {
                        next.push((form, h));
                    }
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        levels.push(next.into_iter().map(|(form, _)| form.to_graph()).collect());
    }
    levels.into_iter().flatten()
}
