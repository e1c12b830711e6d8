//! Neighborhood hypergraphs and greedy hyperedge coloring.
//!
//! Every hyperedge meets at most `k(Δ-1)` others when the rank is `k` and the
//! maximum degree is `Δ`, so first-fit never needs more than `k(Δ-1)+1` colors.

use crate::graph::BipartiteGraph;

/// A hypergraph whose hyperedges are multisets of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    hyperedges: Vec<Vec<usize>>,
    origin: Option<Vec<usize>>,
}

impl Hypergraph {
    /// Panics if a hyperedge names a vertex outside `0..vertex_count`.
    pub fn new(vertex_count: usize, hyperedges: Vec<Vec<usize>>) -> Self {
        assert!(
            hyperedges.iter().flatten().all(|&v| v < vertex_count),
            "hyperedge vertex out of range"
        );
        Self {
            vertex_count,
            hyperedges,
            origin: None,
        }
    }

    /// One hyperedge `N_G(x)` over the Y side for every X-vertex, in X order.
    /// Parallel edges repeat the Y-vertex inside the hyperedge.
    pub fn from_neighborhoods(g: &BipartiteGraph) -> Self {
        let mut hyperedges = vec![Vec::new(); g.x_count()];
        for &(x, y) in g.edges() {
            hyperedges[x].push(y);
        }
        for h in &mut hyperedges {
            h.sort_unstable();
        }
        Self {
            vertex_count: g.y_count(),
            hyperedges,
            origin: Some((0..g.x_count()).collect()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    /// Hyperedge position to source X-vertex, when built from a graph.
    pub fn origin(&self) -> Option<&[usize]> {
        self.origin.as_deref()
    }

    /// Largest hyperedge size, counting multiplicity.
    pub fn rank(&self) -> usize {
        self.hyperedges.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Vertex degrees; a hyperedge holding `v` twice adds 2.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &v in self.hyperedges.iter().flatten() {
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// `k(Δ-1)+1`; 1 when every hyperedge is empty, 0 with no hyperedges.
    pub fn greedy_bound(&self) -> usize {
        let delta = self.max_degree();
        if self.hyperedges.is_empty() {
            0
        } else if delta == 0 {
            1
        } else {
            self.rank() * (delta - 1) + 1
        }
    }

    /// First-fit coloring in hyperedge order. Two hyperedges conflict when
    /// their supports share a vertex. Empty hyperedges get color 1.
    pub fn greedy_edge_color(&self) -> Vec<usize> {
        // Hyperedges already colored, per vertex.
        let mut at_vertex: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        let mut colors = vec![0usize; self.hyperedges.len()];
        let mut used = Vec::new();
        for (i, h) in self.hyperedges.iter().enumerate() {
            used.clear();
            for &v in h {
                used.extend(at_vertex[v].iter().map(|&j| colors[j]));
            }
            used.sort_unstable();
            used.dedup();
            let mut c = 1;
            for &u in &used {
                if u == c {
                    c += 1;
                } else if u > c {
                    break;
                }
            }
            colors[i] = c;
            let mut support = h.clone();
            support.dedup();
            for v in support {
                at_vertex[v].push(i);
            }
        }
        colors
    }
}

/// Returns the first pair of intersecting hyperedges sharing a color.
pub fn find_conflict(h: &Hypergraph, colors: &[usize]) -> Option<(usize, usize)> {
    let edges = h.hyperedges();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if colors[i] == colors[j] && edges[i].iter().any(|v| edges[j].contains(v)) {
                return Some((i, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn neighborhoods_of_k22() {
        let g = BipartiteGraph::new(2, 2, vec![(0, 0), (0, 1), (1, 0), (1, 1)], false).unwrap();
        let h = Hypergraph::from_neighborhoods(&g);
        assert_eq!(h.hyperedges(), &[vec![0, 1], vec![0, 1]]);
        assert_eq!(h.origin(), Some(&[0, 1][..]));
    }

    #[test]
    fn neighborhoods_of_single_edge() {
        let g = BipartiteGraph::new(1, 1, vec![(0, 0)], false).unwrap();
        let h = Hypergraph::from_neighborhoods(&g);
        assert_eq!(h.hyperedges(), &[vec![0]]);
    }

    #[test]
    fn multigraph_neighborhood_counts_multiplicity() {
        let g = BipartiteGraph::new(1, 1, vec![(0, 0), (0, 0)], true).unwrap();
        let h = Hypergraph::from_neighborhoods(&g);
        assert_eq!(h.hyperedges(), &[vec![0, 0]]);
        // By hand: y0 appears twice in the only hyperedge.
        assert_eq!(h.degrees(), vec![2]);
        assert_eq!(h.rank(), 2);
    }

    #[test]
    fn disjoint_hyperedges_share_color_one() {
        let h = Hypergraph::new(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
        assert_eq!(h.greedy_edge_color(), vec![1, 1, 1]);
    }

    #[test]
    fn identical_copies_form_a_clique() {
        let (a, b) = (3, 4);
        let h = Hypergraph::new(a, vec![(0..a).collect(); b]);
        let colors = h.greedy_edge_color();
        assert_eq!(colors, (1..=b).collect::<Vec<_>>());
        assert!(b <= a * (b - 1) + 1);
        assert_eq!(h.greedy_bound(), a * (b - 1) + 1);
    }

    #[test]
    fn random_instance_within_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let n = 16;
        let mut edges: Vec<Vec<usize>> = Vec::new();
        let mut deg = vec![0; n];
        while edges.len() < 20 {
            let size = rng.gen_range(1..=4);
            let e: Vec<usize> = (0..size).map(|_| rng.gen_range(0..n)).collect();
            if e.iter()
                .all(|&v| deg[v] + e.iter().filter(|&&w| w == v).count() <= 5)
            {
                for &v in &e {
                    deg[v] += 1;
                }
                edges.push(e);
            }
        }
        let h = Hypergraph::new(n, edges);
        assert!(h.rank() <= 4 && h.max_degree() <= 5);
        let colors = h.greedy_edge_color();
        assert_eq!(find_conflict(&h, &colors), None);
        assert!(colors.iter().all(|&c| c <= 4 * 4 + 1));
    }

    #[test]
    fn deterministic() {
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]);
        assert_eq!(h.greedy_edge_color(), h.greedy_edge_color());
        assert_eq!(h.greedy_edge_color(), vec![1, 2, 1, 2]);
    }
}
