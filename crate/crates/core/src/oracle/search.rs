//! Backtracking search for an X-interval coloring with a fixed number of
//! colors.
//!
//! X-vertices are placed in decreasing degree order. Each vertex picks a
//! start `s`, which pins its palette to `s..s+d`; its edges then take
//! distinct colors from that window, most constrained Y-endpoint first, with
//! properness at Y as the only coupling between vertices.

use crate::graph::{BipartiteGraph, EdgeColoring};

/// Largest color count the search handles (one bit per color).
pub const MAX_COLORS: u32 = 128;

/// A cap on the number of search nodes, shared across calls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeBudget {
    limit: u64,
    spent: u64,
}

impl NodeBudget {
    pub fn new(limit: u64) -> Self {
        Self { limit, spent: 0 }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }

    pub fn remaining(&self) -> u64 {
        self.limit - self.spent
    }

    pub fn is_exhausted(&self) -> bool {
        self.spent >= self.limit
    }

    /// Charges one node; false once the limit is reached.
    pub(crate) fn tick(&mut self) -> bool {
        if self.spent >= self.limit {
            return false;
        }
        self.spent += 1;
        true
    }
}

/// Outcome of a fixed-`t` search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(EdgeColoring),
    Infeasible,
    Exhausted,
}

type Mask = u128;

fn window(start: u32, len: u32) -> Mask {
    if len == 0 {
        return 0;
    }
    let ones = if len as usize >= Mask::BITS as usize {
        Mask::MAX
    } else {
        (1 << len) - 1
    };
    ones << (start - 1)
}

struct Solver<'a> {
    t: u32,
    edges: &'a [(usize, usize)],
    order: Vec<usize>,
    x_edges: Vec<Vec<usize>>,
    y_used: Vec<Mask>,
    y_left: Vec<u32>,
    colors: Vec<u32>,
    budget: &'a mut NodeBudget,
    out_of_budget: bool,
}

impl Solver<'_> {
    fn place(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        let x = self.order[k];
        let d = self.x_edges[x].len() as u32;
        let mut last = self.t + 1 - d;
        if k == 0 {
            // c -> t+1-c maps solutions to solutions and start s to t+2-d-s.
            last = (self.t + 2 - d) / 2;
        }
        for s in 1..=last {
            let mut pending = self.x_edges[x].clone();
            if self.assign(k, &mut pending, window(s, d)) {
                return true;
            }
            if self.out_of_budget {
                return false;
            }
        }
        false
    }

    fn assign(&mut self, k: usize, pending: &mut Vec<usize>, free: Mask) -> bool {
        if pending.is_empty() {
            return self.lookahead(k) && self.place(k + 1);
        }
        // Most constrained edge next.
        let (pos, choices) = pending
            .iter()
            .enumerate()
            .map(|(i, &e)| (i, free & !self.y_used[self.edges[e].1]))
            .min_by_key(|&(_, m)| m.count_ones())
            .unwrap();
        if choices == 0 {
            return false;
        }
        let e = pending.swap_remove(pos);
        let y = self.edges[e].1;
        let mut rest = choices;
        while rest != 0 {
            if !self.budget.tick() {
                self.out_of_budget = true;
                break;
            }
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            self.y_used[y] |= bit;
            self.y_left[y] -= 1;
            self.colors[e] = bit.trailing_zeros() + 1;
            let ok = self.assign(k, pending, free & !bit);
            self.y_used[y] &= !bit;
            self.y_left[y] += 1;
            if ok {
                pending.push(e);
                return true;
            }
            if self.out_of_budget {
                break;
            }
        }
        // Restore the order the caller expects.
        pending.push(e);
        let last = pending.len() - 1;
        pending.swap(pos, last);
        false
    }

    /// Cheap necessary conditions for the vertices not yet placed.
    fn lookahead(&self, k: usize) -> bool {
        let t = self.t;
        for (y, &left) in self.y_left.iter().enumerate() {
            if left > t - self.y_used[y].count_ones() {
                return false;
            }
        }
        'next: for &x in &self.order[k + 1..] {
            let d = self.x_edges[x].len() as u32;
            for s in 1..=t + 1 - d {
                let w = window(s, d);
                if self.x_edges[x]
                    .iter()
                    .all(|&e| w & !self.y_used[self.edges[e].1] != 0)
                {
                    continue 'next;
                }
            }
            return false;
        }
        true
    }
}

/// Looks for an X-interval coloring of `g` using colors `1..=t`.
pub fn find_x_interval_coloring(g: &BipartiteGraph, t: u32, budget: &mut NodeBudget) -> Search {
    assert!(t <= MAX_COLORS, "at most {MAX_COLORS} colors supported");
    if g.edge_count() == 0 {
        return Search::Found(EdgeColoring::from_positive(Vec::new()));
    }
    let x_edges = g.x_incidence();
    let y_left: Vec<u32> = g.y_degrees().into_iter().map(|d| d as u32).collect();
    if x_edges.iter().map(Vec::len).max().unwrap_or(0) as u32 > t || y_left.iter().any(|&d| d > t) {
        return Search::Infeasible;
    }
    let mut order: Vec<usize> = (0..g.x_count())
        .filter(|&x| !x_edges[x].is_empty())
        .collect();
    order.sort_by_key(|&x| std::cmp::Reverse(x_edges[x].len()));
    let mut solver = Solver {
        t,
        edges: g.edges(),
        order,
        x_edges,
        y_used: vec![0; g.y_count()],
        y_left,
        colors: vec![0; g.edge_count()],
        budget,
        out_of_budget: false,
    };
    if solver.place(0) {
        Search::Found(EdgeColoring::from_positive(solver.colors))
    } else if solver.out_of_budget {
        Search::Exhausted
    } else {
        Search::Infeasible
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_coloring;

    fn complete(m: usize, n: usize) -> BipartiteGraph {
        let edges = (0..m).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
        BipartiteGraph::new(m, n, edges, false).unwrap()
    }

    #[test]
    fn windows() {
        assert_eq!(window(1, 3), 0b111);
        assert_eq!(window(3, 2), 0b1100);
        assert_eq!(window(1, 128), u128::MAX);
    }

    #[test]
    fn finds_and_refutes() {
        let g = complete(3, 3);
        let mut b = NodeBudget::unlimited();
        match find_x_interval_coloring(&g, 3, &mut b) {
            Search::Found(c) => assert!(verify_coloring(&g, &c).unwrap().is_x_interval()),
            other => panic!("{other:?}"),
        }
        assert_eq!(find_x_interval_coloring(&g, 2, &mut b), Search::Infeasible);
    }

    #[test]
    fn budget_runs_out() {
        let g = complete(4, 4);
        let mut b = NodeBudget::new(3);
        assert_eq!(find_x_interval_coloring(&g, 4, &mut b), Search::Exhausted);
        assert!(b.is_exhausted());
    }

    #[test]
    fn parallel_edges_get_distinct_colors() {
        let g = BipartiteGraph::new(1, 1, vec![(0, 0), (0, 0), (0, 0)], true).unwrap();
        let mut b = NodeBudget::unlimited();
        let Search::Found(c) = find_x_interval_coloring(&g, 3, &mut b) else {
            panic!()
        };
        assert!(verify_coloring(&g, &c).unwrap().is_x_interval());
    }
}
