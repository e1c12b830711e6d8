use std::collections::BTreeSet;

use xint_core::degree_six::{
    alternate_color_factors, build_doubled, interval_color_deg6_restricted,
    petersen_two_factorization, Provenance,
};
use xint_core::generators::{random_bipartite, random_multigraph};
use xint_core::BipartiteGraph;

/// Drops one edge at every degree-3 X-vertex.
fn without_degree_three(g: &BipartiteGraph) -> BipartiteGraph {
    let xdeg = g.x_degrees();
    let mut dropped = vec![false; g.x_count()];
    let edges = g
        .edges()
        .iter()
        .copied()
        .filter(|&(x, _)| {
            if xdeg[x] == 3 && !dropped[x] {
                dropped[x] = true;
                return false;
            }
            true
        })
        .collect();
    BipartiteGraph::new(g.x_count(), g.y_count(), edges, g.allow_multi()).unwrap()
}

fn restricted_graphs() -> Vec<BipartiteGraph> {
    let mut out = Vec::new();
    for seed in 0..25 {
        out.push(without_degree_three(&random_bipartite(9, 9, 6, 0.6, seed)));
        out.push(without_degree_three(&random_multigraph(6, 6, 6, 30, seed)));
    }
    out
}

#[test]
fn doubled_graph_factors_and_colors() {
    for g in restricted_graphs() {
        let d = build_doubled(&g).unwrap();
        assert!(d.graph.degrees().iter().all(|&k| k == 6));
        let f = petersen_two_factorization(&d.graph).unwrap();
        f.check(&d.graph).unwrap();
        let colors = alternate_color_factors(&d.graph, &f, &d.provenance).unwrap();

        // Without loops, no two edges at a vertex share a color.
        let mut seen = vec![BTreeSet::new(); d.graph.vertex_count()];
        for (e, &(u, v)) in d.graph.edges().iter().enumerate() {
            if u == v {
                assert!(matches!(d.provenance[e], Provenance::Loop(_)));
                continue;
            }
            assert!(seen[u].insert(colors[e]), "color clash at {u}");
            assert!(seen[v].insert(colors[e]), "color clash at {v}");
        }
    }
}

#[test]
fn padded_vertices_have_paired_palettes() {
    for g in restricted_graphs() {
        let d = build_doubled(&g).unwrap();
        let f = petersen_two_factorization(&d.graph).unwrap();
        let colors = alternate_color_factors(&d.graph, &f, &d.provenance).unwrap();
        let xdeg = g.x_degrees();
        let mut palettes = vec![BTreeSet::new(); g.x_count()];
        for (e, &(x, _)) in g.edges().iter().enumerate() {
            palettes[x].insert(colors[e]);
        }
        for x in 0..g.x_count() {
            match xdeg[x] {
                2 => {
                    let p: Vec<u32> = palettes[x].iter().copied().collect();
                    assert_eq!(p.len(), 2);
                    assert!(p[0] % 2 == 1 && p[1] == p[0] + 1, "x{x} has {p:?}");
                }
                6 => assert_eq!(palettes[x], (1..=6).collect()),
                _ => {}
            }
        }
    }
}

#[test]
fn restricted_pipeline_within_ten() {
    for g in restricted_graphs() {
        let (c, cert) = interval_color_deg6_restricted(&g).unwrap();
        assert!(cert.verified, "{cert}");
        assert!(c.max_color() <= 10);
    }
}
