use xint_core::generators::{enumerate_bipartite, random_multigraph};
use xint_core::oracle::{exact_chi_int, Exact, NodeBudget};
use xint_core::{color_with, guarantee, verify_coloring, BipartiteGraph, Method};

fn check(g: &BipartiteGraph) {
    let Exact::Optimal { t, coloring } = exact_chi_int(g, None, &mut NodeBudget::unlimited())
    else {
        panic!("no optimum for {g:?}");
    };
    assert!(verify_coloring(g, &coloring).unwrap().is_x_interval());
    assert!(t as usize >= g.max_degree());
    for m in Method::ALL {
        if guarantee(m, g).is_none() {
            continue;
        }
        let out = color_with(m, g, None, &mut NodeBudget::unlimited()).unwrap();
        assert!(out.certificate.verified);
        assert!(
            u64::from(t) <= out.certificate.colors_used,
            "{m} beat the optimum"
        );
    }
}

#[test]
fn exact_is_below_every_method_on_small_graphs() {
    for g in enumerate_bipartite(4, 5, 9) {
        check(&g);
    }
}

#[test]
fn exact_is_below_every_method_on_multigraphs() {
    for seed in 0..40 {
        check(&random_multigraph(4, 4, 4, 9, seed));
    }
}
