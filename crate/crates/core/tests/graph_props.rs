mod common;

use std::collections::HashSet;

use common::{arb_graph, has_long_induced_cycle, isomorphic};
use ekrcx::graphs::{all_labeled_graphs, complete, cycle, path, Graph};
use ekrcx::homology::{depth, is_sequentially_cm, DepthMethod};
use ekrcx::shifting::ShiftConfig;
use ekrcx::{Face, PrimeField, SimplicialComplex};
use proptest::prelude::*;

fn small_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| all_labeled_graphs(n).unwrap()).collect()
}

/// Relabels so that vertex degrees ascend, ties by original label.
fn by_ascending_degree(g: &Graph) -> Graph {
    let mut order: Vec<usize> = (1..=g.n()).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut perm = vec![0; g.n()];
    for (new, &old) in order.iter().enumerate() {
        perm[old - 1] = new + 1;
    }
    g.permute(&perm)
}

#[test]
fn chordality_matches_induced_cycle_search() {
    for g in small_graphs(5) {
        assert_eq!(g.is_chordal(), !has_long_induced_cycle(&g), "{g:?}");
    }
    assert!(!cycle(4).unwrap().is_chordal());
    assert!(cycle(4).unwrap().is_cochordal());
    let c6 = cycle(6).unwrap();
    assert!(!c6.is_chordal() && !c6.is_cochordal());
    assert!(path(6).is_chordal() && complete(5).is_chordal());
}

#[test]
fn link_of_vertex_is_independence_complex_of_remainder() {
    for g in small_graphs(5) {
        let ic = g.independence_complex();
        for v in 1..=g.n() {
            let (rest, old_of) = g.remove(g.closed_neighborhood(v).unwrap());
            let mut map = vec![None; rest.n() + 1];
            for (i, &old) in old_of.iter().enumerate() {
                map[i + 1] = Some(old);
            }
            let expected = rest.independence_complex().relabel(&map, g.n());
            assert_eq!(ic.link(Face::singleton(v)).unwrap(), expected, "{g:?} v={v}");
        }
    }
}

#[test]
fn d_and_s_on_independence_complexes() {
    for g in small_graphs(5) {
        let ic = g.independence_complex();
        assert_eq!(g.d_op().independence_complex(), ic.cone());
        let n = g.n() + 1;
        let with_point = SimplicialComplex::from_facets(
            ic.facets().iter().copied().chain([Face::singleton(n)]),
            Some(n),
        )
        .unwrap();
        assert_eq!(g.s_op().independence_complex(), with_point);
        assert!(g.d_op().independence_complex().near_cone_apexes().contains(&n));
    }
}

#[test]
fn threshold_iff_shifted_independence_complex() {
    for g in small_graphs(6) {
        let shifted = by_ascending_degree(&g).independence_complex().is_shifted();
        assert_eq!(g.is_threshold(), shifted, "{g:?}");
        if g.is_threshold() {
            assert!(g.is_chordal() && g.is_cochordal());
        }
    }
    assert!(!path(4).is_threshold());
    assert_eq!(Graph::new(1).threshold_word(), Some(vec![]));
}

#[test]
fn flag_apexes_are_near_cone_apexes() {
    for g in small_graphs(5) {
        assert_eq!(g.flag_apexes(), g.independence_complex().near_cone_apexes(), "{g:?}");
    }
}

#[test]
fn near_cone_decompositions_rebuild() {
    for g in small_graphs(5) {
        if let Some(dec) = g.flag_nearcone_decompose() {
            assert_eq!(dec.k, g.degree(dec.apex));
            assert!(isomorphic(&dec.rebuild(), &g), "{g:?}");
        }
    }
    for h in small_graphs(4) {
        let g = h.d_op().s_op();
        let dec = g.flag_nearcone_decompose().unwrap();
        assert!(isomorphic(&dec.rebuild(), &g));
        if !h.has_isolated_vertex() {
            assert_eq!(dec.k, 1);
            assert!(isomorphic(&dec.core, &h));
        }
    }
    assert!(cycle(5).unwrap().flag_nearcone_decompose().is_none());
    let k1 = Graph::new(1).flag_nearcone_decompose().unwrap();
    assert_eq!((k1.k, k1.core.n()), (0, 0));
}

#[test]
fn nontrivial_near_cones_have_isolated_vertices() {
    for g in small_graphs(5).into_iter().filter(|g| g.n() >= 2) {
        let ic = g.independence_complex();
        let nontrivial = !ic.near_cone_apexes().is_empty() && ic.min_facet_card().unwrap() >= 2;
        assert_eq!(nontrivial, g.has_isolated_vertex(), "{g:?}");
    }
}

#[test]
fn depth_one_criterion() {
    let cfg = ShiftConfig::default();
    for g in small_graphs(5) {
        let d = depth(&g.independence_complex(), DepthMethod::Links, &cfg).unwrap().depth;
        assert_eq!(d >= 1, g.n() > 1 && g.complement().is_connected(), "{g:?}");
    }
}

#[test]
fn chordal_graphs_are_sequentially_cm() {
    let field = PrimeField::default_field();
    let mut seen = HashSet::new();
    for g in small_graphs(6) {
        if !g.is_chordal() {
            continue;
        }
        if g.n() == 6 {
            let mut degrees: Vec<usize> = (1..=6).map(|v| g.degree(v)).collect();
            degrees.sort_unstable();
            if !seen.insert(degrees) {
                continue;
            }
        }
        assert!(is_sequentially_cm(&g.independence_complex(), field), "{g:?}");
    }
}

#[test]
fn duals_of_flag_complexes_are_pure() {
    for g in small_graphs(5).into_iter().filter(|g| g.edge_count() > 0) {
        let dual = g.independence_complex().alexander_dual();
        assert!(dual.is_pure().unwrap());
        assert_eq!(dual.max_facet_card().unwrap(), g.n() - 2, "{g:?}");
    }
}

proptest! {
    #[test]
    fn chordality_matches_oracle_up_to_seven(g in arb_graph(7)) {
        prop_assert_eq!(g.is_chordal(), !has_long_induced_cycle(&g));
    }

    #[test]
    fn disjoint_unions_join(a in arb_graph(4), b in arb_graph(4)) {
        let u = Graph::disjoint_union(&[a.clone(), b.clone()]);
        prop_assert_eq!(u.independence_complex(), a.independence_complex().join(&b.independence_complex()));
    }

    #[test]
    fn independence_facets_are_maximal(g in arb_graph(8)) {
        let ic = g.independence_complex();
        for &f in ic.facets() {
            prop_assert!(g.is_independent(f));
            for v in g.vertices().difference(f).vertices() {
                prop_assert!(!g.is_independent(f.with(v)));
            }
        }
    }
}
