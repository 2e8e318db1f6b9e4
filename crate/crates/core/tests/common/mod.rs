#![allow(dead_code)]

use ekrcx::graphs::Graph;
use ekrcx::{Face, SimplicialComplex};
use proptest::prelude::*;

/// Complexes on `1..=n` for `1 <= n <= max_n`, given by a few random
/// generating sets. Some vertices may be left uncovered.
pub fn arb_complex(max_n: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(1u64..(1u64 << n), 1..=max_facets).prop_map(move |masks| {
            SimplicialComplex::from_facets(masks.into_iter().map(Face::from_bits), Some(n)).unwrap()
        })
    })
}

/// As [`arb_complex`] but with every vertex covered.
pub fn arb_covered_complex(max_n: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    arb_complex(max_n, max_facets).prop_map(|c| c.normalize().0)
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// All permutations of `1..=n`, as `perm[old - 1] = new`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let v = left.remove(i);
            prefix.push(v);
            go(prefix, left, out);
            prefix.pop();
            left.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (1..=n).collect(), &mut out);
    out
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && permutations(a.n()).iter().any(|p| &a.permute(p) == b)
}

/// Chordality by looking for an induced cycle of length at least 4.
pub fn has_long_induced_cycle(g: &Graph) -> bool {
    let n = g.n();
    (0u64..1 << n).any(|mask| {
        let s = Face::from_bits(mask);
        if s.len() < 4 {
            return false;
        }
        let (h, _) = g.induced(s);
        (1..=h.n()).all(|v| h.degree(v) == 2) && h.is_connected()
    })
}
