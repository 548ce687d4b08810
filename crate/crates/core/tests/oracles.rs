mod common;

use common::*;
use hypercolor::coloring::{clique_lower_bound, list_edge_color, ColorLists};
use hypercolor::enumeration::{are_isomorphic, canonical_form, enumerate, EnumSpec};
use hypercolor::io::{parse_hyp, to_hyp};
use hypercolor::random::random_hypergraph;
use hypercolor::stats::{clique_rank, max_clique_rank};
use hypercolor::{
    count_triangles, exact_chromatic_index, greedy_color, stats, validate_coloring, Graph,
    Hypergraph, DEFAULT_BUDGET,
};
use proptest::prelude::*;

/// Up to `max_m` non-empty edges on `n` vertices, drawn as bitmasks.
fn hypergraph(max_n: usize, max_m: usize, min_rank: u32) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(1u32..(1 << n), 0..=max_m).prop_map(move |masks| {
            let edges = masks
                .into_iter()
                .filter(|m| m.count_ones() >= min_rank)
                .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
                .collect();
            Hypergraph::new(n, edges).unwrap()
        })
    })
}

/// A simple graph with at most `max_e` edges on up to 6 vertices.
fn simple_graph(max_e: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::btree_set((0usize..6, 0usize..6), 0..=max_e * 2).prop_map(move |pairs| {
        let mut seen = std::collections::BTreeSet::new();
        pairs
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .filter(|p| seen.insert(*p))
            .take(max_e)
            .collect()
    })
}

fn shuffle(n: usize, seed: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut s = seed | 1;
    for i in (1..n).rev() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        p.swap(i, (s % (i as u64 + 1)) as usize);
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn exact_matches_brute_force(h in hypergraph(7, 5, 1)) {
        let r = exact_chromatic_index(&h, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(r.q, brute_chromatic_index(&h));
        prop_assert!(validate_coloring(&h, &r.coloring).unwrap());
        prop_assert_eq!(r.coloring.colors_used(), r.q);
    }

    #[test]
    fn bounds_sandwich_q(h in hypergraph(7, 8, 1)) {
        let q = exact_chromatic_index(&h, DEFAULT_BUDGET).unwrap().q;
        let g = greedy_color(&h);
        prop_assert!(validate_coloring(&h, &g).unwrap());
        prop_assert!(clique_lower_bound(&h) <= q);
        prop_assert!(q <= g.colors_used());
        prop_assert!(g.colors_used() <= max_clique_rank(&h) + 1);
    }

    #[test]
    fn degree_sums_agree(h in hypergraph(8, 10, 1)) {
        let s = stats(&h);
        prop_assert_eq!(s.degrees.iter().sum::<usize>(), s.ranks.iter().sum::<usize>());
    }

    #[test]
    fn clique_degree_and_rank_are_derived_graph_degrees(h in hypergraph(8, 10, 1)) {
        let s = stats(&h);
        let clique = h.clique_graph();
        let line = h.line_graph();
        for x in 0..h.n() {
            prop_assert_eq!(s.clique_degrees[x], brute_clique_degree(&h, x));
            if h.is_linear() {
                prop_assert_eq!(s.clique_degrees[x], clique.degree_with_multiplicity(x));
            }
        }
        for e in 0..h.m() {
            prop_assert_eq!(s.clique_ranks[e], brute_clique_rank(&h, e));
            prop_assert_eq!(clique_rank(&h, e), line.degree_with_multiplicity(e));
        }
    }

    #[test]
    fn dual_is_an_involution(h in hypergraph(8, 10, 1)) {
        prop_assert_eq!(h.dual().dual(), h);
    }

    #[test]
    fn linearity_is_self_dual(h in hypergraph(8, 10, 1)) {
        prop_assert_eq!(h.is_linear(), brute_is_linear(&h));
        prop_assert_eq!(h.is_linear(), h.dual().is_linear());
    }

    #[test]
    fn triangles_match_triple_enumeration(h in hypergraph(8, 10, 1)) {
        for e in 0..h.m() {
            let t = count_triangles(&h, e).unwrap();
            prop_assert_eq!((t.t1, t.t2), brute_triangles(&h, e));
            prop_assert_eq!(t.total, t.t1 + t.t2);
        }
    }

    #[test]
    fn linear_uniform_t2_is_bounded(seed in any::<u64>(), n in 5usize..10, m in 1usize..8, r in 2usize..4) {
        let Ok(h) = random_hypergraph(seed, n, m, r..=r, true) else { return Ok(()) };
        for e in 0..h.m() {
            let t2 = count_triangles(&h, e).unwrap().t2;
            prop_assert!(2 * t2 <= clique_rank(&h, e) * (r - 1) * (r - 1));
        }
    }

    #[test]
    fn hyp_round_trip(h in hypergraph(9, 10, 1)) {
        prop_assert_eq!(parse_hyp(&to_hyp(&h)).unwrap(), h);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(h in hypergraph(7, 6, 2), seed in any::<u64>()) {
        let g = h.relabel(&shuffle(h.n(), seed)).unwrap();
        prop_assert_eq!(canonical_form(&h).unwrap(), canonical_form(&g).unwrap());
        prop_assert!(brute_isomorphic(&canonical_form(&h).unwrap().to_hypergraph(), &h));
    }

    #[test]
    fn isomorphism_matches_brute_force(a in hypergraph(5, 5, 2), b in hypergraph(5, 5, 2)) {
        prop_assert_eq!(are_isomorphic(&a, &b).unwrap(), brute_isomorphic(&a, &b));
    }

    #[test]
    fn list_coloring_matches_brute_force(
        edges in simple_graph(8),
        raw in prop::collection::vec(prop::collection::vec(0usize..4, 0..4), 8),
    ) {
        let g = Graph::from_edges(6, edges.iter().copied());
        let ordered: Vec<(usize, usize)> = g.edges().collect();
        let lists: Vec<Vec<usize>> = raw.into_iter().take(ordered.len()).collect();
        let lists = ColorLists::new(lists);
        let plain: Vec<Vec<usize>> = (0..lists.len()).map(|i| lists.get(i).to_vec()).collect();
        let got = list_edge_color(&g, &lists).unwrap();
        prop_assert_eq!(got.is_some(), brute_list_colorable(&ordered, &plain));
        if let Some(colors) = got {
            for (i, &(u, v)) in ordered.iter().enumerate() {
                prop_assert!(plain[i].contains(&colors[i]));
                for (j, &(a, b)) in ordered.iter().enumerate().skip(i + 1) {
                    if a == u || a == v || b == u || b == v {
                        prop_assert_ne!(colors[i], colors[j]);
                    }
                }
            }
        }
    }

    #[test]
    fn uniform_lists_decide_edge_chromatic_number(edges in simple_graph(8), k in 0usize..5) {
        let g = Graph::from_edges(6, edges.iter().copied());
        let ordered: Vec<(usize, usize)> = g.edges().collect();
        let ok = list_edge_color(&g, &ColorLists::uniform(ordered.len(), k)).unwrap().is_some();
        prop_assert_eq!(ok, brute_graph_edge_chromatic(&ordered) <= k);
    }
}

#[test]
fn linear_class_counts_match_brute_force() {
    for n in 2..=5 {
        let got = enumerate(&EnumSpec::new(n)).unwrap().count();
        assert_eq!(got, brute_class_count(n, n, true), "n = {n}");
    }
}

#[test]
fn general_class_counts_match_brute_force() {
    for n in 2..=4 {
        let got = enumerate(&EnumSpec::new(n).linear(false)).unwrap().count();
        assert_eq!(got, brute_class_count(n, n, false), "n = {n}");
    }
}

#[test]
fn rank_capped_counts_match_brute_force() {
    for n in 3..=5 {
        let got = enumerate(&EnumSpec::new(n).max_rank(2)).unwrap().count();
        assert_eq!(got, brute_class_count(n, 2, true), "n = {n}");
    }
}

#[test]
fn enumerated_classes_are_pairwise_non_isomorphic() {
    let all: Vec<Hypergraph> = enumerate(&EnumSpec::new(4).linear(false))
        .unwrap()
        .collect();
    for (i, a) in all.iter().enumerate() {
        for b in &all[i + 1..] {
            assert!(!brute_isomorphic(a, b));
        }
    }
}
