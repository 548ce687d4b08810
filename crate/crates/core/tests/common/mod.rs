//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the solvers or generators under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hypercolor::Hypergraph;

/// Fewest colors over every assignment of colors `0..m` to the `m` edges.
pub fn brute_chromatic_index(h: &Hypergraph) -> usize {
    let m = h.m();
    if m == 0 {
        return 0;
    }
    let clash: Vec<(usize, usize)> = (0..m)
        .flat_map(|e| (e + 1..m).map(move |f| (e, f)))
        .filter(|&(e, f)| h.edge(e).iter().any(|x| h.edge(f).contains(x)))
        .collect();
    let mut colors = vec![0usize; m];
    let mut best = m;
    loop {
        if clash.iter().all(|&(e, f)| colors[e] != colors[f]) {
            let used = colors.iter().collect::<BTreeSet<_>>().len();
            best = best.min(used);
        }
        let mut i = 0;
        while i < m {
            colors[i] += 1;
            if colors[i] < m {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
        if i == m {
            return best;
        }
    }
}

/// Unordered pairs of other edges forming a triangle with `e`, split into
/// (common point, no common point).
pub fn brute_triangles(h: &Hypergraph, e: usize) -> (usize, usize) {
    let set = |i: usize| h.edge(i).iter().copied().collect::<BTreeSet<_>>();
    let se = set(e);
    let (mut t1, mut t2) = (0, 0);
    for f in 0..h.m() {
        for g in f + 1..h.m() {
            if f == e || g == e {
                continue;
            }
            let (sf, sg) = (set(f), set(g));
            let meet = |a: &BTreeSet<usize>, b: &BTreeSet<usize>| !a.is_disjoint(b);
            if !(meet(&se, &sf) && meet(&se, &sg) && meet(&sf, &sg)) {
                continue;
            }
            if se.iter().any(|x| sf.contains(x) && sg.contains(x)) {
                t1 += 1;
            } else {
                t2 += 1;
            }
        }
    }
    (t1, t2)
}

pub fn brute_clique_degree(h: &Hypergraph, x: usize) -> usize {
    h.edges()
        .iter()
        .filter(|e| e.contains(&x))
        .map(|e| e.len() - 1)
        .sum()
}

pub fn brute_clique_rank(h: &Hypergraph, e: usize) -> usize {
    (0..h.m())
        .filter(|&f| f != e)
        .map(|f| h.edge(e).iter().filter(|x| h.edge(f).contains(x)).count())
        .sum()
}

pub fn brute_is_linear(h: &Hypergraph) -> bool {
    (0..h.m()).all(|e| {
        (e + 1..h.m()).all(|f| h.edge(e).iter().filter(|x| h.edge(f).contains(x)).count() <= 1)
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest relabeled sorted edge list over all `n!` permutations.
fn min_image(edges: &[Vec<usize>], perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    perms
        .iter()
        .map(|p| {
            let mut img: Vec<Vec<usize>> = edges
                .iter()
                .map(|e| {
                    let mut f: Vec<usize> = e.iter().map(|&x| p[x]).collect();
                    f.sort_unstable();
                    f
                })
                .collect();
            img.sort();
            img
        })
        .min()
        .unwrap_or_default()
}

/// Isomorphism classes of non-empty simple hypergraphs on exactly `n`
/// vertices (isolated vertices allowed) with ranks in `2..=max_rank`. Every
/// admissible edge set is listed, then reduced under all `n!` relabelings.
pub fn brute_class_count(n: usize, max_rank: usize, linear: bool) -> usize {
    let candidates: Vec<Vec<usize>> = (1u32..1 << n)
        .filter(|m| (2..=max_rank as u32).contains(&m.count_ones()))
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    let mut chosen = Vec::new();
    fn walk(
        i: usize,
        candidates: &[Vec<usize>],
        linear: bool,
        chosen: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if i == candidates.len() {
            if !chosen.is_empty() {
                visit(chosen);
            }
            return;
        }
        walk(i + 1, candidates, linear, chosen, visit);
        let c = &candidates[i];
        let ok = !linear
            || chosen
                .iter()
                .all(|e| e.iter().filter(|x| c.contains(x)).count() <= 1);
        if ok {
            chosen.push(c.clone());
            walk(i + 1, candidates, linear, chosen, visit);
            chosen.pop();
        }
    }
    walk(0, &candidates, linear, &mut chosen, &mut |edges| {
        classes.insert(min_image(edges, &perms));
    });
    classes.len()
}

/// Brute-force isomorphism test over all `n!` relabelings.
pub fn brute_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let perms = permutations(a.n());
    min_image(a.edges(), &perms) == min_image(b.edges(), &perms)
}

/// Smallest `k` for which the exhaustive list search succeeds with every
/// list equal to `0..k`.
pub fn brute_graph_edge_chromatic(edges: &[(usize, usize)]) -> usize {
    (0..)
        .find(|&k| brute_list_colorable(edges, &vec![(0..k).collect(); edges.len()]))
        .unwrap()
}

/// Whether some choice from the lists is a proper edge coloring.
pub fn brute_list_colorable(edges: &[(usize, usize)], lists: &[Vec<usize>]) -> bool {
    fn go(i: usize, edges: &[(usize, usize)], lists: &[Vec<usize>], pick: &mut Vec<usize>) -> bool {
        if i == edges.len() {
            return true;
        }
        for &c in &lists[i] {
            let (u, v) = edges[i];
            let clash = (0..i).any(|j| {
                pick[j] == c && {
                    let (a, b) = edges[j];
                    a == u || a == v || b == u || b == v
                }
            });
            if !clash {
                pick.push(c);
                if go(i + 1, edges, lists, pick) {
                    return true;
                }
                pick.pop();
            }
        }
        false
    }
    go(0, edges, lists, &mut Vec::new())
}
