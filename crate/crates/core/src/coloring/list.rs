use serde::Serialize;

use super::ColoringError;
use crate::graph::Graph;

/// One list of admissible colors per graph edge, in [`Graph::edges`] order.
/// Lists are kept sorted and free of repeats.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorLists(Vec<Vec<usize>>);

impl ColorLists {
    pub fn new(lists: Vec<Vec<usize>>) -> Self {
        Self(
            lists
                .into_iter()
                .map(|mut l| {
                    l.sort_unstable();
                    l.dedup();
                    l
                })
                .collect(),
        )
    }

    /// Every edge gets `0..k`.
    pub fn uniform(edges: usize, k: usize) -> Self {
        Self(vec![(0..k).collect(); edges])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> &[usize] {
        &self.0[i]
    }

    pub fn min_len(&self) -> Option<usize> {
        self.0.iter().map(Vec::len).min()
    }
}

struct ListSearch<'a> {
    lists: &'a ColorLists,
    conflicts: Vec<Vec<usize>>,
    colors: Vec<Option<usize>>,
}

impl ListSearch<'_> {
    fn options(&self, e: usize) -> impl Iterator<Item = usize> + '_ {
        self.lists
            .get(e)
            .iter()
            .copied()
            .filter(move |&c| self.conflicts[e].iter().all(|&f| self.colors[f] != Some(c)))
    }

    fn solve(&mut self) -> bool {
        let next = (0..self.colors.len())
            .filter(|&e| self.colors[e].is_none())
            .min_by_key(|&e| (self.options(e).count(), e));
        let Some(e) = next else {
            return true;
        };
        let options: Vec<usize> = self.options(e).collect();
        for c in options {
            self.colors[e] = Some(c);
            if self.solve() {
                return true;
            }
        }
        self.colors[e] = None;
        false
    }
}

/// Proper edge coloring of `g` drawing each edge's color from its list, by
/// exhaustive backtracking. `Ok(None)` means no such coloring exists.
pub fn list_edge_color(g: &Graph, lists: &ColorLists) -> Result<Option<Vec<usize>>, ColoringError> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() != lists.len() {
        return Err(ColoringError::ListCountMismatch {
            edges: edges.len(),
            lists: lists.len(),
        });
    }
    let mut at_vertex = vec![Vec::new(); g.vertex_count()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        at_vertex[u].push(i);
        at_vertex[v].push(i);
    }
    let conflicts = edges
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| {
            let mut c: Vec<usize> = at_vertex[u]
                .iter()
                .chain(&at_vertex[v])
                .copied()
                .filter(|&j| j != i)
                .collect();
            c.sort_unstable();
            c.dedup();
            c
        })
        .collect();
    let mut search = ListSearch {
        lists,
        conflicts,
        colors: vec![None; edges.len()],
    };
    Ok(search
        .solve()
        .then(|| search.colors.into_iter().map(Option::unwrap).collect()))
}
