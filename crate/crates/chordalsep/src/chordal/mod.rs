//! Chordality recognition, maximal cliques, clique trees and minimal vertex
//! separators, each paired with an independent brute-force oracle.

mod clique_tree;
mod separators;

pub use clique_tree::{
    build_clique_forest, build_clique_tree, separator_family, separator_multiset, CliqueTree,
    CliqueTreeEdge, SeparatorFamily,
};
pub use separators::{minimal_separators_direct, minimal_separators_exhaustive};

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChordalError {
    #[error("operation requires a chordal graph")]
    NotChordal,
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("ordering is not a permutation of the graph's vertices")]
    NotPermutation,
}

/// A visit order over all vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrdering {
    order: Vec<usize>,
}

impl EliminationOrdering {
    pub fn new(order: Vec<usize>) -> EliminationOrdering {
        EliminationOrdering { order }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn reversed(&self) -> EliminationOrdering {
        EliminationOrdering {
            order: self.order.iter().rev().copied().collect(),
        }
    }

    fn is_permutation(&self, n: usize) -> bool {
        if self.order.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &v in &self.order {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }
}

/// Maximum cardinality search: repeatedly visits an unvisited vertex with the
/// most visited neighbors, breaking ties by smallest vertex id. The reverse of
/// the returned visit order is a perfect elimination ordering exactly when the
/// graph is chordal.
pub fn maximum_cardinality_search(g: &Graph) -> EliminationOrdering {
    let n = g.n();
    let mut visited = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("an unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    EliminationOrdering { order }
}

/// Whether `o` is a perfect elimination ordering: for every vertex, its
/// neighbors occurring later in the order form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, o: &EliminationOrdering) -> Result<bool, ChordalError> {
    if !o.is_permutation(g.n()) {
        return Err(ChordalError::NotPermutation);
    }
    let mut position = vec![0usize; g.n()];
    for (i, &v) in o.order.iter().enumerate() {
        position[v] = i;
    }
    for (i, &v) in o.order.iter().enumerate() {
        let later: Vec<usize> = g.neighbors(v).filter(|&u| position[u] > i).collect();
        for (a, &x) in later.iter().enumerate() {
            for &y in &later[a + 1..] {
                if !g.adjacent(x, y) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Chordality via maximum cardinality search.
pub fn is_chordal(g: &Graph) -> bool {
    let order = maximum_cardinality_search(g).reversed();
    is_perfect_elimination_ordering(g, &order).expect("MCS output is a permutation")
}

/// Chordality by exhaustively looking for an induced cycle of length >= 4.
/// Independent oracle for [`is_chordal`]; intended for graphs with up to
/// about 12 vertices.
pub fn is_chordal_bruteforce(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 16, "brute-force chordality oracle is limited to small graphs");
    let masks = g.neighbor_masks();
    for subset in 1u64..1 << n {
        if subset.count_ones() < 4 {
            continue;
        }
        // An induced chordless cycle is exactly a connected 2-regular
        // induced subgraph.
        if (0..n)
            .filter(|&v| subset >> v & 1 == 1)
            .all(|v| (masks[v] & subset).count_ones() == 2)
            && mask_connected(&masks, subset)
        {
            return false;
        }
    }
    true
}

pub(crate) fn mask_connected(masks: &[u64], subset: u64) -> bool {
    if subset == 0 {
        return true;
    }
    let start = subset.trailing_zeros() as usize;
    let mut reached = 1u64 << start;
    loop {
        let mut next = reached;
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            next |= masks[v] & subset;
        }
        if next == reached {
            return reached == subset;
        }
        reached = next;
    }
}

/// All maximal cliques of a chordal graph, in lexicographic order.
///
/// A chordal graph on `n` vertices has at most `n` maximal cliques; they are
/// collected from a perfect elimination ordering as the sets `{v} + later
/// neighbors of v`, keeping the ones not contained in another candidate.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>, ChordalError> {
    let order = maximum_cardinality_search(g).reversed();
    if !is_perfect_elimination_ordering(g, &order)? {
        return Err(ChordalError::NotChordal);
    }
    let n = g.n();
    let mut position = vec![0usize; n];
    for (i, &v) in order.order.iter().enumerate() {
        position[v] = i;
    }
    let mut candidates: Vec<VertexSet> = Vec::new();
    for (i, &v) in order.order.iter().enumerate() {
        let mut members: Vec<usize> = g.neighbors(v).filter(|&u| position[u] > i).collect();
        members.push(v);
        candidates.push(VertexSet::new(members));
    }
    let mut cliques: Vec<VertexSet> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|other| c.len() < other.len() && c.is_subset_of(other))
        })
        .cloned()
        .collect();
    cliques.sort();
    cliques.dedup();
    Ok(cliques)
}
