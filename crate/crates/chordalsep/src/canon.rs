//! Brute-force canonical labeling for small graphs.
//!
//! The canonical form of a graph is the relabeling whose packed adjacency bit
//! string (in graph6 column order) is lexicographically least over all vertex
//! permutations. The search assigns positions one at a time and prunes any
//! branch whose partial bit string already exceeds the incumbent, which keeps
//! the worst case affordable up to the enumeration cap of 8 vertices.

use crate::graph::Graph;

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    // perm[pos] = original vertex placed at position pos
    perm: Vec<usize>,
    used: Vec<bool>,
    // cols[pos] = bits (i, pos) for i < pos, earlier i more significant
    cols: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl Search<'_> {
    fn column(&self, pos: usize, vertex: usize) -> u64 {
        let mut col = 0u64;
        for i in 0..pos {
            col = col << 1 | u64::from(self.g.adjacent(self.perm[i], vertex));
        }
        col
    }

    // `tight` tracks whether cols[0..pos] equals the incumbent's prefix. Only
    // tight branches may prune; once a branch drops strictly below, its leaves
    // are compared in full because the incumbent can shrink mid-subtree.
    fn dfs(&mut self, pos: usize, tight: bool) {
        if pos == self.n {
            let replace = match &self.best {
                None => true,
                Some(best) => !tight && self.cols < *best,
            };
            if replace {
                self.best = Some(self.cols.clone());
            }
            return;
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            let col = self.column(pos, v);
            let mut tight_here = tight;
            if tight_here {
                if let Some(best) = &self.best {
                    if col > best[pos] {
                        continue;
                    }
                    if col < best[pos] {
                        tight_here = false;
                    }
                }
            }
            self.used[v] = true;
            self.perm[pos] = v;
            self.cols[pos] = col;
            self.dfs(pos + 1, tight_here);
            self.used[v] = false;
        }
    }
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    if n <= 1 {
        return g.clone();
    }
    let mut search = Search {
        g,
        n,
        perm: vec![0; n],
        used: vec![false; n],
        cols: vec![0; n],
        best: None,
    };
    search.dfs(0, true);
    let cols = search.best.expect("search visits at least one permutation");
    let mut canon = Graph::empty(n);
    for (pos, col) in cols.iter().enumerate() {
        for i in 0..pos {
            if col >> (pos - 1 - i) & 1 == 1 {
                canon.set_edge(i, pos);
            }
        }
    }
    canon
}

/// Whether two graphs are isomorphic, via canonical forms.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_form(a) == canonical_form(b)
}
