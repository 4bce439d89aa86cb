//! Clique trees via maximum-weight spanning trees of the clique-intersection
//! graph, and the separator multiset read off their edge labels.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{is_chordal, maximal_cliques, ChordalError};
use crate::graph::{Graph, VertexSet};

/// An edge of a clique tree, labeled with the separator it realizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueTreeEdge {
    pub a: usize,
    pub b: usize,
    pub separator: VertexSet,
}

/// A tree (or forest, for disconnected graphs) over the maximal cliques of a
/// chordal graph. Each edge is labeled with the intersection of its endpoint
/// cliques, and for every vertex the cliques containing it span a connected
/// subtree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueTree {
    pub cliques: Vec<VertexSet>,
    pub edges: Vec<CliqueTreeEdge>,
}

impl CliqueTree {
    pub fn node_count(&self) -> usize {
        self.cliques.len()
    }

    fn tree_degree(&self, node: usize) -> usize {
        self.edges.iter().filter(|e| e.a == node || e.b == node).count()
    }

    pub fn is_leaf(&self, node: usize) -> bool {
        self.tree_degree(node) == 1
    }

    /// Checks the clique-tree invariants against the host graph: the edges
    /// form a spanning forest with one tree per connected component, each
    /// label equals the intersection of its endpoints, and the cliques
    /// containing any fixed vertex form a connected subtree.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let k = self.cliques.len();
        let components = g.connected_components().len();
        if self.edges.len() + components != k {
            return Err(format!(
                "{} edges cannot span {} cliques across {} components",
                self.edges.len(),
                k,
                components
            ));
        }
        let mut dsu: Vec<usize> = (0..k).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                let root = find(dsu, dsu[x]);
                dsu[x] = root;
            }
            dsu[x]
        }
        for e in &self.edges {
            let expected = self.cliques[e.a].intersection(&self.cliques[e.b]);
            if e.separator != expected {
                return Err(format!(
                    "edge ({}, {}) labeled {} but endpoint intersection is {}",
                    e.a, e.b, e.separator, expected
                ));
            }
            let (ra, rb) = (find(&mut dsu, e.a), find(&mut dsu, e.b));
            if ra == rb {
                return Err(format!("edge ({}, {}) closes a cycle", e.a, e.b));
            }
            dsu[ra] = rb;
        }
        for v in 0..g.n() {
            let holding: Vec<usize> = (0..k).filter(|&i| self.cliques[i].contains(v)).collect();
            if holding.is_empty() {
                return Err(format!("vertex {v} occurs in no clique"));
            }
            // The cliques holding v must be connected using only edges whose
            // endpoints both hold v.
            let mut reached = vec![false; k];
            let mut stack = vec![holding[0]];
            reached[holding[0]] = true;
            while let Some(i) = stack.pop() {
                for e in &self.edges {
                    let other = match (e.a == i, e.b == i) {
                        (true, _) => e.b,
                        (_, true) => e.a,
                        _ => continue,
                    };
                    if self.cliques[other].contains(v) && !reached[other] {
                        reached[other] = true;
                        stack.push(other);
                    }
                }
            }
            if holding.iter().any(|&i| !reached[i]) {
                return Err(format!("cliques containing vertex {v} do not form a subtree"));
            }
        }
        Ok(())
    }

    /// Renders the tree as DOT, with cliques as nodes and separators as edge
    /// labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph cliquetree {\n");
        for (i, c) in self.cliques.iter().enumerate() {
            out.push_str(&format!("  c{i} [label=\"{c}\"];\n"));
        }
        for e in &self.edges {
            out.push_str(&format!("  c{} -- c{} [label=\"{}\"];\n", e.a, e.b, e.separator));
        }
        out.push_str("}\n");
        out
    }
}

/// The indexed multiset of minimal vertex separators of a chordal graph:
/// equal sets may repeat under distinct indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SeparatorFamily {
    separators: Vec<VertexSet>,
}

impl SeparatorFamily {
    pub fn new(separators: Vec<VertexSet>) -> SeparatorFamily {
        SeparatorFamily { separators }
    }

    pub fn len(&self) -> usize {
        self.separators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.separators.is_empty()
    }

    pub fn get(&self, i: usize) -> &VertexSet {
        &self.separators[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.separators.iter()
    }

    pub fn as_slice(&self) -> &[VertexSet] {
        &self.separators
    }

    /// The multiset with members sorted lexicographically, so families from
    /// different clique trees of the same graph compare equal.
    pub fn normalized(&self) -> SeparatorFamily {
        let mut separators = self.separators.clone();
        separators.sort();
        SeparatorFamily { separators }
    }

    /// The deduplicated support, sorted.
    pub fn support(&self) -> Vec<VertexSet> {
        let mut sets = self.separators.clone();
        sets.sort();
        sets.dedup();
        sets
    }
}

impl FromIterator<VertexSet> for SeparatorFamily {
    fn from_iter<T: IntoIterator<Item = VertexSet>>(iter: T) -> SeparatorFamily {
        SeparatorFamily::new(iter.into_iter().collect())
    }
}

/// Builds a clique tree of a connected chordal graph as a maximum-weight
/// spanning tree of the clique-intersection graph (edge weight = intersection
/// size). `tie_break_seed` shuffles equally weighted candidate edges, so
/// distinct seeds can produce distinct valid trees.
pub fn build_clique_tree(g: &Graph, tie_break_seed: u64) -> Result<CliqueTree, ChordalError> {
    if !g.is_connected() {
        return Err(ChordalError::Disconnected);
    }
    if !is_chordal(g) {
        return Err(ChordalError::NotChordal);
    }
    Ok(max_weight_spanning_tree(maximal_cliques(g)?, tie_break_seed))
}

fn max_weight_spanning_tree(cliques: Vec<VertexSet>, seed: u64) -> CliqueTree {
    let k = cliques.len();
    let mut candidates: Vec<(usize, usize, usize)> = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            let w = cliques[a].intersection(&cliques[b]).len();
            if w > 0 {
                candidates.push((a, b, w));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    candidates.shuffle(&mut rng);
    // Stable sort keeps the shuffled order within each weight class.
    candidates.sort_by(|x, y| y.2.cmp(&x.2));

    let mut dsu: Vec<usize> = (0..k).collect();
    fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
        if dsu[x] != x {
            let root = find(dsu, dsu[x]);
            dsu[x] = root;
        }
        dsu[x]
    }
    let mut edges = Vec::with_capacity(k.saturating_sub(1));
    for (a, b, _) in candidates {
        let (ra, rb) = (find(&mut dsu, a), find(&mut dsu, b));
        if ra != rb {
            dsu[ra] = rb;
            let separator = cliques[a].intersection(&cliques[b]);
            edges.push(CliqueTreeEdge { a, b, separator });
        }
    }
    // For a connected chordal graph the positive-weight clique graph is
    // connected, so the tree always spans.
    debug_assert_eq!(edges.len() + 1, k.max(1));
    CliqueTree { cliques, edges }
}

/// Builds one clique tree per connected component and returns them as a
/// single forest over the graph's cliques (vertex labels refer to `g`).
pub fn build_clique_forest(g: &Graph, tie_break_seed: u64) -> Result<CliqueTree, ChordalError> {
    if !is_chordal(g) {
        return Err(ChordalError::NotChordal);
    }
    let mut cliques = Vec::new();
    let mut edges = Vec::new();
    for component in g.connected_components() {
        let sub = g
            .induced_subgraph(&component)
            .expect("components are in range");
        let tree = max_weight_spanning_tree(maximal_cliques(&sub)?, tie_break_seed);
        let offset = cliques.len();
        let new_to_old = component.as_slice();
        cliques.extend(tree.cliques.iter().map(|c| c.relabel(new_to_old)));
        edges.extend(tree.edges.iter().map(|e| CliqueTreeEdge {
            a: e.a + offset,
            b: e.b + offset,
            separator: e.separator.relabel(new_to_old),
        }));
    }
    Ok(CliqueTree { cliques, edges })
}

/// The multiset of edge labels of a clique tree, order-normalized.
pub fn separator_multiset(t: &CliqueTree) -> SeparatorFamily {
    t.edges
        .iter()
        .map(|e| e.separator.clone())
        .collect::<SeparatorFamily>()
        .normalized()
}

/// The separator multiset of a chordal graph: the disjoint union of the edge
/// labels of one clique tree per connected component. By clique-tree
/// invariance this does not depend on `tie_break_seed`.
pub fn separator_family(g: &Graph, tie_break_seed: u64) -> Result<SeparatorFamily, ChordalError> {
    Ok(separator_multiset(&build_clique_forest(g, tie_break_seed)?))
}
