//! Simple undirected graphs on dense vertex sets `0..n`, stored as a packed
//! upper-triangular bit matrix, plus the vertex-set type shared by every
//! algorithm in this crate.

mod format;

pub use format::{parse_edge_list, parse_graph6, parse_graphs, to_graph6, InputFormat, ParseError};

use std::fmt;

use thiserror::Error;

/// Errors raised by graph constructors and vertex-indexed operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex} is not allowed")]
    SelfLoop { vertex: usize },
    #[error("graph on {n} vertices exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
}

/// Largest vertex count supported by the graph6 single-byte size field.
pub const MAX_GRAPH6_VERTICES: usize = 62;

/// An immutable simple undirected graph with vertices `0..n`.
///
/// The adjacency relation is symmetric and irreflexive. Pairs are packed in
/// graph6 column order: bit `v*(v-1)/2 + u` holds the pair `(u, v)` with
/// `u < v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    bits: Vec<u64>,
}

#[inline]
fn pair_index(u: usize, v: usize) -> usize {
    debug_assert_ne!(u, v);
    let (lo, hi) = if u < v { (u, v) } else { (v, u) };
    hi * (hi - 1) / 2 + lo
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let nbits = n * n.saturating_sub(1) / 2;
        Graph {
            n,
            bits: vec![0; nbits.div_ceil(64)],
        }
    }

    /// Builds a graph from an explicit edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph on `n <= 11` vertices directly from a packed pair
    /// bitmask in column order. Used by exhaustive labeled enumeration.
    pub(crate) fn from_pair_bits(n: usize, mask: u64) -> Graph {
        debug_assert!(n * n.saturating_sub(1) / 2 <= 64);
        let mut g = Graph::empty(n);
        if !g.bits.is_empty() {
            g.bits[0] = mask;
        }
        g
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        let k = pair_index(u, v);
        self.bits[k / 64] |= 1 << (k % 64);
    }

    /// Extends the graph with a new vertex `n` whose neighborhood is given by
    /// the low `n` bits of `neighbor_mask`.
    pub(crate) fn with_appended_vertex(&self, neighbor_mask: u64) -> Graph {
        let n = self.n + 1;
        let mut g = Graph::empty(n);
        g.bits[..self.bits.len()].copy_from_slice(&self.bits);
        for u in 0..self.n {
            if neighbor_mask >> u & 1 == 1 {
                g.set_edge(u, self.n);
            }
        }
        g
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether vertices `u` and `v` are adjacent. `false` for `u == v`.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        let k = pair_index(u, v);
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    /// Iterates over the neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.adjacent(u, v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Iterates over all edges `(u, v)` with `u < v` in column order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| (0..v).filter_map(move |u| self.adjacent(u, v).then_some((u, v))))
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighborhoods as bitmasks, for the subset-scanning algorithms.
    /// Only valid for `n <= 64`.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        let mut masks = vec![0u64; self.n];
        for (u, v) in self.edges() {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        masks
    }

    /// The connected components as vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut members = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                members.push(v);
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            members.sort_unstable();
            components.push(VertexSet::from_sorted(members));
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// The subgraph induced by `s`, relabeled `0..s.len()` by sorted order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        if let Some(&v) = s.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let verts = s.as_slice();
        let mut g = Graph::empty(verts.len());
        for j in 1..verts.len() {
            for i in 0..j {
                if self.adjacent(verts[i], verts[j]) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Induced subgraph on the complement of `removed`, together with the
    /// relabeling map (new id -> original id).
    pub fn delete_vertices(&self, removed: &VertexSet) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|v| !removed.contains(*v)).collect();
        let keep_set = VertexSet::from_sorted(keep.clone());
        let g = self
            .induced_subgraph(&keep_set)
            .expect("complement vertices are in range");
        (g, keep)
    }

    /// Sorted degree sequence, used as a cheap isomorphism invariant.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        degrees
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// A sorted, duplicate-free set of vertex identifiers.
///
/// Equality, ordering and hashing follow the member list, so two sets are
/// equal exactly when their members coincide, and the derived `Ord` is the
/// lexicographic order on member lists.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    /// Builds a set from arbitrary members, sorting and deduplicating.
    pub fn new(mut members: Vec<usize>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub(crate) fn from_sorted(members: Vec<usize>) -> VertexSet {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet { members }
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        VertexSet::from_sorted((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> VertexSet {
        VertexSet::from_sorted((0..64).filter(|&v| mask >> v & 1 == 1).collect())
    }

    pub fn to_mask(&self) -> u64 {
        debug_assert!(self.members.last().is_none_or(|&v| v < 64));
        self.members.iter().fold(0, |acc, &v| acc | 1 << v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.members.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_sorted(
            self.members
                .iter()
                .filter(|&&v| other.contains(v))
                .copied()
                .collect(),
        )
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        VertexSet::new(members)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_sorted(
            self.members
                .iter()
                .filter(|&&v| !other.contains(v))
                .copied()
                .collect(),
        )
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    /// Maps each member through `new_to_old`, i.e. translates a set expressed
    /// in induced-subgraph labels back to the host graph's labels.
    pub fn relabel(&self, new_to_old: &[usize]) -> VertexSet {
        VertexSet::new(self.members.iter().map(|&v| new_to_old[v]).collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> VertexSet {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
