//! Internal exhaustive enumeration of small graphs up to isomorphism, plus
//! the independent labeled-enumeration oracle used to cross-check it.

use std::collections::HashSet;
use std::str::FromStr;

use crate::canon::canonical_form;
use crate::chordal::is_chordal;
use crate::graph::{to_graph6, Graph};

use super::HarnessError;

/// Corpus filters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Filter {
    #[default]
    All,
    Connected,
    Chordal,
    ConnectedChordal,
}

impl Filter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::All => true,
            Filter::Connected => g.is_connected(),
            Filter::Chordal => is_chordal(g),
            Filter::ConnectedChordal => g.is_connected() && is_chordal(g),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Filter::All => "all",
            Filter::Connected => "connected",
            Filter::Chordal => "chordal",
            Filter::ConnectedChordal => "connected-chordal",
        }
    }
}

impl FromStr for Filter {
    type Err = String;

    fn from_str(s: &str) -> Result<Filter, String> {
        match s {
            "all" => Ok(Filter::All),
            "connected" => Ok(Filter::Connected),
            "chordal" => Ok(Filter::Chordal),
            "connected-chordal" => Ok(Filter::ConnectedChordal),
            other => Err(format!("unknown filter {other:?}")),
        }
    }
}

/// Internal enumeration is capped here; larger corpora are ingested from
/// external graph6 files.
pub const MAX_INTERNAL_N: usize = 8;

/// All non-isomorphic graphs on 1..=max_n vertices meeting the filter,
/// exactly one canonical representative per isomorphism class, ordered by
/// vertex count and then by canonical graph6 string.
pub fn enumerate_graphs(max_n: usize, filter: Filter) -> Result<Vec<Graph>, HarnessError> {
    if max_n == 0 || max_n > MAX_INTERNAL_N {
        return Err(HarnessError::UnsupportedSize {
            requested: max_n,
            max: MAX_INTERNAL_N,
        });
    }
    let mut result = Vec::new();
    let mut level: Vec<Graph> = vec![Graph::empty(1)];
    for n in 1..=max_n {
        result.extend(level.iter().filter(|g| filter.accepts(g)).cloned());
        if n == max_n {
            break;
        }
        // Extend every n-vertex representative by one vertex with every
        // possible neighborhood, then deduplicate by canonical form.
        let mut next: HashSet<Graph> = HashSet::new();
        for g in &level {
            for mask in 0u64..1 << n {
                next.insert(canonical_form(&g.with_appended_vertex(mask)));
            }
        }
        let mut next: Vec<Graph> = next.into_iter().collect();
        next.sort_by_cached_key(|g| to_graph6(g).expect("enumerated graphs fit graph6"));
        level = next;
    }
    Ok(result)
}

/// Independent oracle: enumerates all labeled graphs on exactly `n` vertices,
/// filters them, and counts distinct canonical forms. Quadratic in the number
/// of labeled graphs, so capped at 7 vertices (2^21 adjacency masks).
pub fn labeled_class_count(n: usize, filter: Filter) -> Result<usize, HarnessError> {
    const MAX_ORACLE_N: usize = 7;
    if n == 0 || n > MAX_ORACLE_N {
        return Err(HarnessError::UnsupportedSize {
            requested: n,
            max: MAX_ORACLE_N,
        });
    }
    let pairs = n * (n - 1) / 2;
    let mut classes: HashSet<Graph> = HashSet::new();
    for mask in 0u64..1 << pairs {
        let g = Graph::from_pair_bits(n, mask);
        if filter.accepts(&g) {
            classes.insert(canonical_form(&g));
        }
    }
    Ok(classes.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_on_up_to_four_vertices() {
        // 1, 2, 4 and 11 isomorphism classes of graphs on 1..=4 vertices;
        // hand enumeration confirms the 3-vertex classes (empty, one edge,
        // path, triangle).
        let all = enumerate_graphs(4, Filter::All).unwrap();
        let per_n = |k: usize| all.iter().filter(|g| g.n() == k).count();
        assert_eq!(per_n(1), 1);
        assert_eq!(per_n(2), 2);
        assert_eq!(per_n(3), 4);
        assert_eq!(per_n(4), 11);
    }

    #[test]
    fn one_vertex_graph_is_enumerated() {
        let all = enumerate_graphs(1, Filter::All).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].n(), 1);
    }

    #[test]
    fn connected_chordal_count_matches_labeled_oracle_at_four() {
        let internal = enumerate_graphs(4, Filter::ConnectedChordal)
            .unwrap()
            .into_iter()
            .filter(|g| g.n() == 4)
            .count();
        let oracle = labeled_class_count(4, Filter::ConnectedChordal).unwrap();
        assert_eq!(internal, oracle);
        assert_eq!(internal, 5, "six connected 4-vertex classes minus the 4-cycle");
    }

    #[test]
    fn rejects_oversized_requests() {
        assert!(matches!(
            enumerate_graphs(9, Filter::All),
            Err(HarnessError::UnsupportedSize { requested: 9, max: 8 })
        ));
        assert!(matches!(
            enumerate_graphs(0, Filter::All),
            Err(HarnessError::UnsupportedSize { .. })
        ));
    }

    #[test]
    fn representatives_are_canonical_and_distinct() {
        let graphs = enumerate_graphs(5, Filter::All).unwrap();
        let mut seen = std::collections::HashSet::new();
        for g in &graphs {
            assert_eq!(&canonical_form(g), g);
            assert!(seen.insert(to_graph6(g).unwrap()), "duplicate representative");
        }
    }
}
