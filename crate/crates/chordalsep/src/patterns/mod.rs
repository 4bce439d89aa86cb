//! The fixed catalog of seven forbidden graphs and brute-force induced
//! subgraph containment tests.

mod classify;

pub use classify::{
    class_table, classify, classify_with, ClassId, ClassReport, ClassSpec, ClassVerdict,
    ClassVerdicts, PatternWitness,
};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// Names of the seven cataloged patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PatternName {
    #[serde(rename = "claw")]
    Claw,
    #[serde(rename = "P4")]
    P4,
    #[serde(rename = "2P3")]
    TwoP3,
    #[serde(rename = "gem")]
    Gem,
    #[serde(rename = "dart")]
    Dart,
    #[serde(rename = "butterfly")]
    Butterfly,
    #[serde(rename = "hajos")]
    Hajos,
}

impl PatternName {
    pub const ALL: [PatternName; 7] = [
        PatternName::Claw,
        PatternName::P4,
        PatternName::TwoP3,
        PatternName::Gem,
        PatternName::Dart,
        PatternName::Butterfly,
        PatternName::Hajos,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PatternName::Claw => "claw",
            PatternName::P4 => "P4",
            PatternName::TwoP3 => "2P3",
            PatternName::Gem => "gem",
            PatternName::Dart => "dart",
            PatternName::Butterfly => "butterfly",
            PatternName::Hajos => "hajos",
        }
    }
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for PatternName {
    type Err = String;

    fn from_str(s: &str) -> Result<PatternName, String> {
        PatternName::ALL
            .into_iter()
            .find(|p| p.as_str().eq_ignore_ascii_case(s) || (*p == PatternName::TwoP3 && s == "2P3"))
            .ok_or_else(|| format!("unknown pattern name {s:?}"))
    }
}

/// A named pattern graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternGraph {
    pub name: PatternName,
    pub graph: Graph,
}

/// The pattern catalog used by detection and classification. The standard
/// catalog holds the seven fixed graphs; mutated catalogs exist only to
/// demonstrate that the verification suites notice wrong definitions.
#[derive(Debug, Clone)]
pub struct Catalog {
    patterns: Vec<PatternGraph>,
}

impl Catalog {
    pub fn standard() -> Catalog {
        let patterns = vec![
            // Star on four vertices.
            PatternGraph {
                name: PatternName::Claw,
                graph: Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
            },
            // Path on four vertices.
            PatternGraph {
                name: PatternName::P4,
                graph: Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
            },
            // Two disjoint paths on three vertices.
            PatternGraph {
                name: PatternName::TwoP3,
                graph: Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap(),
            },
            // P4 0-1-2-3 plus the dominating vertex 4.
            PatternGraph {
                name: PatternName::Gem,
                graph: Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])
                    .unwrap(),
            },
            // Diamond on {0,1,2,3} missing the edge 2-3, plus the pendant 4
            // attached to the degree-three vertex 0.
            PatternGraph {
                name: PatternName::Dart,
                graph: Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4)]).unwrap(),
            },
            // Center 0 joined to the disjoint paths 1-2-3 and 4-5-6.
            PatternGraph {
                name: PatternName::Butterfly,
                graph: Graph::from_edges(
                    7,
                    &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (2, 3), (4, 5), (5, 6)],
                )
                .unwrap(),
            },
            // Triangle {0,1,2} plus 3 adj {0,1}, 4 adj {0,2}, 5 adj {1,2}.
            PatternGraph {
                name: PatternName::Hajos,
                graph: Graph::from_edges(
                    6,
                    &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (2, 4), (1, 5), (2, 5)],
                )
                .unwrap(),
            },
        ];
        Catalog { patterns }
    }

    pub fn get(&self, name: PatternName) -> &PatternGraph {
        self.patterns
            .iter()
            .find(|p| p.name == name)
            .expect("catalog holds all seven patterns")
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PatternGraph> {
        self.patterns.iter()
    }

    /// A copy of the catalog with one pattern's graph replaced.
    pub fn with_replaced(&self, name: PatternName, graph: Graph) -> Catalog {
        let mut catalog = self.clone();
        for p in &mut catalog.patterns {
            if p.name == name {
                p.graph = graph.clone();
            }
        }
        catalog
    }
}

/// Searches for an induced occurrence of `pattern` in `g`, returning the
/// lexicographically first vertex subset that induces a graph isomorphic to
/// the pattern, by brute force over subsets with a permutation check.
pub fn contains_induced(g: &Graph, pattern: &PatternGraph) -> Option<VertexSet> {
    let k = pattern.graph.n();
    if g.n() < k {
        return None;
    }
    let pattern_degrees = pattern.graph.degree_sequence();
    let pattern_edges = pattern.graph.edge_count();
    for subset in (0..g.n()).combinations(k) {
        let set = VertexSet::from_sorted(subset);
        let induced = g.induced_subgraph(&set).expect("subset in range");
        if induced.edge_count() != pattern_edges || induced.degree_sequence() != pattern_degrees {
            continue;
        }
        if isomorphic_by_permutation(&induced, &pattern.graph) {
            return Some(set);
        }
    }
    None
}

/// Backtracking isomorphism test for small equal-order graphs: assigns
/// pattern vertices to host vertices one at a time, enforcing adjacency
/// agreement with all previously assigned vertices.
fn isomorphic_by_permutation(host: &Graph, pattern: &Graph) -> bool {
    let n = pattern.n();
    if host.n() != n {
        return false;
    }
    let host_deg: Vec<usize> = (0..n).map(|v| host.degree(v)).collect();
    let pat_deg: Vec<usize> = (0..n).map(|v| pattern.degree(v)).collect();
    let mut assignment = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn assign(
        pos: usize,
        host: &Graph,
        pattern: &Graph,
        host_deg: &[usize],
        pat_deg: &[usize],
        assignment: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = pattern.n();
        if pos == n {
            return true;
        }
        for candidate in 0..n {
            if used[candidate] || host_deg[candidate] != pat_deg[pos] {
                continue;
            }
            if (0..pos).any(|earlier| {
                pattern.adjacent(earlier, pos) != host.adjacent(assignment[earlier], candidate)
            }) {
                continue;
            }
            assignment[pos] = candidate;
            used[candidate] = true;
            if assign(pos + 1, host, pattern, host_deg, pat_deg, assignment, used) {
                return true;
            }
            used[candidate] = false;
        }
        false
    }
    assign(0, host, pattern, &host_deg, &pat_deg, &mut assignment, &mut used)
}

/// The set of catalog patterns occurring in `g` as induced subgraphs.
pub fn forbidden_profile(g: &Graph, catalog: &Catalog) -> BTreeSet<PatternName> {
    catalog
        .iter()
        .filter(|p| contains_induced(g, p).is_some())
        .map(|p| p.name)
        .collect()
}

/// First induced occurrence of each catalog pattern, if any.
pub fn pattern_occurrences(g: &Graph, catalog: &Catalog) -> Vec<(PatternName, Option<VertexSet>)> {
    catalog
        .iter()
        .map(|p| (p.name, contains_induced(g, p)))
        .collect()
}

/// Verifies the catalog-level containments that make shorter forbidden lists
/// sufficient: claw inside dart, P4 inside gem, dart inside butterfly and
/// 2P3 inside butterfly.
pub fn remark_implications_check() -> bool {
    let catalog = Catalog::standard();
    let pairs = [
        (PatternName::Claw, PatternName::Dart),
        (PatternName::P4, PatternName::Gem),
        (PatternName::Dart, PatternName::Butterfly),
        (PatternName::TwoP3, PatternName::Butterfly),
    ];
    pairs.into_iter().all(|(small, large)| {
        contains_induced(&catalog.get(large).graph, catalog.get(small)).is_some()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::is_chordal;
    use crate::graph::parse_graph6;

    #[test]
    fn catalog_graphs_have_expected_shapes() {
        let catalog = Catalog::standard();
        let sizes = [
            (PatternName::Claw, 4, 3),
            (PatternName::P4, 4, 3),
            (PatternName::TwoP3, 6, 4),
            (PatternName::Gem, 5, 7),
            (PatternName::Dart, 5, 6),
            (PatternName::Butterfly, 7, 10),
            (PatternName::Hajos, 6, 9),
        ];
        for (name, n, m) in sizes {
            let p = catalog.get(name);
            assert_eq!(p.graph.n(), n, "{name}");
            assert_eq!(p.graph.edge_count(), m, "{name}");
            assert!(is_chordal(&p.graph), "{name} must be chordal");
        }
    }

    #[test]
    fn gem_contains_p4_and_k4_contains_no_claw() {
        let catalog = Catalog::standard();
        let gem = &catalog.get(PatternName::Gem).graph;
        assert_eq!(
            contains_induced(gem, catalog.get(PatternName::P4)),
            Some(VertexSet::new(vec![0, 1, 2, 3]))
        );
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(contains_induced(&k4, catalog.get(PatternName::Claw)), None);
    }

    #[test]
    fn butterfly_contains_dart() {
        let catalog = Catalog::standard();
        let butterfly = &catalog.get(PatternName::Butterfly).graph;
        let hit = contains_induced(butterfly, catalog.get(PatternName::Dart)).unwrap();
        let induced = butterfly.induced_subgraph(&hit).unwrap();
        assert!(crate::canon::is_isomorphic(
            &induced,
            &catalog.get(PatternName::Dart).graph
        ));
    }

    #[test]
    fn hajos_profile_contains_hajos_and_gem() {
        // Removing any outer vertex of the Hajos graph leaves a dominating
        // triangle vertex over an induced P4, i.e. a gem.
        let catalog = Catalog::standard();
        let hajos = &catalog.get(PatternName::Hajos).graph;
        let profile = forbidden_profile(hajos, &catalog);
        assert!(profile.contains(&PatternName::Hajos));
        assert!(profile.contains(&PatternName::Gem));
        assert!(!profile.contains(&PatternName::Dart));
        assert!(!profile.contains(&PatternName::Claw));
    }

    #[test]
    fn small_pattern_profiles() {
        let catalog = Catalog::standard();
        let claw = &catalog.get(PatternName::Claw).graph;
        assert_eq!(forbidden_profile(claw, &catalog), BTreeSet::from([PatternName::Claw]));
        let p4 = &catalog.get(PatternName::P4).graph;
        assert_eq!(forbidden_profile(p4, &catalog), BTreeSet::from([PatternName::P4]));
    }

    #[test]
    fn remark_containments_hold() {
        assert!(remark_implications_check());
    }

    #[test]
    fn occurrences_are_verified_by_an_independent_check() {
        let catalog = Catalog::standard();
        let butterfly = &catalog.get(PatternName::Butterfly).graph;
        for (name, occurrence) in pattern_occurrences(butterfly, &catalog) {
            if let Some(set) = occurrence {
                let induced = butterfly.induced_subgraph(&set).unwrap();
                assert!(
                    crate::canon::is_isomorphic(&induced, &catalog.get(name).graph),
                    "claimed {name} occurrence is not isomorphic to the pattern"
                );
            }
        }
    }
}
