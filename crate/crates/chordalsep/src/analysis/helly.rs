//! Helly property checks for separator families, with witness extraction.
//!
//! A family satisfies the Helly property when every pairwise-intersecting
//! subfamily has a common element; a witness of failure is a
//! pairwise-intersecting subfamily with empty total intersection.

use itertools::Itertools;
use serde::Serialize;

use super::AnalysisError;
use crate::chordal::{is_chordal, CliqueTree, SeparatorFamily};
use crate::graph::{Graph, VertexSet};

/// Outcome of a Helly check. When the property fails, `witness` holds the
/// indices of a pairwise-intersecting sub-multiset with empty intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HellyReport {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl HellyReport {
    fn holds() -> HellyReport {
        HellyReport {
            holds: true,
            witness: None,
        }
    }

    /// The fixed JSON shape shared by Helly reports and hereditary-property
    /// counterexamples.
    pub fn to_json(&self, family: &SeparatorFamily, counterexample: Option<&VertexSet>) -> AnalysisJson {
        AnalysisJson {
            holds: self.holds,
            witness_indices: self.witness.clone(),
            witness_sets: self.witness.as_ref().map(|ids| {
                ids.iter()
                    .map(|&i| family.get(i).iter().copied().collect())
                    .collect()
            }),
            counterexample_vertices: counterexample.map(|c| c.iter().copied().collect()),
        }
    }
}

/// Serialization shape for Helly reports and counterexamples.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisJson {
    pub holds: bool,
    pub witness_indices: Option<Vec<usize>>,
    pub witness_sets: Option<Vec<Vec<usize>>>,
    pub counterexample_vertices: Option<Vec<usize>>,
}

fn total_intersection(family: &SeparatorFamily, indices: &[usize]) -> VertexSet {
    let mut iter = indices.iter();
    let first = match iter.next() {
        Some(&i) => family.get(i).clone(),
        None => return VertexSet::default(),
    };
    iter.fold(first, |acc, &i| acc.intersection(family.get(i)))
}

fn pairwise_intersecting(family: &SeparatorFamily, indices: &[usize]) -> bool {
    indices.iter().tuple_combinations().all(|(&i, &j)| {
        !family.get(i).intersection(family.get(j)).is_empty()
    })
}

/// Whether the whole family is a witness: pairwise intersecting with empty
/// total intersection.
pub fn family_is_witness(family: &SeparatorFamily) -> bool {
    let all: Vec<usize> = (0..family.len()).collect();
    family.len() >= 2
        && pairwise_intersecting(family, &all)
        && total_intersection(family, &all).is_empty()
}

/// Scans all subfamilies of size >= 2 and reports the first witness, ordered
/// by cardinality and then lexicographically by index set.
pub fn helly_check_bruteforce(family: &SeparatorFamily) -> HellyReport {
    let k = family.len();
    assert!(k <= 20, "brute-force Helly scan is limited to small families");
    for size in 2..=k {
        for indices in (0..k).combinations(size) {
            if pairwise_intersecting(family, &indices) && total_intersection(family, &indices).is_empty() {
                return HellyReport {
                    holds: false,
                    witness: Some(indices),
                };
            }
        }
    }
    HellyReport::holds()
}

/// Triple-based Helly test: for every vertex triple, the members containing
/// at least two of the three vertices are automatically pairwise
/// intersecting; the property fails exactly when some such subfamily has
/// empty total intersection.
pub fn helly_check_triples(family: &SeparatorFamily) -> HellyReport {
    let universe: VertexSet = family
        .iter()
        .flat_map(|s| s.iter().copied())
        .collect();
    let verts = universe.as_slice();
    for triple in verts.iter().combinations(3) {
        let subfamily: Vec<usize> = (0..family.len())
            .filter(|&i| {
                triple
                    .iter()
                    .filter(|&&&v| family.get(i).contains(v))
                    .count()
                    >= 2
            })
            .collect();
        if subfamily.len() >= 2 && total_intersection(family, &subfamily).is_empty() {
            return HellyReport {
                holds: false,
                witness: Some(subfamily),
            };
        }
    }
    HellyReport::holds()
}

/// Whether the separator families of `g` and of every induced subgraph all
/// satisfy the Helly property. On failure returns the violating vertex
/// subset (minimal size, then lexicographic) and its family's witness.
pub fn hereditary_helly(g: &Graph) -> Result<(bool, Option<(VertexSet, Vec<usize>)>), crate::chordal::ChordalError> {
    if !is_chordal(g) {
        return Err(crate::chordal::ChordalError::NotChordal);
    }
    let n = g.n();
    assert!(n <= 16, "hereditary scans enumerate all 2^n induced subgraphs");
    let mut subsets: Vec<VertexSet> = (1u64..1 << n).map(VertexSet::from_mask).collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    for subset in subsets {
        if subset.len() < 4 {
            continue;
        }
        let family = super::subset_family(g, &subset);
        let report = helly_check_triples(&family);
        if !report.holds {
            return Ok((false, Some((subset, report.witness.unwrap_or_default()))));
        }
    }
    Ok((true, None))
}

/// The sub-multiset of clique-tree edge labels whose edge touches a leaf.
pub fn leaf_separators(t: &CliqueTree) -> Result<SeparatorFamily, AnalysisError> {
    if t.node_count() < 2 {
        return Err(AnalysisError::SingleNodeTree);
    }
    Ok(t.edges
        .iter()
        .filter(|e| t.is_leaf(e.a) || t.is_leaf(e.b))
        .map(|e| e.separator.clone())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::build_clique_tree;
    use crate::graph::Graph;

    fn vs(members: &[usize]) -> VertexSet {
        VertexSet::new(members.to_vec())
    }

    fn hajos_family() -> SeparatorFamily {
        SeparatorFamily::new(vec![vs(&[0, 1]), vs(&[0, 2]), vs(&[1, 2])])
    }

    #[test]
    fn hajos_family_fails_with_all_three_as_witness() {
        let report = helly_check_bruteforce(&hajos_family());
        assert!(!report.holds);
        assert_eq!(report.witness, Some(vec![0, 1, 2]));
        assert!(!helly_check_triples(&hajos_family()).holds);
        assert!(family_is_witness(&hajos_family()));
    }

    #[test]
    fn common_vertex_and_disjoint_families_hold() {
        let common = SeparatorFamily::new(vec![vs(&[0, 1]), vs(&[0]), vs(&[0, 2])]);
        assert!(helly_check_bruteforce(&common).holds);
        assert!(helly_check_triples(&common).holds);

        let disjoint = SeparatorFamily::new(vec![vs(&[0]), vs(&[1]), vs(&[2])]);
        assert!(helly_check_bruteforce(&disjoint).holds);
        assert!(helly_check_triples(&disjoint).holds);
    }

    #[test]
    fn empty_family_holds() {
        assert!(helly_check_triples(&SeparatorFamily::default()).holds);
        assert!(helly_check_bruteforce(&SeparatorFamily::default()).holds);
    }

    #[test]
    fn leaf_separators_of_named_trees() {
        let hajos = Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (2, 4), (1, 5), (2, 5)],
        )
        .unwrap();
        let t = build_clique_tree(&hajos, 0).unwrap();
        let leaves = leaf_separators(&t).unwrap();
        assert_eq!(leaves.len(), 3);
        assert!(family_is_witness(&leaves));

        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let t = build_clique_tree(&p4, 0).unwrap();
        let leaves = leaf_separators(&t).unwrap().normalized();
        assert_eq!(leaves.as_slice(), &[vs(&[1]), vs(&[2])]);

        let two_cliques = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let t = build_clique_tree(&two_cliques, 0).unwrap();
        assert_eq!(leaf_separators(&t).unwrap().as_slice(), &[vs(&[1])]);

        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let t = build_clique_tree(&k3, 0).unwrap();
        assert_eq!(leaf_separators(&t), Err(AnalysisError::SingleNodeTree));
    }

    #[test]
    fn json_shape_carries_witness_sets() {
        let report = helly_check_bruteforce(&hajos_family());
        let json = serde_json::to_value(report.to_json(&hajos_family(), None)).unwrap();
        assert_eq!(json["holds"], serde_json::json!(false));
        assert_eq!(json["witness_indices"], serde_json::json!([0, 1, 2]));
        assert_eq!(
            json["witness_sets"],
            serde_json::json!([[0, 1], [0, 2], [1, 2]])
        );
        assert_eq!(json["counterexample_vertices"], serde_json::Value::Null);
    }
}
