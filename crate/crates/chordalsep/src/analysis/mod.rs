//! Relations between separator pairs, hereditary separator properties over
//! all induced subgraphs, and the Helly property with witness extraction.

mod helly;

pub use helly::{
    family_is_witness, helly_check_bruteforce, helly_check_triples, hereditary_helly,
    leaf_separators, AnalysisJson, HellyReport,
};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chordal::{is_chordal, separator_family, ChordalError, SeparatorFamily};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("allowed-set of a property specification must be nonempty")]
    EmptyAllowedSet,
    #[error("leaf separators require a clique tree with at least two nodes")]
    SingleNodeTree,
}

/// The four mutually exclusive relations a pair of nonempty separators can
/// realize. `Overlap` means a nonempty intersection with neither side
/// contained in the other, so the four kinds partition all pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PairRelation {
    Disjoint,
    Equal,
    ProperContainment,
    Overlap,
}

impl PairRelation {
    pub const ALL: [PairRelation; 4] = [
        PairRelation::Disjoint,
        PairRelation::Equal,
        PairRelation::ProperContainment,
        PairRelation::Overlap,
    ];

    /// Single-letter tag used in relation matrices: D, E, C, O.
    pub fn tag(self) -> char {
        match self {
            PairRelation::Disjoint => 'D',
            PairRelation::Equal => 'E',
            PairRelation::ProperContainment => 'C',
            PairRelation::Overlap => 'O',
        }
    }
}

impl std::fmt::Display for PairRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            PairRelation::Disjoint => "disjoint",
            PairRelation::Equal => "equal",
            PairRelation::ProperContainment => "proper-containment",
            PairRelation::Overlap => "overlap",
        };
        f.write_str(name)
    }
}

/// Classifies a pair of vertex sets into its unique relation kind.
pub fn classify_pair(a: &VertexSet, b: &VertexSet) -> PairRelation {
    if a == b {
        return PairRelation::Equal;
    }
    if a.intersection(b).is_empty() {
        return PairRelation::Disjoint;
    }
    if a.is_subset_of(b) || b.is_subset_of(a) {
        return PairRelation::ProperContainment;
    }
    PairRelation::Overlap
}

/// The rejected literal reading of the overlap case, in which incomparable
/// disjoint pairs also count as overlapping. Kept only so the harness can
/// demonstrate that this reading breaks the class equivalences.
pub fn classify_pair_literal_overlap(a: &VertexSet, b: &VertexSet) -> PairRelation {
    if a == b {
        return PairRelation::Equal;
    }
    if !a.is_subset_of(b) && !b.is_subset_of(a) {
        return PairRelation::Overlap;
    }
    PairRelation::ProperContainment
}

pub type PairClassifier = fn(&VertexSet, &VertexSet) -> PairRelation;

/// The set of relation kinds realized over all unordered index pairs of the
/// family. Multiset semantics: two distinct indices holding equal sets
/// realize `Equal`.
pub fn relation_profile(f: &SeparatorFamily) -> BTreeSet<PairRelation> {
    relation_profile_with(f, classify_pair)
}

pub fn relation_profile_with(f: &SeparatorFamily, classifier: PairClassifier) -> BTreeSet<PairRelation> {
    let mut kinds = BTreeSet::new();
    let sets = f.as_slice();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            kinds.insert(classifier(&sets[i], &sets[j]));
            if kinds.len() == PairRelation::ALL.len() {
                return kinds;
            }
        }
    }
    kinds
}

/// An allowed-set of pair relations defining one separator-based graph class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertySpec {
    allowed: BTreeSet<PairRelation>,
}

impl PropertySpec {
    pub fn new<I: IntoIterator<Item = PairRelation>>(allowed: I) -> Result<PropertySpec, AnalysisError> {
        let allowed: BTreeSet<_> = allowed.into_iter().collect();
        if allowed.is_empty() {
            return Err(AnalysisError::EmptyAllowedSet);
        }
        Ok(PropertySpec { allowed })
    }

    pub fn allows(&self, kind: PairRelation) -> bool {
        self.allowed.contains(&kind)
    }

    pub fn allowed(&self) -> &BTreeSet<PairRelation> {
        &self.allowed
    }

    pub fn permits_profile(&self, profile: &BTreeSet<PairRelation>) -> bool {
        profile.is_subset(&self.allowed)
    }
}

impl std::fmt::Display for PropertySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for kind in &self.allowed {
            if !first {
                write!(f, " or ")?;
            }
            write!(f, "{kind}")?;
            first = false;
        }
        Ok(())
    }
}

/// The separator multiset of the subgraph induced by `subset`, expressed in
/// the subgraph's own labels. Induced subgraphs of chordal graphs stay
/// chordal, so this cannot fail for chordal hosts.
pub(crate) fn subset_family(g: &Graph, subset: &VertexSet) -> SeparatorFamily {
    let sub = g.induced_subgraph(subset).expect("subset vertices in range");
    separator_family(&sub, 0).expect("induced subgraph of a chordal graph is chordal")
}

/// The relation kinds realized by any induced subgraph of `g` (including `g`
/// itself and disconnected subgraphs).
pub fn hereditary_relation_profile(g: &Graph) -> Result<BTreeSet<PairRelation>, ChordalError> {
    hereditary_relation_profile_with(g, classify_pair)
}

pub fn hereditary_relation_profile_with(
    g: &Graph,
    classifier: PairClassifier,
) -> Result<BTreeSet<PairRelation>, ChordalError> {
    if !is_chordal(g) {
        return Err(ChordalError::NotChordal);
    }
    let n = g.n();
    assert!(n <= 16, "hereditary scans enumerate all 2^n induced subgraphs");
    let mut kinds = BTreeSet::new();
    for mask in 1u64..1 << n {
        let subset = VertexSet::from_mask(mask);
        if subset.len() < 3 {
            continue;
        }
        let family = subset_family(g, &subset);
        kinds.extend(relation_profile_with(&family, classifier));
        if kinds.len() == PairRelation::ALL.len() {
            break;
        }
    }
    Ok(kinds)
}

/// Whether every induced subgraph's separator pairs realize only allowed
/// kinds. On failure also returns the violating vertex subset of minimal
/// size (ties broken by lexicographic subset order).
pub fn hereditary_property_holds(
    g: &Graph,
    spec: &PropertySpec,
) -> Result<(bool, Option<VertexSet>), ChordalError> {
    if !is_chordal(g) {
        return Err(ChordalError::NotChordal);
    }
    let n = g.n();
    assert!(n <= 16, "hereditary scans enumerate all 2^n induced subgraphs");
    let mut subsets: Vec<VertexSet> = (1u64..1 << n).map(VertexSet::from_mask).collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    for subset in subsets {
        if subset.len() < 3 {
            continue;
        }
        let family = subset_family(g, &subset);
        let profile = relation_profile(&family);
        if !spec.permits_profile(&profile) {
            return Ok((false, Some(subset)));
        }
    }
    Ok((true, None))
}
