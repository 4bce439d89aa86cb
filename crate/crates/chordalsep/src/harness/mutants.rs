//! Documented mutants of the catalog, the class table and the pair
//! classifier. Each one encodes a plausible wrong reading of a definition;
//! the suites must flag every one of them on the small corpus, which is the
//! harness's sensitivity check.

use crate::analysis::{classify_pair_literal_overlap, PairClassifier, PairRelation};
use crate::graph::Graph;
use crate::patterns::{class_table, Catalog, ClassId, ClassSpec, PatternName};

use super::suites::{
    compute_profiles_with, verify_helly_theorem_with, verify_theorem6_with, CorpusCache, SuiteResult,
};
use super::Corpus;

/// One documented wrong definition.
pub struct Mutant {
    pub name: &'static str,
    pub description: &'static str,
    pub catalog: Catalog,
    pub table: Vec<ClassSpec>,
    /// `None` means the standard classifier.
    pub classifier: Option<PairClassifier>,
}

fn with_allowed(mut table: Vec<ClassSpec>, id: ClassId, kinds: &[PairRelation]) -> Vec<ClassSpec> {
    for class in &mut table {
        if class.id == id {
            class.allowed = crate::analysis::PropertySpec::new(kinds.iter().copied()).unwrap();
        }
    }
    table
}

/// The fixed documented mutant set.
pub fn documented_mutants() -> Vec<Mutant> {
    let catalog = Catalog::standard();
    let table = class_table();
    vec![
        Mutant {
            name: "butterfly-as-bowtie",
            description: "butterfly misread as the five-vertex pair of triangles sharing one vertex",
            catalog: catalog.with_replaced(
                PatternName::Butterfly,
                Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap(),
            ),
            table: table.clone(),
            classifier: None,
        },
        Mutant {
            name: "overlap-includes-disjoint",
            description: "overlap read literally as incomparability, so disjoint pairs also count as overlapping",
            catalog: catalog.clone(),
            table: table.clone(),
            classifier: Some(classify_pair_literal_overlap),
        },
        Mutant {
            name: "dart-pendant-on-degree-two",
            description: "dart misdrawn with the pendant attached to a degree-two vertex of the diamond",
            catalog: catalog.with_replaced(
                PatternName::Dart,
                Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)]).unwrap(),
            ),
            table: table.clone(),
            classifier: None,
        },
        Mutant {
            name: "hajos-with-chord",
            description: "hajos pattern with an extra chord between two outer vertices",
            catalog: catalog.with_replaced(
                PatternName::Hajos,
                Graph::from_edges(
                    6,
                    &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (2, 4), (1, 5), (2, 5), (3, 4)],
                )
                .unwrap(),
            ),
            table: table.clone(),
            classifier: None,
        },
        Mutant {
            name: "class-iii-forbids-equality",
            description: "strictly chordal allowed-set shrunk to disjunction only",
            catalog: catalog.clone(),
            table: with_allowed(table.clone(), ClassId::III, &[PairRelation::Disjoint]),
            classifier: None,
        },
        Mutant {
            name: "class-v-allows-containment",
            description: "dart-free allowed-set widened to all four relation kinds",
            catalog: catalog.clone(),
            table: with_allowed(
                table,
                ClassId::V,
                &[
                    PairRelation::Disjoint,
                    PairRelation::Equal,
                    PairRelation::ProperContainment,
                    PairRelation::Overlap,
                ],
            ),
            classifier: None,
        },
    ]
}

/// Runs the class and Helly suites under the mutant's definitions and
/// returns the failing suite results (empty means the mutant went
/// undetected).
pub fn mutant_failures(mutant: &Mutant, corpus: &Corpus, cache: &CorpusCache) -> Vec<SuiteResult> {
    let recomputed;
    let profiles = match mutant.classifier {
        Some(classifier) => {
            recomputed = compute_profiles_with(corpus, classifier);
            &recomputed
        }
        None => &cache.profiles,
    };
    let mut results = verify_theorem6_with(corpus, &mutant.catalog, &mutant.table, profiles);
    results.push(verify_helly_theorem_with(corpus, &mutant.catalog, cache));
    results.retain(|r| !r.passed());
    results
}
