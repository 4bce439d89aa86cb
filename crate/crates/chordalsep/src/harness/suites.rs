//! Per-claim verification suites over small-graph corpora.
//!
//! Every suite compares two independently computed sides of one claim on
//! every corpus graph and records each mismatch with the offending graph6
//! string, so a report line is reproducible in isolation.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::analysis::{
    classify_pair, family_is_witness, helly_check_bruteforce, helly_check_triples,
    hereditary_relation_profile_with, leaf_separators, subset_family, PairClassifier, PairRelation,
};
use crate::chordal::{
    build_clique_forest, build_clique_tree, is_chordal, is_chordal_bruteforce,
    minimal_separators_direct, separator_multiset,
};
use crate::graph::{to_graph6, Graph, VertexSet};
use crate::patterns::{contains_induced, remark_implications_check, Catalog, ClassSpec, PatternName};

use super::Corpus;

/// One graph on which a suite's two sides disagreed.
#[derive(Debug, Clone, Serialize)]
pub struct FailureRecord {
    pub graph6: String,
    pub detail: String,
}

/// Outcome of one claim's suite run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    /// Short claim identifier, e.g. "thm6.iii".
    pub claim: String,
    /// Human-readable statement of the claim under test.
    pub statement: String,
    /// Number of graphs the suite evaluated.
    pub graphs_tested: usize,
    /// Number of graphs that nontrivially exercised the claim.
    pub exercised: usize,
    pub failures: Vec<FailureRecord>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// "pass", "fail", or "vacuous" when no graph was tested.
    pub fn verdict(&self) -> &'static str {
        if !self.failures.is_empty() {
            "fail"
        } else if self.graphs_tested == 0 {
            "vacuous"
        } else {
            "pass"
        }
    }
}

fn g6(g: &Graph) -> String {
    to_graph6(g).expect("corpus graphs fit graph6")
}

fn is_clique(g: &Graph, s: &VertexSet) -> bool {
    let verts = s.as_slice();
    verts
        .iter()
        .enumerate()
        .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.adjacent(u, v)))
}

/// Shared per-corpus computations reused across suites and mutants.
pub struct CorpusCache {
    /// Relation kinds realized by each graph over all its induced subgraphs.
    pub profiles: Vec<BTreeSet<PairRelation>>,
    /// Whether every induced subgraph's family satisfies the Helly property.
    helly_ok: Vec<bool>,
    /// For Helly violators, a short description of the first violation.
    helly_detail: Vec<Option<String>>,
    /// Fast-vs-brute-force Helly checker disagreements (should never occur).
    checker_disagreements: Vec<Option<String>>,
}

impl CorpusCache {
    pub fn compute(corpus: &Corpus) -> CorpusCache {
        let profiles = compute_profiles_with(corpus, classify_pair);
        let mut helly_ok = Vec::with_capacity(corpus.len());
        let mut helly_detail = Vec::with_capacity(corpus.len());
        let mut checker_disagreements = Vec::with_capacity(corpus.len());
        for g in &corpus.graphs {
            let n = g.n();
            let mut ok = true;
            let mut detail = None;
            let mut disagreement = None;
            let mut subsets: Vec<VertexSet> = (1u64..1 << n).map(VertexSet::from_mask).collect();
            subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            for subset in subsets {
                if subset.len() < 4 {
                    continue;
                }
                let family = subset_family(g, &subset);
                let fast = helly_check_triples(&family);
                let slow = helly_check_bruteforce(&family);
                if fast.holds != slow.holds && disagreement.is_none() {
                    disagreement = Some(format!(
                        "triple-based and brute-force Helly checks disagree on the family of subset {subset}"
                    ));
                }
                if !slow.holds && ok {
                    ok = false;
                    detail = Some(format!(
                        "family of induced subgraph {subset} violates Helly (witness indices {:?})",
                        slow.witness.clone().unwrap_or_default()
                    ));
                }
            }
            helly_ok.push(ok);
            helly_detail.push(detail);
            checker_disagreements.push(disagreement);
        }
        CorpusCache {
            profiles,
            helly_ok,
            helly_detail,
            checker_disagreements,
        }
    }
}

pub(crate) fn compute_profiles_with(corpus: &Corpus, classifier: PairClassifier) -> Vec<BTreeSet<PairRelation>> {
    corpus
        .graphs
        .iter()
        .map(|g| {
            hereditary_relation_profile_with(g, classifier)
                .expect("corpus graphs for relation suites are chordal")
        })
        .collect()
}

/// Chordality recognition agreement suite.
pub fn verify_recognition(corpus: &Corpus) -> SuiteResult {
    let start = Instant::now();
    let mut failures = Vec::new();
    for g in &corpus.graphs {
        let fast = is_chordal(g);
        let slow = is_chordal_bruteforce(g);
        if fast != slow {
            failures.push(FailureRecord {
                graph6: g6(g),
                detail: format!("MCS recognition says chordal={fast}, induced-cycle oracle says {slow}"),
            });
        }
    }
    SuiteResult {
        claim: "background.recognition".into(),
        statement: "MCS-based chordality recognition agrees with the induced-cycle brute-force oracle".into(),
        graphs_tested: corpus.len(),
        exercised: corpus.len(),
        failures,
        elapsed: start.elapsed(),
    }
}

/// Dirac characterization suite: chordal iff every minimal separator induces
/// a clique.
pub fn verify_dirac(corpus: &Corpus) -> SuiteResult {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut exercised = 0;
    for g in &corpus.graphs {
        let separators = minimal_separators_direct(g);
        if !separators.is_empty() {
            exercised += 1;
        }
        let all_cliques = separators.iter().all(|s| is_clique(g, s));
        let chordal = is_chordal(g);
        if chordal != all_cliques {
            let offender = separators.iter().find(|s| !is_clique(g, s));
            failures.push(FailureRecord {
                graph6: g6(g),
                detail: format!(
                    "chordal={chordal} but all-separators-cliques={all_cliques} (offending separator {:?})",
                    offender
                ),
            });
        }
    }
    SuiteResult {
        claim: "thm1.dirac".into(),
        statement: "a graph is chordal iff every minimal vertex separator induces a clique".into(),
        graphs_tested: corpus.len(),
        exercised,
        failures,
        elapsed: start.elapsed(),
    }
}

/// Clique-tree labels versus directly enumerated separators, as sets.
pub fn verify_separating_pairs(corpus: &Corpus) -> SuiteResult {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut tested = 0;
    let mut exercised = 0;
    for g in &corpus.graphs {
        if !is_chordal(g) {
            continue;
        }
        tested += 1;
        let labels = crate::chordal::separator_family(g, 0)
            .expect("graph is chordal")
            .support();
        let direct = minimal_separators_direct(g);
        if !direct.is_empty() {
            exercised += 1;
        }
        if labels != direct {
            failures.push(FailureRecord {
                graph6: g6(g),
                detail: format!("clique-tree labels {labels:?} != direct separators {direct:?}"),
            });
        }
    }
    SuiteResult {
        claim: "thm2.separating-pairs".into(),
        statement: "for chordal graphs, deduplicated clique-tree labels equal the directly enumerated minimal separators".into(),
        graphs_tested: tested,
        exercised,
        failures,
        elapsed: start.elapsed(),
    }
}

/// Separator-multiset invariance across tie-break seeds, including validity
/// of every generated tree.
pub fn verify_multiset_invariance(corpus: &Corpus, seeds: &[u64]) -> SuiteResult {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut tested = 0;
    let mut exercised = 0;
    for g in &corpus.graphs {
        if !is_chordal(g) {
            continue;
        }
        tested += 1;
        let mut reference = None;
        'seeds: for &seed in seeds {
            let forest = build_clique_forest(g, seed).expect("graph is chordal");
            if let Err(msg) = forest.validate(g) {
                failures.push(FailureRecord {
                    graph6: g6(g),
                    detail: format!("seed {seed} produced an invalid clique tree: {msg}"),
                });
                break 'seeds;
            }
            let family = separator_multiset(&forest);
            match &reference {
                None => {
                    if !family.is_empty() {
                        exercised += 1;
                    }
                    reference = Some(family);
                }
                Some(expected) => {
                    if &family != expected {
                        failures.push(FailureRecord {
                            graph6: g6(g),
                            detail: format!(
                                "seed {seed} produced multiset {:?} instead of {:?}",
                                family.as_slice(),
                                expected.as_slice()
                            ),
                        });
                        break 'seeds;
                    }
                }
            }
        }
    }
    SuiteResult {
        claim: "thm4.invariance".into(),
        statement: "the normalized separator multiset is the same for every clique tree, across all tie-break seeds".into(),
        graphs_tested: tested,
        exercised,
        failures,
        elapsed: start.elapsed(),
    }
}

/// Background suites bundled: recognition, Dirac, separating pairs and
/// multiset invariance, in that order.
pub fn verify_background(corpus: &Corpus, seeds: &[u64]) -> Vec<SuiteResult> {
    vec![
        verify_recognition(corpus),
        verify_dirac(corpus),
        verify_separating_pairs(corpus),
        verify_multiset_invariance(corpus, seeds),
    ]
}

/// Separator heredity suite: removing a nonempty proper part of a minimal
/// separator leaves the remainder a minimal separator of the reduced graph.
pub fn verify_lemma1(corpus: &Corpus) -> SuiteResult {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut exercised = 0;
    for g in &corpus.graphs {
        let separators = minimal_separators_direct(g);
        let mut graph_exercised = false;
        'outer: for s in &separators {
            if s.len() < 2 {
                continue;
            }
            graph_exercised = true;
            let members: Vec<usize> = s.iter().copied().collect();
            for r_mask in 1u64..(1 << members.len()) - 1 {
                let removed: VertexSet = members
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| r_mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                let expected = s.difference(&removed);
                let (reduced, keep) = g.delete_vertices(&removed);
                let reduced_separators: Vec<VertexSet> = minimal_separators_direct(&reduced)
                    .iter()
                    .map(|t| t.relabel(&keep))
                    .collect();
                if !reduced_separators.contains(&expected) {
                    failures.push(FailureRecord {
                        graph6: g6(g),
                        detail: format!(
                            "S = {s}, R = {removed}: {expected} is not a minimal separator of G - R"
                        ),
                    });
                    break 'outer;
                }
            }
        }
        if graph_exercised {
            exercised += 1;
        }
    }
    SuiteResult {
        claim: "lemma1.heredity".into(),
        statement: "for every minimal separator S and nonempty proper R within S, S - R is a minimal separator of G - R".into(),
        graphs_tested: corpus.len(),
        exercised,
        failures,
        elapsed: start.elapsed(),
    }
}

fn equivalence_suite(
    claim: &str,
    statement: &str,
    corpus: &Corpus,
    catalog: &Catalog,
    forbidden: &[PatternName],
    relation_member: impl Fn(usize) -> bool,
    exercised_at: impl Fn(usize) -> bool,
    diagnostics: impl Fn(usize) -> String,
) -> SuiteResult {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut exercised = 0;
    for (idx, g) in corpus.graphs.iter().enumerate() {
        if exercised_at(idx) {
            exercised += 1;
        }
        let pattern_side = forbidden
            .iter()
            .all(|&name| contains_induced(g, catalog.get(name)).is_none());
        let relation_side = relation_member(idx);
        if pattern_side != relation_side {
            let found: Vec<String> = forbidden
                .iter()
                .filter_map(|&name| {
                    contains_induced(g, catalog.get(name)).map(|occ| format!("{name} at {occ}"))
                })
                .collect();
            failures.push(FailureRecord {
                graph6: g6(&corpus.graphs[idx]),
                detail: format!(
                    "pattern side says member={pattern_side} (occurrences: {}), relation side says member={relation_side} ({})",
                    if found.is_empty() { "none".into() } else { found.join(", ") },
                    diagnostics(idx),
                ),
            });
        }
    }
    SuiteResult {
        claim: claim.into(),
        statement: statement.into(),
        graphs_tested: corpus.len(),
        exercised,
        failures,
        elapsed: start.elapsed(),
    }
}

/// The six class equivalences, pattern side versus hereditary relation side.
pub fn verify_theorem6(corpus: &Corpus) -> Vec<SuiteResult> {
    let cache = CorpusCache::compute(corpus);
    verify_theorem6_with(
        corpus,
        &Catalog::standard(),
        &crate::patterns::class_table(),
        &cache.profiles,
    )
}

pub fn verify_theorem6_with(
    corpus: &Corpus,
    catalog: &Catalog,
    table: &[ClassSpec],
    profiles: &[BTreeSet<PairRelation>],
) -> Vec<SuiteResult> {
    table
        .iter()
        .map(|class| {
            let statement = format!(
                "hereditarily every separator pair is {} iff the graph is ({})-free",
                class.allowed,
                class
                    .forbidden
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            equivalence_suite(
                &format!("thm6.{}", class.id),
                &statement,
                corpus,
                catalog,
                &class.forbidden,
                |idx| class.allowed.permits_profile(&profiles[idx]),
                |idx| !profiles[idx].is_empty(),
                |idx| format!("hereditary profile {:?}", profiles[idx]),
            )
        })
        .collect()
}

/// The four single-relation lemma equivalences: forbidding one relation kind
/// hereditarily corresponds to one short forbidden-pattern list.
pub fn verify_lemma_equivalences(corpus: &Corpus) -> Vec<SuiteResult> {
    let cache = CorpusCache::compute(corpus);
    verify_lemma_equivalences_with(corpus, &Catalog::standard(), &cache.profiles)
}

pub fn verify_lemma_equivalences_with(
    corpus: &Corpus,
    catalog: &Catalog,
    profiles: &[BTreeSet<PairRelation>],
) -> Vec<SuiteResult> {
    let lemmas: [(&str, &str, Vec<PatternName>, PairRelation); 4] = [
        (
            "lemma2.disjunction",
            "no induced subgraph realizes a disjoint separator pair iff the graph is (P4, 2P3)-free",
            vec![PatternName::P4, PatternName::TwoP3],
            PairRelation::Disjoint,
        ),
        (
            "lemma3.equality",
            "no induced subgraph realizes an equal separator pair iff the graph is claw-free",
            vec![PatternName::Claw],
            PairRelation::Equal,
        ),
        (
            "lemma4.containment",
            "no induced subgraph realizes a properly contained separator pair iff the graph is dart-free",
            vec![PatternName::Dart],
            PairRelation::ProperContainment,
        ),
        (
            "lemma5.overlap",
            "no induced subgraph realizes an overlapping separator pair iff the graph is (gem, butterfly)-free",
            vec![PatternName::Gem, PatternName::Butterfly],
            PairRelation::Overlap,
        ),
    ];
    lemmas
        .into_iter()
        .map(|(claim, statement, forbidden, kind)| {
            equivalence_suite(
                claim,
                statement,
                corpus,
                catalog,
                &forbidden,
                |idx| !profiles[idx].contains(&kind),
                |idx| !profiles[idx].is_empty(),
                |idx| format!("hereditary profile {:?}", profiles[idx]),
            )
        })
        .collect()
}

/// Helly equivalence suite: hereditary Helly iff Hajos-free, plus agreement
/// of the two Helly checkers on every family encountered.
pub fn verify_helly_theorem(corpus: &Corpus) -> SuiteResult {
    let cache = CorpusCache::compute(corpus);
    verify_helly_theorem_with(corpus, &Catalog::standard(), &cache)
}

pub fn verify_helly_theorem_with(corpus: &Corpus, catalog: &Catalog, cache: &CorpusCache) -> SuiteResult {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut exercised = 0;
    let hajos = catalog.get(PatternName::Hajos);
    for (idx, g) in corpus.graphs.iter().enumerate() {
        if let Some(disagreement) = &cache.checker_disagreements[idx] {
            failures.push(FailureRecord {
                graph6: g6(g),
                detail: disagreement.clone(),
            });
        }
        // Only graphs large enough to host a three-member family can
        // violate Helly.
        if g.n() >= hajos.graph.n() {
            exercised += 1;
        }
        let pattern_side = contains_induced(g, hajos).is_none();
        let relation_side = cache.helly_ok[idx];
        if pattern_side != relation_side {
            failures.push(FailureRecord {
                graph6: g6(g),
                detail: format!(
                    "hajos-free={pattern_side} but hereditary-Helly={relation_side} ({})",
                    cache.helly_detail[idx].clone().unwrap_or_else(|| "no violation found".into())
                ),
            });
        }
    }
    SuiteResult {
        claim: "thm8.helly".into(),
        statement: "every induced subgraph's separator family satisfies the Helly property iff the graph is hajos-free; both Helly checkers agree on every family encountered".into(),
        graphs_tested: corpus.len(),
        exercised,
        failures,
        elapsed: start.elapsed(),
    }
}

/// Leaf-witness suite: among graphs whose own family violates Helly while
/// every proper induced subgraph's family satisfies it, the leaf edge labels
/// of every generated clique tree form a witness.
pub fn verify_leaf_witness(corpus: &Corpus, seeds: &[u64]) -> SuiteResult {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut qualifying = 0;
    for g in &corpus.graphs {
        if !g.is_connected() || !is_chordal(g) {
            continue;
        }
        let own = crate::chordal::separator_family(g, 0).expect("graph is chordal");
        if helly_check_triples(&own).holds {
            continue;
        }
        let n = g.n();
        let mut minimal = true;
        for mask in 1u64..1 << n {
            let subset = VertexSet::from_mask(mask);
            if subset.len() < 4 || subset.len() == n {
                continue;
            }
            if !helly_check_triples(&subset_family(g, &subset)).holds {
                minimal = false;
                break;
            }
        }
        if !minimal {
            continue;
        }
        qualifying += 1;
        for &seed in seeds {
            let tree = build_clique_tree(g, seed).expect("connected chordal graph");
            let leaves = leaf_separators(&tree).expect("a Helly violator has several cliques");
            if !family_is_witness(&leaves) {
                failures.push(FailureRecord {
                    graph6: g6(g),
                    detail: format!(
                        "seed {seed}: leaf labels {:?} are not a witness",
                        leaves.as_slice()
                    ),
                });
            }
        }
    }
    SuiteResult {
        claim: "lemma7.leaf-witness".into(),
        statement: "for minimal Helly violators, the leaf edge labels of every generated clique tree form a witness".into(),
        graphs_tested: corpus.len(),
        exercised: qualifying,
        failures,
        elapsed: start.elapsed(),
    }
}

/// Data-level closure facts behind the hereditary class table: realized
/// containment forces realized equality, and realized overlap forces
/// realized disjunction. (Realized overlap does not force realized equality;
/// the gem realizes overlap and disjunction only.)
pub fn verify_remark1(corpus: &Corpus) -> SuiteResult {
    let cache = CorpusCache::compute(corpus);
    verify_remark1_with(corpus, &cache.profiles)
}

pub fn verify_remark1_with(corpus: &Corpus, profiles: &[BTreeSet<PairRelation>]) -> SuiteResult {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut exercised = 0;
    for (idx, g) in corpus.graphs.iter().enumerate() {
        let profile = &profiles[idx];
        let containment = profile.contains(&PairRelation::ProperContainment);
        let overlap = profile.contains(&PairRelation::Overlap);
        if containment || overlap {
            exercised += 1;
        }
        if containment && !profile.contains(&PairRelation::Equal) {
            failures.push(FailureRecord {
                graph6: g6(g),
                detail: format!("profile {profile:?} realizes containment without equality"),
            });
        }
        if overlap && !profile.contains(&PairRelation::Disjoint) {
            failures.push(FailureRecord {
                graph6: g6(g),
                detail: format!("profile {profile:?} realizes overlap without disjunction"),
            });
        }
    }
    SuiteResult {
        claim: "remark1.closure".into(),
        statement: "realized containment forces realized equality; realized overlap forces realized disjunction".into(),
        graphs_tested: corpus.len(),
        exercised,
        failures,
        elapsed: start.elapsed(),
    }
}

/// Catalog-level containments justifying the shortened forbidden lists.
pub fn verify_remark2() -> SuiteResult {
    let start = Instant::now();
    let failures = if remark_implications_check() {
        Vec::new()
    } else {
        vec![FailureRecord {
            graph6: String::new(),
            detail: "a catalog containment among {claw<dart, P4<gem, dart<butterfly, 2P3<butterfly} is missing".into(),
        }]
    };
    SuiteResult {
        claim: "remark2.catalog".into(),
        statement: "claw, P4, dart and 2P3 occur induced in dart, gem, butterfly and butterfly respectively".into(),
        graphs_tested: 4,
        exercised: 4,
        failures,
        elapsed: start.elapsed(),
    }
}
