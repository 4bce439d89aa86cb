//! Rendering of suite results as a plain-text table and as deterministic
//! JSON.

use serde::Serialize;

use super::suites::SuiteResult;

#[derive(Serialize)]
struct ReportRow<'a> {
    claim: &'a str,
    statement: &'a str,
    graphs_tested: usize,
    exercised: usize,
    verdict: &'static str,
    failures: &'a [super::suites::FailureRecord],
}

/// One row per claim. JSON output deliberately excludes timing so that
/// identical corpora and seeds yield byte-identical reports.
pub fn render_json(results: &[SuiteResult]) -> String {
    let rows: Vec<ReportRow> = results
        .iter()
        .map(|r| ReportRow {
            claim: &r.claim,
            statement: &r.statement,
            graphs_tested: r.graphs_tested,
            exercised: r.exercised,
            verdict: r.verdict(),
            failures: &r.failures,
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&rows).expect("report rows serialize");
    out.push('\n');
    out
}

/// Plain-text summary with one row per claim, a failure listing, and timing.
pub fn render_text(results: &[SuiteResult]) -> String {
    let mut out = String::new();
    let claim_width = results.iter().map(|r| r.claim.len()).max().unwrap_or(5).max(5);
    for r in results {
        out.push_str(&format!(
            "{:<claim_width$}  {:>7}  graphs {:>5}  exercised {:>5}  {:>6.1?}\n",
            r.claim,
            r.verdict(),
            r.graphs_tested,
            r.exercised,
            r.elapsed,
        ));
        for f in &r.failures {
            out.push_str(&format!("    failure {}: {}\n", f.graph6, f.detail));
        }
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    out.push_str(&format!(
        "{} suites, {} failed{}\n",
        results.len(),
        failed,
        if results.iter().any(|r| r.verdict() == "vacuous") {
            " (some vacuous)"
        } else {
            ""
        }
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::Duration;

    fn fake_result(claim: &str, failures: Vec<super::super::suites::FailureRecord>) -> SuiteResult {
        SuiteResult {
            claim: claim.into(),
            statement: "statement".into(),
            graphs_tested: 3,
            exercised: 2,
            failures,
            elapsed: Duration::from_millis(5),
        }
    }

    #[test]
    fn json_omits_timing_and_is_deterministic() {
        let results = vec![fake_result("a.b", Vec::new())];
        let one = render_json(&results);
        let two = render_json(&results);
        assert_eq!(one, two);
        assert!(!one.contains("elapsed"));
        assert!(one.contains("\"verdict\": \"pass\""));
    }

    #[test]
    fn text_lists_failures() {
        let failure = super::super::suites::FailureRecord {
            graph6: "C~".into(),
            detail: "boom".into(),
        };
        let text = render_text(&vec![fake_result("x.y", vec![failure])]);
        assert!(text.contains("fail"));
        assert!(text.contains("C~: boom"));
        assert!(text.contains("1 failed"));
    }
}
