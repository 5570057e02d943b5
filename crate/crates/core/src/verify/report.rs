use serde::{Deserialize, Serialize};

use super::{registry, ClaimResult, CorpusConfig, Verdict};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub verified: usize,
    pub counterexample: usize,
    pub skipped_budget: usize,
    pub not_applicable: usize,
    /// Counterexamples among must-hold claims.
    pub must_hold_failures: usize,
}

impl Summary {
    fn add(&mut self, result: &ClaimResult) {
        match result.verdict {
            Verdict::Verified => self.verified += 1,
            Verdict::Counterexample => {
                self.counterexample += 1;
                if result.must_hold {
                    self.must_hold_failures += 1;
                }
            }
            Verdict::SkippedBudget => self.skipped_budget += 1,
            Verdict::NotApplicable => self.not_applicable += 1,
        }
    }

    pub fn line(&self) -> String {
        format!(
            "verified={} counterexample={} skipped={} not_applicable={}",
            self.verified, self.counterexample, self.skipped_budget, self.not_applicable
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimSummary {
    pub id: String,
    pub statement: String,
    pub must_hold: bool,
    pub counts: Summary,
}

/// Full run output: the configuration (seeds included), totals, per-claim
/// totals, and every result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: CorpusConfig,
    pub summary: Summary,
    pub claims: Vec<ClaimSummary>,
    pub results: Vec<ClaimResult>,
}

impl VerifyReport {
    pub fn new(config: CorpusConfig, results: Vec<ClaimResult>) -> VerifyReport {
        let mut summary = Summary::default();
        let mut claims: Vec<ClaimSummary> = Vec::new();
        for result in &results {
            summary.add(result);
            if claims.last().is_none_or(|c| c.id != result.claim_id) {
                let claim = registry().iter().find(|c| c.id == result.claim_id);
                claims.push(ClaimSummary {
                    id: result.claim_id.clone(),
                    statement: claim.map(|c| c.statement.to_string()).unwrap_or_default(),
                    must_hold: result.must_hold,
                    counts: Summary::default(),
                });
            }
            claims.last_mut().expect("pushed above").counts.add(result);
        }
        VerifyReport {
            config,
            summary,
            claims,
            results,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.must_hold_failures == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record(ClaimResult::CSV_HEADER)
            .expect("in-memory write");
        for result in &self.results {
            writer
                .write_record(result.csv_row())
                .expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }
}
