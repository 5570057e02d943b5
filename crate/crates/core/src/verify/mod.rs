//! Claim registry: every stated result is run over a corpus and compared
//! against the enumeration engine, producing one [`ClaimResult`] per
//! instance.

mod claims;
pub mod corpus;
pub mod oracle;
mod report;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{chromatic_number, Coloring};
use crate::graph::{parse_graph6, Graph, ParseError};
use crate::indices::{
    chromatic_index, classical_indices, extrema_set, Budget, ExtremaOptions, ExtremaSet,
    ZagrebIndex,
};
use crate::stability::StabilityBudget;

pub use claims::{registry, Claim};
pub use report::{ClaimSummary, Summary, VerifyReport};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error("claim range {0:?} is reversed")]
    ReversedRange(String),
    #[error("result has no graph to check against")]
    MissingGraph,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("witness does not fit the graph: {0}")]
    Witness(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Verified,
    Counterexample,
    SkippedBudget,
    /// The claim's hypothesis does not hold for the instance.
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::Counterexample => "counterexample",
            Verdict::SkippedBudget => "skipped_budget",
            Verdict::NotApplicable => "not_applicable",
        }
    }
}

/// Evidence attached to a counterexample, checkable against the result's
/// graph6 string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A minimum coloring whose index value is `value`.
    Coloring {
        index: ZagrebIndex,
        value: u64,
        colors: Coloring,
    },
    /// Adding `edges` to the graph gives chromatic number `chi`.
    Edges {
        edges: Vec<(usize, usize)>,
        chi: u32,
    },
    /// The classical index of the graph equals `value`.
    Classical { index: ZagrebIndex, value: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub must_hold: bool,
    pub instance: String,
    /// The graph the witness refers to.
    pub graph6: Option<String>,
    pub expected: String,
    pub actual: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl ClaimResult {
    pub const CSV_HEADER: [&'static str; 8] = [
        "claim_id",
        "must_hold",
        "instance",
        "graph6",
        "expected",
        "actual",
        "verdict",
        "witness",
    ];

    pub fn csv_row(&self) -> Vec<String> {
        vec![
            self.claim_id.clone(),
            self.must_hold.to_string(),
            self.instance.clone(),
            self.graph6.clone().unwrap_or_default(),
            self.expected.clone(),
            self.actual.clone(),
            self.verdict.as_str().to_string(),
            self.witness
                .as_ref()
                .map(|w| serde_json::to_string(w).expect("witness serializes"))
                .unwrap_or_default(),
        ]
    }

    /// Re-evaluates the witness on the recorded graph through the public
    /// coloring and index API. `Ok(true)` when there is no witness.
    pub fn recheck_witness(&self) -> Result<bool, VerifyError> {
        let Some(witness) = &self.witness else {
            return Ok(true);
        };
        let g = parse_graph6(self.graph6.as_deref().ok_or(VerifyError::MissingGraph)?)?;
        match witness {
            Witness::Coloring {
                index,
                value,
                colors,
            } => {
                let evaluated = chromatic_index(&g, colors, *index)
                    .map_err(|e| VerifyError::Witness(e.to_string()))?;
                Ok(evaluated == *value && colors.palette_size() == chromatic_number(&g))
            }
            Witness::Edges { edges, chi } => {
                let h = g
                    .with_edges(edges)
                    .map_err(|e| VerifyError::Witness(e.to_string()))?;
                Ok(chromatic_number(&h) == *chi)
            }
            Witness::Classical { index, value } => {
                Ok(classical_indices(&g)[usize::from(index.number()) - 1] == *value)
            }
        }
    }
}

/// Per-claim limits. Order limits are further capped by
/// [`CorpusConfig::max_order`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimBudgets {
    pub complete_max_order: usize,
    pub tree_max_order: usize,
    pub oracle_max_order: usize,
    pub monotone_max_order: usize,
    pub thorn_max_order: usize,
    pub bipartite_max_order: usize,
    pub rho_max_order: usize,
    /// Multipartite instances are bounded by shape, not order.
    pub multipartite_max_parts: usize,
    pub multipartite_max_part_size: usize,
    pub extrema: Budget,
    pub stability: StabilityBudget,
}

impl Default for ClaimBudgets {
    fn default() -> Self {
        ClaimBudgets {
            complete_max_order: 8,
            tree_max_order: 10,
            oracle_max_order: 7,
            monotone_max_order: 8,
            thorn_max_order: 9,
            bipartite_max_order: 8,
            rho_max_order: 7,
            multipartite_max_parts: 4,
            multipartite_max_part_size: 3,
            extrema: Budget::default(),
            stability: StabilityBudget::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusConfig {
    pub max_order: usize,
    pub seeds: Vec<u64>,
    /// Family kinds from [`corpus::FAMILY_KINDS`].
    pub families: Vec<String>,
    /// Random trees per seed.
    pub random_trees: usize,
    /// Random connected graphs per seed and corpus.
    pub random_connected: usize,
    pub budgets: ClaimBudgets,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_order: 8,
            seeds: vec![0],
            families: corpus::FAMILY_KINDS.iter().map(|s| s.to_string()).collect(),
            random_trees: 100,
            random_connected: 200,
            budgets: ClaimBudgets::default(),
        }
    }
}

impl CorpusConfig {
    /// A claim's order limit after applying the global cap.
    pub fn limit(&self, claim_limit: usize) -> usize {
        claim_limit.min(self.max_order)
    }
}

/// Shared state for one run: the configuration and a cache of extrema
/// under the default options, keyed by graph6.
pub struct Context<'a> {
    pub config: &'a CorpusConfig,
    cache: Mutex<HashMap<String, Arc<ExtremaSet>>>,
}

impl<'a> Context<'a> {
    pub fn new(config: &'a CorpusConfig) -> Self {
        Context {
            config,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// Extrema over all minimum colorings, paper-compat off.
    pub fn extrema(&self, g: &Graph) -> Arc<ExtremaSet> {
        let key = crate::graph::to_graph6(g);
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
            return Arc::clone(hit);
        }
        let options = ExtremaOptions {
            budget: self.config.budgets.extrema,
            ..Default::default()
        };
        let set = Arc::new(extrema_set(g, &options));
        self.cache
            .lock()
            .expect("cache lock")
            .entry(key)
            .or_insert(set)
            .clone()
    }
}

/// Resolves a comma-separated selection: `all`, exact ids, group prefixes
/// (`lem-3.2` selects `lem-3.2-i`, `lem-3.2-ii-max`, ...) and inclusive
/// ranges `a..b` in registry order. The result keeps registry order.
pub fn select_claims(selection: &str) -> Result<Vec<&'static Claim>, VerifyError> {
    let all = registry();
    let position = |id: &str| all.iter().position(|c| c.id == id);
    let mut chosen = vec![false; all.len()];
    for token in selection
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
    {
        if token == "all" {
            chosen.iter_mut().for_each(|c| *c = true);
        } else if let Some((from, to)) = token.split_once("..") {
            let a = position(from).ok_or_else(|| VerifyError::UnknownClaim(from.to_string()))?;
            let b = position(to).ok_or_else(|| VerifyError::UnknownClaim(to.to_string()))?;
            if a > b {
                return Err(VerifyError::ReversedRange(token.to_string()));
            }
            chosen[a..=b].iter_mut().for_each(|c| *c = true);
        } else {
            let group = format!("{token}-");
            let mut matched = false;
            for (i, claim) in all.iter().enumerate() {
                if claim.id == token || claim.id.starts_with(&group) {
                    chosen[i] = true;
                    matched = true;
                }
            }
            if !matched {
                return Err(VerifyError::UnknownClaim(token.to_string()));
            }
        }
    }
    Ok(all
        .iter()
        .zip(chosen)
        .filter_map(|(claim, keep)| keep.then_some(claim))
        .collect())
}

/// Runs the claims in parallel; results are ordered by claim (registry
/// order) and then by instance generation order.
pub fn run_claims(config: &CorpusConfig, claims: &[&Claim]) -> Vec<ClaimResult> {
    let ctx = Context::new(config);
    claims
        .par_iter()
        .map(|claim| claim.run(&ctx))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}
