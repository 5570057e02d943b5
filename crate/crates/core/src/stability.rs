//! Chromatic stability and the χ-stability number ϱ.
//!
//! A graph is chromatically stable when *some* non-edge can be added without
//! raising χ. Complete graphs have no non-edges; they are reported as
//! perfectly stable and not stable.

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{chromatic_number, is_k_colorable};
use crate::graph::Graph;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum StabilityError {
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is complete bipartite, hence unstable")]
    CompleteBipartite,
    #[error("graph is chromatically unstable")]
    Unstable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    BruteForce,
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityBudget {
    /// Largest order searched for ϱ by brute force.
    pub max_order: usize,
    /// Largest number of non-edge subsets examined.
    pub max_subsets: u64,
}

impl Default for StabilityBudget {
    fn default() -> Self {
        StabilityBudget {
            max_order: 9,
            max_subsets: 2_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub order: usize,
    pub size: usize,
    pub connected: bool,
    pub chi: u32,
    pub stable: bool,
    pub perfectly_stable: bool,
    pub rho: Option<u64>,
    /// Edges whose addition attains ϱ, when found by search.
    pub rho_edges: Option<Vec<(usize, usize)>>,
    pub method: Method,
    pub budget_exhausted: bool,
}

impl StabilityReport {
    pub fn verdict_line(&self) -> String {
        let verdict = if self.perfectly_stable {
            "perfectly stable (complete graph)".to_string()
        } else if self.stable {
            "stable".to_string()
        } else {
            "unstable".to_string()
        };
        let rho = match (self.rho, self.budget_exhausted) {
            (Some(rho), _) => format!(", rho={rho}"),
            (None, true) => ", rho=unknown (budget exceeded)".to_string(),
            (None, false) => String::new(),
        };
        let connected = if self.connected { "" } else { ", disconnected" };
        format!("chi={} {verdict}{rho}{connected}", self.chi)
    }
}

/// True iff `g` is connected, bipartite, and every cross pair is an edge.
pub fn is_complete_bipartite(g: &Graph) -> bool {
    if g.order() < 2 || !g.is_connected() {
        return false;
    }
    match g.bipartition() {
        Some(sides) => {
            let a = sides.iter().filter(|&&s| s == 0).count();
            g.size() == a * (g.order() - a)
        }
        None => false,
    }
}

/// First non-edge (lexicographic) whose addition keeps χ, by checking every
/// non-edge directly.
pub fn stable_witness(g: &Graph) -> Option<(usize, usize)> {
    let chi = chromatic_number(g);
    g.non_edges().into_iter().find(|&e| {
        let h = g.with_edges(&[e]).expect("non-edge");
        is_k_colorable(&h, chi)
    })
}

/// Stability by definition: some non-edge addition preserves χ.
pub fn stable_by_definition(g: &Graph) -> bool {
    stable_witness(g).is_some()
}

/// Stability with a shortcut for connected bipartite graphs: adding a
/// cross-side edge keeps the bipartition, adding a same-side edge closes an
/// odd cycle, so the graph is stable iff a cross pair is missing.
pub fn is_chromatically_stable(g: &Graph) -> bool {
    if g.size() > 0 && g.is_connected() && g.bipartition().is_some() {
        return !is_complete_bipartite(g);
    }
    stable_by_definition(g)
}

fn is_unstable_target(g: &Graph) -> bool {
    !g.is_complete() && !stable_by_definition(g)
}

/// `θ(c₁)·θ(c₂) − ε` for a connected, bipartite, not complete bipartite
/// graph; the side sizes come from its unique bipartition.
pub fn stability_number_bipartite(g: &Graph) -> Result<u64, StabilityError> {
    if !g.is_connected() {
        return Err(StabilityError::Disconnected);
    }
    let sides = g.bipartition().ok_or(StabilityError::NotBipartite)?;
    if g.order() < 2 {
        return Err(StabilityError::NotBipartite);
    }
    if is_complete_bipartite(g) {
        return Err(StabilityError::CompleteBipartite);
    }
    let a = sides.iter().filter(|&&s| s == 0).count() as u64;
    let b = g.order() as u64 - a;
    Ok(a * b - g.size() as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum RhoOutcome {
    Found {
        rho: u64,
        edges: Vec<(usize, usize)>,
    },
    BudgetExceeded,
}

/// Smallest `k` such that adding some `k` non-edges leaves a chromatically
/// unstable, non-complete graph; subsets are tried by increasing size and
/// lexicographically within a size.
pub fn stability_number_bruteforce(
    g: &Graph,
    budget: &StabilityBudget,
) -> Result<RhoOutcome, StabilityError> {
    rho_search(g, budget, false)
}

/// As [`stability_number_bruteforce`], but only additions that keep χ
/// unchanged count.
pub fn stability_number_chi_preserving(
    g: &Graph,
    budget: &StabilityBudget,
) -> Result<RhoOutcome, StabilityError> {
    rho_search(g, budget, true)
}

fn rho_search(
    g: &Graph,
    budget: &StabilityBudget,
    keep_chi: bool,
) -> Result<RhoOutcome, StabilityError> {
    if !stable_by_definition(g) {
        return Err(StabilityError::Unstable);
    }
    if g.order() > budget.max_order {
        return Ok(RhoOutcome::BudgetExceeded);
    }
    let chi = chromatic_number(g);
    let candidates = g.non_edges();
    let mut examined = 0u64;
    for k in 1..=candidates.len() {
        for subset in candidates.iter().copied().combinations(k) {
            examined += 1;
            if examined > budget.max_subsets {
                return Ok(RhoOutcome::BudgetExceeded);
            }
            let h = g.with_edges(&subset).expect("non-edges");
            if keep_chi && !is_k_colorable(&h, chi) {
                continue;
            }
            if is_unstable_target(&h) {
                return Ok(RhoOutcome::Found {
                    rho: k as u64,
                    edges: subset,
                });
            }
        }
    }
    // Adding every non-edge gives a complete graph, which is excluded, so a
    // stable graph always reaches an unstable one before that. With χ held
    // fixed the complete ℓ-partite supergraph of a stable graph is reached.
    unreachable!("a stable graph has a finite stability number")
}

/// Stability verdict and ϱ, using the bipartite closed form where it applies
/// and search otherwise.
pub fn stability_report(g: &Graph, budget: &StabilityBudget) -> StabilityReport {
    let chi = chromatic_number(g);
    let mut report = StabilityReport {
        order: g.order(),
        size: g.size(),
        connected: g.is_connected(),
        chi,
        stable: false,
        perfectly_stable: g.is_complete(),
        rho: None,
        rho_edges: None,
        method: Method::NotApplicable,
        budget_exhausted: false,
    };
    if report.perfectly_stable {
        return report;
    }
    report.stable = is_chromatically_stable(g);
    if !report.stable {
        return report;
    }
    if let Ok(rho) = stability_number_bipartite(g) {
        report.rho = Some(rho);
        report.method = Method::ClosedForm;
        return report;
    }
    report.method = Method::BruteForce;
    match stability_number_bruteforce(g, budget) {
        Ok(RhoOutcome::Found { rho, edges }) => {
            report.rho = Some(rho);
            report.rho_edges = Some(edges);
        }
        Ok(RhoOutcome::BudgetExceeded) => report.budget_exhausted = true,
        Err(_) => unreachable!("stability was established above"),
    }
    report
}
