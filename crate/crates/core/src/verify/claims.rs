use std::collections::BTreeMap;

use rayon::prelude::*;

use super::corpus::{
    canonical_key, connected_bipartite_graphs, connected_corpus, monotone_corpus,
    multipartite_sizes, subgraph_pairs, tree_instances, Instance,
};
use super::oracle::{naive_chromatic_number, naive_extrema};
use super::{ClaimResult, Context, Verdict, Witness};
use crate::coloring::{chromatic_number, Semantics};
use crate::families::{
    complete_graph_forms, equal_multipartite_forms, multipartite_forms, thorn_forms, tree_forms,
    Variant,
};
use crate::graph::{to_graph6, Graph};
use crate::indices::{
    chromatic_indices, classical_indices, extrema_set, thorn_inputs, ExtremaOptions, ExtremaSet,
    ExtremaStatus, ThornInputError, ZagrebIndex,
};
use crate::stability::{
    is_complete_bipartite, stability_number_bipartite, stability_number_bruteforce,
    stability_number_chi_preserving, stable_by_definition, stable_witness, RhoOutcome,
};

type Runner = fn(&Context, &Claim) -> Vec<ClaimResult>;

/// One registered statement: an id, a one-line statement, whether a failure
/// fails the run, and the routine that generates and checks its instances.
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub must_hold: bool,
    arg: usize,
    runner: Runner,
}

impl Claim {
    pub fn run(&self, ctx: &Context) -> Vec<ClaimResult> {
        (self.runner)(ctx, self)
    }
}

const fn claim(
    id: &'static str,
    statement: &'static str,
    must_hold: bool,
    arg: usize,
    runner: Runner,
) -> Claim {
    Claim {
        id,
        statement,
        must_hold,
        arg,
        runner,
    }
}

const CM: [&str; 3] = ["cm1", "cm2", "cm3"];
const M: [&str; 3] = ["M1", "M2", "M3"];

/// Small-graph values: family, index slot, min, max, printed classical value.
const OBSERVATIONS: [(&str, usize, u64, u64, u64); 12] = [
    ("path:1", 0, 1, 1, 0),
    ("complete:2", 0, 5, 5, 2),
    ("path:3", 0, 6, 9, 6),
    ("complete:3", 0, 14, 14, 12),
    ("path:1", 1, 0, 0, 0),
    ("complete:2", 1, 2, 2, 2),
    ("path:3", 1, 4, 4, 4),
    ("complete:3", 1, 11, 11, 12),
    ("path:1", 2, 1, 1, 0),
    ("complete:2", 2, 1, 1, 0),
    ("path:3", 2, 2, 2, 2),
    ("complete:3", 2, 4, 4, 0),
];

static REGISTRY: [Claim; 52] = [
    claim("obs-i", "cm1(K1) = 1", true, 0, observation),
    claim("obs-ii", "cm1(K2) = 5", true, 1, observation),
    claim(
        "obs-iii",
        "cm1_min(P3) = 6, cm1_max(P3) = 9",
        true,
        2,
        observation,
    ),
    claim("obs-iv", "cm1(K3) = 14", true, 3, observation),
    claim("obs-v", "cm2(K1) = 0", true, 4, observation),
    claim("obs-vi", "cm2(K2) = 2", true, 5, observation),
    claim("obs-vii", "cm2(P3) = 4", true, 6, observation),
    claim("obs-viii", "cm2(K3) = 11", true, 7, observation),
    claim(
        "obs-ix",
        "cm3(K1) = 1 under the compat default",
        true,
        8,
        observation,
    ),
    claim("obs-x", "cm3(K2) = 1", true, 9, observation),
    claim("obs-xi", "cm3(P3) = 2", true, 10, observation),
    claim("obs-xii", "cm3(K3) = 4", true, 11, observation),
    claim(
        "obs-classical",
        "classical values quoted next to the small-graph observations",
        false,
        0,
        observation_classical,
    ),
    claim(
        "prop-2.1-i",
        "cm1(K_n) < M1(K_n) for n ≥ 4",
        false,
        0,
        complete_vs_classical,
    ),
    claim(
        "prop-2.1-ii",
        "cm2(K_n) < M2(K_n) for n ≥ 4",
        false,
        1,
        complete_vs_classical,
    ),
    claim(
        "prop-2.1-iii",
        "cm3(K_n) > M3(K_n) = 0",
        false,
        2,
        complete_vs_classical,
    ),
    claim(
        "forms-complete",
        "closed forms for K_n agree with enumeration",
        true,
        0,
        complete_forms,
    ),
    claim(
        "thm-2.2-i",
        "cm1(G) < cm1(K_n) for connected non-complete G, n ≥ 4",
        false,
        0,
        below_complete,
    ),
    claim(
        "thm-2.2-ii",
        "cm2(G) < cm2(K_n) for connected non-complete G, n ≥ 4",
        false,
        1,
        below_complete,
    ),
    claim(
        "thm-2.2-iii",
        "cm3(G) < cm3(K_n) for connected non-complete G, n ≥ 4",
        false,
        2,
        below_complete,
    ),
    claim(
        "cor-2.3-i",
        "cm1(G') < cm1(G) for a proper spanning subgraph G'",
        false,
        0,
        subgraph_monotone,
    ),
    claim(
        "cor-2.3-ii",
        "cm2(G') < cm2(G) for a proper spanning subgraph G'",
        false,
        1,
        subgraph_monotone,
    ),
    claim(
        "cor-2.3-iii",
        "cm3(G') < cm3(G) for a proper spanning subgraph G'",
        false,
        2,
        subgraph_monotone,
    ),
    claim(
        "thm-3.1-i",
        "n + 3 ≤ cm1_min(T) ≤ cm1_max(T) ≤ 4n − 3 for trees, n ≥ 4",
        false,
        0,
        trees,
    ),
    claim(
        "thm-3.1-ii",
        "cm2_min(T) = cm2_max(T) = 2(n − 1) for trees",
        false,
        1,
        trees,
    ),
    claim(
        "thm-3.1-iii",
        "cm3_min(T) = cm3_max(T) = n − 1 for trees",
        false,
        2,
        trees,
    ),
    claim(
        "lem-3.2-i",
        "cm1 extrema of complete multipartite graphs",
        false,
        0,
        multipartite,
    ),
    claim(
        "lem-3.2-ii-max",
        "cm2_max of complete multipartite graphs",
        false,
        1,
        multipartite,
    ),
    claim(
        "lem-3.2-ii-printed",
        "cm2_min of complete multipartite graphs, weights (r − i)(r − j)",
        false,
        2,
        multipartite,
    ),
    claim(
        "lem-3.2-ii-corrected",
        "cm2_min of complete multipartite graphs, weights (r + 1 − i)(r + 1 − j)",
        false,
        3,
        multipartite,
    ),
    claim(
        "lem-3.2-iii",
        "cm3_min = cm3_max = Σ n_i n_j (j − i) for complete multipartite graphs",
        false,
        4,
        multipartite,
    ),
    claim(
        "prop-3.3-i",
        "cm1 of r equal parts of size n",
        false,
        0,
        equal_multipartite,
    ),
    claim(
        "prop-3.3-ii",
        "cm2 of r equal parts of size n",
        false,
        1,
        equal_multipartite,
    ),
    claim(
        "prop-3.3-iii-printed",
        "cm3 of r equal parts as n² Σ i(r − 1)",
        false,
        2,
        equal_multipartite,
    ),
    claim(
        "prop-3.3-iii-pairsum",
        "cm3 of r equal parts as n² Σ_{i<j} (j − i)",
        false,
        3,
        equal_multipartite,
    ),
    claim(
        "thm-3.4-i",
        "cm1_min of uniform thorn graphs",
        false,
        0,
        thorn,
    ),
    claim(
        "thm-3.4-ii",
        "cm1_max of uniform thorn graphs",
        false,
        1,
        thorn,
    ),
    claim(
        "thm-3.4-iii",
        "cm2_min of uniform thorn graphs",
        false,
        2,
        thorn,
    ),
    claim(
        "thm-3.4-iv",
        "cm2_max of uniform thorn graphs",
        false,
        3,
        thorn,
    ),
    claim(
        "thm-3.4-v",
        "cm3_min of uniform thorn graphs",
        false,
        4,
        thorn,
    ),
    claim(
        "thm-3.4-vi",
        "cm3_max of uniform thorn graphs",
        false,
        5,
        thorn,
    ),
    claim(
        "thm-4.2-i",
        "cm2_min(G) ≥ 2(n − 1), equality exactly for trees",
        false,
        1,
        tree_minimal,
    ),
    claim(
        "thm-4.2-ii",
        "cm3_min(G) ≥ n − 1, equality exactly for trees",
        false,
        2,
        tree_minimal,
    ),
    claim(
        "thm-4.4",
        "a connected bipartite graph is stable iff it is not complete bipartite",
        false,
        0,
        bipartite_stability,
    ),
    claim(
        "prop-4.6",
        "ϱ(G) = θ(c1)θ(c2) − ε for connected bipartite G",
        false,
        0,
        bipartite_rho,
    ),
    claim(
        "prop-4.6-chi-preserving",
        "ϱ(G) = θ(c1)θ(c2) − ε when only χ-preserving additions are counted",
        false,
        1,
        bipartite_rho,
    ),
    claim(
        "stab-examples-unstable",
        "stars, K_n − e and complete bipartite graphs are unstable; K_n is perfectly stable",
        false,
        0,
        unstable_examples,
    ),
    claim(
        "stab-cycles-unstable",
        "cycles C_n, n ≥ 4, are unstable",
        false,
        0,
        unstable_cycles,
    ),
    claim(
        "oracle-extrema",
        "enumeration extrema equal the naive all-assignments oracle",
        true,
        0,
        oracle_extrema,
    ),
    claim(
        "oracle-chi",
        "chromatic number equals the naive oracle",
        true,
        0,
        oracle_chi,
    ),
    claim(
        "oracle-permutation",
        "permutation-semantics extrema lie within the all-colorings extrema",
        true,
        0,
        oracle_permutation,
    ),
    claim(
        "oracle-reversal",
        "label reversal of the cm1 minimum witness attains the permutation cm1 maximum",
        true,
        0,
        oracle_reversal,
    ),
];

/// Every registered claim, in report order.
pub fn registry() -> &'static [Claim] {
    &REGISTRY
}

fn record(
    claim: &Claim,
    instance: &str,
    g: Option<&Graph>,
    expected: String,
    actual: String,
    verdict: Verdict,
    witness: Option<Witness>,
) -> ClaimResult {
    ClaimResult {
        claim_id: claim.id.to_string(),
        must_hold: claim.must_hold,
        instance: instance.to_string(),
        graph6: g.map(to_graph6),
        expected,
        actual,
        verdict,
        witness,
    }
}

/// Verified when `holds`, otherwise a counterexample carrying `witness()`.
fn judge(
    claim: &Claim,
    instance: &str,
    g: &Graph,
    expected: String,
    actual: String,
    holds: bool,
    witness: impl FnOnce() -> Witness,
) -> ClaimResult {
    if holds {
        record(
            claim,
            instance,
            Some(g),
            expected,
            actual,
            Verdict::Verified,
            None,
        )
    } else {
        let w = witness();
        record(
            claim,
            instance,
            Some(g),
            expected,
            actual,
            Verdict::Counterexample,
            Some(w),
        )
    }
}

fn skipped(claim: &Claim, instance: &str, reason: String) -> ClaimResult {
    record(
        claim,
        instance,
        None,
        claim.statement.to_string(),
        reason,
        Verdict::SkippedBudget,
        None,
    )
}

fn over_order(claim: &Claim, instance: &str, order: usize, limit: usize) -> ClaimResult {
    skipped(
        claim,
        instance,
        format!("order {order} exceeds limit {limit}"),
    )
}

fn over_extrema_budget(claim: &Claim, inst: &Instance) -> ClaimResult {
    skipped(
        claim,
        &inst.descriptor,
        "extrema search exceeded its budget; bounds only".to_string(),
    )
}

fn extremum(set: &ExtremaSet, slot: usize, max: bool) -> Witness {
    let (value, colors) = if max {
        (set.max[slot], set.max_witness[slot].clone())
    } else {
        (set.min[slot], set.min_witness[slot].clone())
    };
    Witness::Coloring {
        index: ZagrebIndex::ALL[slot],
        value,
        colors,
    }
}

fn range(set: &ExtremaSet, slot: usize) -> String {
    format!(
        "{0}_min = {1}, {0}_max = {2}",
        CM[slot], set.min[slot], set.max[slot]
    )
}

/// Witness for an "exactly `value`" check: the first extremum that differs.
fn differing(set: &ExtremaSet, slot: usize, value: u64) -> Witness {
    extremum(set, slot, set.min[slot] == value)
}

fn observation(_ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let (spec, slot, min, max, _) = OBSERVATIONS[claim.arg];
    let inst = Instance::named(spec);
    let set = extrema_set(&inst.graph, &ExtremaOptions::default().with_compat(true));
    let expected = format!("{0}_min = {min}, {0}_max = {max}", CM[slot]);
    let holds = set.min[slot] == min && set.max[slot] == max;
    vec![judge(
        claim,
        spec,
        &inst.graph,
        expected,
        range(&set, slot),
        holds,
        || differing(&set, slot, min),
    )]
}

fn observation_classical(_ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    OBSERVATIONS
        .iter()
        .map(|&(spec, slot, _, _, printed)| {
            let inst = Instance::named(spec);
            let value = classical_indices(&inst.graph)[slot];
            judge(
                claim,
                spec,
                &inst.graph,
                format!("{} = {printed}", M[slot]),
                format!("{} = {value}", M[slot]),
                value == printed,
                || Witness::Classical {
                    index: ZagrebIndex::ALL[slot],
                    value,
                },
            )
        })
        .collect()
}

fn complete_vs_classical(ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let budget = ctx.config.budgets.complete_max_order;
    let limit = ctx.config.limit(budget);
    let slot = claim.arg;
    (4..=budget)
        .map(|n| {
            let name = format!("complete:{n}");
            if n > limit {
                return over_order(claim, &name, n, limit);
            }
            let inst = Instance::named(&name);
            let set = ctx.extrema(&inst.graph);
            let classical = classical_indices(&inst.graph)[slot];
            let forms = complete_graph_forms(n).expect("n ≥ 1");
            let (formula, classical_formula) = match slot {
                0 => (forms.cm1, forms.m1),
                1 => (forms.cm2, forms.m2),
                _ => (forms.cm3, forms.m3),
            };
            let constant = set.min[slot] == formula && set.max[slot] == formula;
            let relation = if slot == 2 {
                set.min[slot] > classical
            } else {
                set.max[slot] < classical
            };
            let symbol = if slot == 2 { ">" } else { "<" };
            judge(
                claim,
                &name,
                &inst.graph,
                format!(
                    "{} = {formula} {symbol} {} = {classical_formula}",
                    CM[slot], M[slot]
                ),
                format!("{}, {} = {classical}", range(&set, slot), M[slot]),
                constant && relation && classical == classical_formula,
                || extremum(&set, slot, slot != 2),
            )
        })
        .collect()
}

fn complete_forms(ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let budget = ctx.config.budgets.complete_max_order;
    let limit = ctx.config.limit(budget);
    (1..=budget)
        .map(|n| {
            let name = format!("complete:{n}");
            if n > limit {
                return over_order(claim, &name, n, limit);
            }
            let inst = Instance::named(&name);
            let set = ctx.extrema(&inst.graph);
            let f = complete_graph_forms(n).expect("n ≥ 1");
            let chromatic = [f.cm1, f.cm2, f.cm3];
            let classical = [f.m1, f.m2, f.m3];
            let engine_classical = classical_indices(&inst.graph);
            let bad_slot =
                (0..3).find(|&i| set.min[i] != chromatic[i] || set.max[i] != chromatic[i]);
            let bad_classical = (0..3).find(|&i| engine_classical[i] != classical[i]);
            judge(
                claim,
                &name,
                &inst.graph,
                format!("cm = {chromatic:?}, M = {classical:?}"),
                format!(
                    "cm_min = {:?}, cm_max = {:?}, M = {engine_classical:?}",
                    set.min, set.max
                ),
                bad_slot.is_none() && bad_classical.is_none(),
                || match bad_slot {
                    Some(i) => differing(&set, i, chromatic[i]),
                    None => {
                        let i = bad_classical.expect("some check failed");
                        Witness::Classical {
                            index: ZagrebIndex::ALL[i],
                            value: engine_classical[i],
                        }
                    }
                },
            )
        })
        .collect()
}

fn below_complete(ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let slot = claim.arg;
    let limit = ctx.config.limit(ctx.config.budgets.monotone_max_order);
    monotone_corpus(ctx.config, limit)
        .into_par_iter()
        .filter(|inst| !inst.graph.is_complete())
        .map(|inst| {
            let set = ctx.extrema(&inst.graph);
            if set.status != ExtremaStatus::Exact {
                return over_extrema_budget(claim, &inst);
            }
            let n = inst.graph.order();
            let f = complete_graph_forms(n).expect("n ≥ 4");
            let bound = [f.cm1, f.cm2, f.cm3][slot];
            judge(
                claim,
                &inst.descriptor,
                &inst.graph,
                format!("{}_max < {bound} = {}(K_{n})", CM[slot], CM[slot]),
                range(&set, slot),
                set.max[slot] < bound,
                || extremum(&set, slot, true),
            )
        })
        .collect()
}

fn subgraph_monotone(ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let slot = claim.arg;
    let limit = ctx.config.limit(ctx.config.budgets.monotone_max_order);
    subgraph_pairs(ctx.config, limit)
        .into_par_iter()
        .map(|(inst, sub)| {
            let whole = ctx.extrema(&inst.graph);
            let part = ctx.extrema(&sub);
            let name = format!(
                "{} minus {} edges",
                inst.descriptor,
                inst.graph.size() - sub.size()
            );
            if whole.status != ExtremaStatus::Exact || part.status != ExtremaStatus::Exact {
                return over_extrema_budget(claim, &inst);
            }
            let min_ok = part.min[slot] < whole.min[slot];
            let max_ok = part.max[slot] < whole.max[slot];
            judge(
                claim,
                &name,
                &sub,
                format!(
                    "{0}_min < {1}, {0}_max < {2} (values of G = {3})",
                    CM[slot],
                    whole.min[slot],
                    whole.max[slot],
                    to_graph6(&inst.graph)
                ),
                range(&part, slot),
                min_ok && max_ok,
                || extremum(&part, slot, min_ok),
            )
        })
        .collect()
}

fn trees(ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let slot = claim.arg;
    let budget = ctx.config.budgets.tree_max_order;
    let limit = ctx.config.limit(budget);
    tree_instances(ctx.config, budget, limit)
        .into_par_iter()
        .map(|inst| {
            let n = inst.graph.order();
            if n > limit {
                return over_order(claim, &inst.descriptor, n, limit);
            }
            let set = ctx.extrema(&inst.graph);
            if set.status != ExtremaStatus::Exact {
                return over_extrema_budget(claim, &inst);
            }
            let f = tree_forms(n).expect("n ≥ 4");
            let (lo, hi) = match slot {
                0 => (f.cm1_lo, f.cm1_hi),
                1 => (f.cm2, f.cm2),
                _ => (f.cm3, f.cm3),
            };
            let expected = if slot == 0 {
                format!("{lo} ≤ cm1_min ≤ cm1_max ≤ {hi}")
            } else {
                format!("{0}_min = {0}_max = {lo}", CM[slot])
            };
            let min_ok = lo <= set.min[slot];
            let max_ok = set.max[slot] <= hi;
            judge(
                claim,
                &inst.descriptor,
                &inst.graph,
                expected,
                range(&set, slot),
                min_ok && max_ok && set.min[slot] <= set.max[slot],
                || extremum(&set, slot, min_ok),
            )
        })
        .collect()
}

fn multipartite(ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let b = &ctx.config.budgets;
    multipartite_sizes(b.multipartite_max_parts, b.multipartite_max_part_size)
        .into_par_iter()
        .map(|sizes| {
            let name = format!(
                "complete-multipartite:{}",
                sizes
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            );
            let inst = Instance::named(&name);
            let set = ctx.extrema(&inst.graph);
            if set.status != ExtremaStatus::Exact {
                return over_extrema_budget(claim, &inst);
            }
            let printed = multipartite_forms(&sizes, Variant::AsPrinted).expect("sorted sizes");
            let corrected = multipartite_forms(&sizes, Variant::Corrected).expect("sorted sizes");
            let (slot, min, max) = match claim.arg {
                0 => (0, Some(printed.cm1_min), Some(printed.cm1_max)),
                1 => (1, None, Some(printed.cm2_max)),
                2 => (1, Some(printed.cm2_min), None),
                3 => (1, Some(corrected.cm2_min), None),
                _ => (2, Some(printed.cm3), Some(printed.cm3)),
            };
            let mut expected = Vec::new();
            let mut actual = Vec::new();
            let mut min_ok = true;
            let mut max_ok = true;
            if let Some(v) = min {
                expected.push(format!("{}_min = {v}", CM[slot]));
                actual.push(format!("{}_min = {}", CM[slot], set.min[slot]));
                min_ok = set.min[slot] == v;
            }
            if let Some(v) = max {
                expected.push(format!("{}_max = {v}", CM[slot]));
                actual.push(format!("{}_max = {}", CM[slot], set.max[slot]));
                max_ok = set.max[slot] == v;
            }
            judge(
                claim,
                &name,
                &inst.graph,
                expected.join(", "),
                actual.join(", "),
                min_ok && max_ok,
                || extremum(&set, slot, min_ok),
            )
        })
        .collect()
}

fn equal_multipartite(ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let b = &ctx.config.budgets;
    let shapes: Vec<(usize, usize)> = (1..=b.multipartite_max_part_size)
        .flat_map(|n| (2..=b.multipartite_max_parts).map(move |r| (n, r)))
        .collect();
    shapes
        .into_par_iter()
        .map(|(n, r)| {
            let name = format!("equal-multipartite:{n},{r}");
            let inst = Instance::named(&name);
            let set = ctx.extrema(&inst.graph);
            if set.status != ExtremaStatus::Exact {
                return over_extrema_budget(claim, &inst);
            }
            let f = equal_multipartite_forms(n, r).expect("n ≥ 1, r ≥ 2");
            let (slot, value) = match claim.arg {
                0 => (0, f.cm1),
                1 => (1, f.cm2),
                2 => (2, f.cm3_printed),
                _ => (2, f.cm3_pairsum),
            };
            judge(
                claim,
                &name,
                &inst.graph,
                format!("{0}_min = {0}_max = {value}", CM[slot]),
                range(&set, slot),
                set.min[slot] == value && set.max[slot] == value,
                || differing(&set, slot, value),
            )
        })
        .collect()
}

const THORN_BASES: [&str; 4] = ["path:4", "cycle:4", "complete:3", "star:4"];

fn thorn(ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let part = claim.arg;
    let (slot, max) = (part / 2, part % 2 == 1);
    let limit = ctx.config.limit(ctx.config.budgets.thorn_max_order);
    let cases: Vec<(&str, usize)> = THORN_BASES
        .iter()
        .flat_map(|&base| (0..=2).map(move |m| (base, m)))
        .collect();
    cases
        .into_par_iter()
        .map(|(base_spec, m)| {
            let name = format!("thorn({base_spec};{m})");
            let base = Instance::named(base_spec);
            let n = base.graph.order();
            if n * (m + 1) > limit {
                return over_order(claim, &name, n * (m + 1), limit);
            }
            let thorn = Instance::named(&name);
            let base_set = ctx.extrema(&base.graph);
            let thorn_set = ctx.extrema(&thorn.graph);
            if base_set.status != ExtremaStatus::Exact || thorn_set.status != ExtremaStatus::Exact {
                return over_extrema_budget(claim, &thorn);
            }
            let not_applicable = |reason: String| {
                record(
                    claim,
                    &name,
                    Some(&thorn.graph),
                    claim.statement.to_string(),
                    reason,
                    Verdict::NotApplicable,
                    None,
                )
            };
            let inputs = match thorn_inputs(&base.graph, m, ctx.config.budgets.extrema) {
                Ok(inputs) => inputs,
                Err(ThornInputError::OverBudget) => return over_extrema_budget(claim, &base),
                Err(e) => return not_applicable(e.to_string()),
            };
            let forms = match thorn_forms(&inputs) {
                Ok(f) => f,
                Err(e) => return not_applicable(e.to_string()),
            };
            let formula = forms.values()[part];
            let actual = if max {
                thorn_set.max[slot]
            } else {
                thorn_set.min[slot]
            };
            let side = if max { "max" } else { "min" };
            judge(
                claim,
                &name,
                &thorn.graph,
                format!(
                    "{}_{side} = {formula} (θ = {:?}, θ′ = {:?}, θ″ = {:?})",
                    CM[slot], inputs.theta.0, inputs.theta2.0, inputs.theta3.0
                ),
                format!("{}_{side} = {actual}", CM[slot]),
                formula == actual,
                || extremum(&thorn_set, slot, max),
            )
        })
        .collect()
}

fn tree_minimal(ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let slot = claim.arg;
    let limit = ctx.config.limit(ctx.config.budgets.oracle_max_order);
    connected_corpus(ctx.config, limit)
        .into_par_iter()
        .map(|inst| {
            let set = ctx.extrema(&inst.graph);
            if set.status != ExtremaStatus::Exact {
                return over_extrema_budget(claim, &inst);
            }
            let n = inst.graph.order() as u64;
            let bound = if slot == 1 { 2 * (n - 1) } else { n - 1 };
            let tree = inst.graph.is_tree();
            let min = set.min[slot];
            judge(
                claim,
                &inst.descriptor,
                &inst.graph,
                format!("{}_min {} {bound}", CM[slot], if tree { "=" } else { ">" }),
                format!("{}_min = {min}", CM[slot]),
                min >= bound && (min == bound) == tree,
                || extremum(&set, slot, false),
            )
        })
        .collect()
}

/// Evidence against the stated equivalence for one graph: a χ-preserving
/// non-edge of a complete bipartite graph, or a cross pair whose addition
/// raises χ in a graph that is not complete bipartite.
fn stability_mismatch(g: &Graph) -> Option<Witness> {
    let stable = stable_by_definition(g);
    let complete = is_complete_bipartite(g);
    if stable != complete {
        return None;
    }
    let edge = if stable {
        stable_witness(g).expect("stable")
    } else {
        let sides = g.bipartition().expect("bipartite");
        g.non_edges()
            .into_iter()
            .find(|&(u, v)| sides[u] != sides[v])
            .expect("not complete bipartite")
    };
    let chi = chromatic_number(&g.with_edges(&[edge]).expect("non-edge"));
    Some(Witness::Edges {
        edges: vec![edge],
        chi,
    })
}

fn bipartite_stability(ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let budget = ctx.config.budgets.bipartite_max_order;
    let limit = ctx.config.limit(budget);
    let mut out = Vec::new();
    for n in 2..=budget {
        let name = format!("connected bipartite graphs of order {n}");
        if n > limit {
            out.push(over_order(claim, &name, n, limit));
            continue;
        }
        let graphs = connected_bipartite_graphs(n);
        let mismatches: Vec<(Graph, Witness)> = graphs
            .par_iter()
            .filter_map(|g| stability_mismatch(g).map(|w| (g.clone(), w)))
            .collect();
        let expected = "stable iff not complete bipartite".to_string();
        let actual = format!(
            "{} labeled graphs checked, {} mismatches",
            graphs.len(),
            mismatches.len()
        );
        match mismatches.first() {
            None => out.push(record(
                claim,
                &name,
                None,
                expected,
                actual,
                Verdict::Verified,
                None,
            )),
            Some((g, w)) => out.push(record(
                claim,
                &name,
                Some(g),
                expected,
                actual,
                Verdict::Counterexample,
                Some(w.clone()),
            )),
        }
        for (g, w) in mismatches {
            let stable = stable_by_definition(&g);
            out.push(record(
                claim,
                &format!("bipartite order {n}"),
                Some(&g),
                "stable iff not complete bipartite".to_string(),
                format!(
                    "stable = {stable}, complete bipartite = {}",
                    is_complete_bipartite(&g)
                ),
                Verdict::Counterexample,
                Some(w),
            ));
        }
    }
    out
}

fn rho_result(ctx: &Context, claim: &Claim, instance: &str, g: &Graph) -> ClaimResult {
    let closed = match stability_number_bipartite(g) {
        Ok(v) => v,
        Err(e) => {
            return record(
                claim,
                instance,
                Some(g),
                claim.statement.to_string(),
                e.to_string(),
                Verdict::NotApplicable,
                None,
            )
        }
    };
    let expected = format!("ϱ = θ(c1)θ(c2) − ε = {closed}");
    let search = if claim.arg == 0 {
        stability_number_bruteforce
    } else {
        stability_number_chi_preserving
    };
    match search(g, &ctx.config.budgets.stability) {
        Ok(RhoOutcome::Found { rho, edges }) => {
            let chi = chromatic_number(&g.with_edges(&edges).expect("non-edges"));
            judge(
                claim,
                instance,
                g,
                expected,
                format!("ϱ = {rho} by search"),
                rho == closed,
                || Witness::Edges { edges, chi },
            )
        }
        Ok(RhoOutcome::BudgetExceeded) => {
            skipped(claim, instance, "ϱ search exceeded its budget".into())
        }
        Err(e) => record(
            claim,
            instance,
            Some(g),
            expected,
            e.to_string(),
            Verdict::NotApplicable,
            None,
        ),
    }
}

fn bipartite_rho(ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let budget = ctx.config.budgets.rho_max_order;
    let limit = ctx.config.limit(budget);
    let mut out = Vec::new();
    for spec in ["path:4", "path:5", "cycle:6"] {
        let inst = Instance::named(spec);
        let n = inst.graph.order();
        out.push(if n > limit {
            over_order(claim, spec, n, limit)
        } else {
            rho_result(ctx, claim, spec, &inst.graph)
        });
    }
    for n in 2..=budget {
        if n > limit {
            out.push(over_order(
                claim,
                &format!("connected bipartite graphs of order {n}"),
                n,
                limit,
            ));
            continue;
        }
        let classes: BTreeMap<u64, Graph> = connected_bipartite_graphs(n)
            .into_iter()
            .filter(|g| !is_complete_bipartite(g))
            .map(|g| (canonical_key(&g), g))
            .collect();
        let results: Vec<ClaimResult> = classes
            .into_values()
            .enumerate()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|(k, g)| rho_result(ctx, claim, &format!("bipartite-class:{n}:{k}"), &g))
            .collect();
        out.extend(results);
    }
    out
}

fn unstable_examples(ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let limit = ctx.config.limit(ctx.config.budgets.complete_max_order);
    let mut cases: Vec<Instance> = Vec::new();
    for n in 3..=limit {
        cases.push(Instance::named(&format!("star:{n}")));
    }
    for n in 3..=limit {
        let k = Instance::named(&format!("complete:{n}"));
        cases.push(Instance {
            descriptor: format!("complete:{n} minus edge 0-1"),
            graph: k.graph.without_edges(&[(0, 1)]),
        });
    }
    for a in 2..=limit / 2 {
        for b in a..=limit - a {
            cases.push(Instance::named(&format!("complete-bipartite:{a},{b}")));
        }
    }
    let mut out: Vec<ClaimResult> = cases
        .into_par_iter()
        .map(|inst| {
            let g = &inst.graph;
            let witness = stable_witness(g);
            judge(
                claim,
                &inst.descriptor,
                g,
                "unstable".to_string(),
                if witness.is_some() {
                    "stable"
                } else {
                    "unstable"
                }
                .to_string(),
                witness.is_none(),
                || {
                    let edge = witness.expect("stable");
                    Witness::Edges {
                        edges: vec![edge],
                        chi: chromatic_number(&g.with_edges(&[edge]).expect("non-edge")),
                    }
                },
            )
        })
        .collect();
    for n in 1..=limit {
        let inst = Instance::named(&format!("complete:{n}"));
        let perfectly = inst.graph.non_edges().is_empty();
        out.push(record(
            claim,
            &inst.descriptor,
            Some(&inst.graph),
            "perfectly stable (no non-edges)".to_string(),
            format!("{} non-edges", inst.graph.non_edges().len()),
            if perfectly {
                Verdict::Verified
            } else {
                Verdict::Counterexample
            },
            None,
        ));
    }
    out
}

fn unstable_cycles(ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let limit = ctx.config.limit(ctx.config.budgets.complete_max_order);
    (4..=limit)
        .into_par_iter()
        .map(|n| {
            let inst = Instance::named(&format!("cycle:{n}"));
            let g = &inst.graph;
            let witness = stable_witness(g);
            judge(
                claim,
                &inst.descriptor,
                g,
                "unstable".to_string(),
                match witness {
                    Some((u, v)) => {
                        format!("stable: adding {u}-{v} keeps χ = {}", chromatic_number(g))
                    }
                    None => "unstable".to_string(),
                },
                witness.is_none(),
                || {
                    let edge = witness.expect("stable");
                    Witness::Edges {
                        edges: vec![edge],
                        chi: chromatic_number(&g.with_edges(&[edge]).expect("non-edge")),
                    }
                },
            )
        })
        .collect()
}

fn oracle_extrema(ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let limit = ctx.config.limit(ctx.config.budgets.oracle_max_order);
    connected_corpus(ctx.config, limit)
        .into_par_iter()
        .map(|inst| {
            let set = ctx.extrema(&inst.graph);
            if set.status != ExtremaStatus::Exact {
                return over_extrema_budget(claim, &inst);
            }
            let (min, max, count) = naive_extrema(&inst.graph);
            let bad = (0..3).find(|&i| set.min[i] != min[i] || set.max[i] != max[i]);
            judge(
                claim,
                &inst.descriptor,
                &inst.graph,
                format!("min = {min:?}, max = {max:?} over {count} colorings"),
                format!(
                    "min = {:?}, max = {:?} over {} colorings",
                    set.min, set.max, set.colorings_examined
                ),
                bad.is_none() && set.colorings_examined == count,
                || {
                    let i = bad.unwrap_or(0);
                    extremum(&set, i, set.min[i] == min[i])
                },
            )
        })
        .collect()
}

fn oracle_chi(ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let limit = ctx.config.limit(ctx.config.budgets.oracle_max_order);
    connected_corpus(ctx.config, limit)
        .into_par_iter()
        .map(|inst| {
            let engine = chromatic_number(&inst.graph);
            let naive = naive_chromatic_number(&inst.graph);
            judge(
                claim,
                &inst.descriptor,
                &inst.graph,
                format!("χ = {naive}"),
                format!("χ = {engine}"),
                engine == naive,
                || Witness::Edges {
                    edges: Vec::new(),
                    chi: engine,
                },
            )
        })
        .collect()
}

fn oracle_permutation(ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let limit = ctx.config.limit(ctx.config.budgets.oracle_max_order);
    connected_corpus(ctx.config, limit)
        .into_par_iter()
        .map(|inst| {
            let all = ctx.extrema(&inst.graph);
            let options = ExtremaOptions {
                semantics: Semantics::Permutation,
                budget: ctx.config.budgets.extrema,
                ..Default::default()
            };
            let perm = extrema_set(&inst.graph, &options);
            let bad = (0..3).find(|&i| perm.min[i] < all.min[i] || perm.max[i] > all.max[i]);
            judge(
                claim,
                &inst.descriptor,
                &inst.graph,
                format!("within min = {:?}, max = {:?}", all.min, all.max),
                format!("min = {:?}, max = {:?}", perm.min, perm.max),
                bad.is_none(),
                || {
                    let i = bad.unwrap_or(0);
                    extremum(&perm, i, perm.min[i] >= all.min[i])
                },
            )
        })
        .collect()
}

fn oracle_reversal(ctx: &Context, claim: &Claim) -> Vec<ClaimResult> {
    let limit = ctx.config.limit(ctx.config.budgets.oracle_max_order);
    connected_corpus(ctx.config, limit)
        .into_par_iter()
        .map(|inst| {
            let g = &inst.graph;
            let options = ExtremaOptions {
                semantics: Semantics::Permutation,
                budget: ctx.config.budgets.extrema,
                ..Default::default()
            };
            let perm = extrema_set(g, &options);
            let reversed = perm.min_witness[0].reversed();
            let values = chromatic_indices(g, &reversed).expect("reversal keeps properness");
            let m3_kept =
                values[2] == chromatic_indices(g, &perm.min_witness[0]).expect("proper")[2];
            judge(
                claim,
                &inst.descriptor,
                g,
                format!("cm1 of reversed minimum witness = {}", perm.max[0]),
                format!("{}, cm3 unchanged: {m3_kept}", values[0]),
                values[0] == perm.max[0] && m3_kept,
                || Witness::Coloring {
                    index: ZagrebIndex::First,
                    value: values[0],
                    colors: reversed.clone(),
                },
            )
        })
        .collect()
}
