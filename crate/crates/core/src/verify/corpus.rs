//! Graph corpora for the claim registry.

use itertools::Itertools;
use rand::Rng;

use crate::graph::random::{corpus_rng, random_connected, random_spanning_subgraph, random_tree};
use crate::graph::{generate, FamilySpec, Graph};

use super::CorpusConfig;

/// ChaCha stream ids; each corpus draws from its own stream so adding or
/// resizing one corpus leaves the others unchanged.
pub(crate) const TREE_STREAM: u64 = 1;
pub(crate) const CONNECTED_STREAM: u64 = 2;
pub(crate) const MONOTONE_STREAM: u64 = 3;
pub(crate) const SUBGRAPH_STREAM: u64 = 4;

#[derive(Clone, Debug)]
pub struct Instance {
    pub descriptor: String,
    pub graph: Graph,
}

impl Instance {
    pub fn named(spec: &str) -> Instance {
        let parsed: FamilySpec = spec.parse().expect("corpus family specs are valid");
        Instance {
            descriptor: spec.to_string(),
            graph: generate(&parsed).expect("corpus family specs are valid"),
        }
    }
}

/// Family kinds understood by [`family_instances`].
pub const FAMILY_KINDS: [&str; 7] = [
    "path",
    "cycle",
    "complete",
    "star",
    "complete_multipartite",
    "caterpillar",
    "thorn",
];

/// Sorted part-size vectors with `2..=max_parts` parts of size `1..=max_size`.
pub fn multipartite_sizes(max_parts: usize, max_size: usize) -> Vec<Vec<usize>> {
    (2..=max_parts)
        .flat_map(|r| (1..=max_size).combinations_with_replacement(r))
        .collect()
}

/// Leaf-count vectors for caterpillars with a spine of 2 to 4 vertices.
fn caterpillar_legs(max_legs: usize) -> Vec<Vec<usize>> {
    (2..=4)
        .flat_map(|len| (0..len).map(|_| 0..=max_legs).multi_cartesian_product())
        .collect()
}

fn join(values: &[usize]) -> String {
    values.iter().join(",")
}

/// Every instance of the listed family kinds with order at most `max_order`.
pub fn family_instances(kinds: &[String], max_order: usize) -> Vec<Instance> {
    let mut specs: Vec<String> = Vec::new();
    for kind in kinds {
        match kind.as_str() {
            "path" => specs.extend((1..=max_order).map(|n| format!("path:{n}"))),
            "cycle" => specs.extend((3..=max_order).map(|n| format!("cycle:{n}"))),
            "complete" => specs.extend((1..=max_order).map(|n| format!("complete:{n}"))),
            "star" => specs.extend((4..=max_order).map(|n| format!("star:{n}"))),
            "complete_multipartite" => specs.extend(
                multipartite_sizes(max_order, max_order)
                    .into_iter()
                    .filter(|s| s.iter().sum::<usize>() <= max_order)
                    .map(|s| format!("complete-multipartite:{}", join(&s))),
            ),
            "caterpillar" => specs.extend(
                caterpillar_legs(2)
                    .into_iter()
                    .filter(|legs| legs.len() + legs.iter().sum::<usize>() <= max_order)
                    .map(|legs| format!("caterpillar:{}", join(&legs))),
            ),
            "thorn" => {
                for base in ["path:2", "path:3", "cycle:3", "cycle:4", "star:4"] {
                    for m in 1..=2 {
                        specs.push(format!("thorn({base};{m})"));
                    }
                }
                specs.retain(|s| Instance::named(s).graph.order() <= max_order);
            }
            _ => {}
        }
    }
    specs.iter().map(|s| Instance::named(s)).collect()
}

/// Trees: paths, stars and caterpillars of order `4..=max_order`, and seeded
/// random trees of order `4..=random_max_order`.
pub fn tree_instances(
    config: &CorpusConfig,
    max_order: usize,
    random_max_order: usize,
) -> Vec<Instance> {
    let mut out: Vec<Instance> = Vec::new();
    for n in 4..=max_order {
        out.push(Instance::named(&format!("path:{n}")));
        out.push(Instance::named(&format!("star:{n}")));
    }
    for legs in caterpillar_legs(3) {
        let order = legs.len() + legs.iter().sum::<usize>();
        if (4..=max_order).contains(&order) {
            out.push(Instance::named(&format!("caterpillar:{}", join(&legs))));
        }
    }
    if random_max_order >= 4 {
        for &seed in &config.seeds {
            let mut rng = corpus_rng(seed);
            rng.set_stream(TREE_STREAM);
            for k in 0..config.random_trees {
                let n = rng.random_range(4..=random_max_order);
                out.push(Instance {
                    descriptor: format!("random-tree:{seed}:{k}"),
                    graph: random_tree(&mut rng, n),
                });
            }
        }
    }
    out
}

fn random_connected_instances(
    config: &CorpusConfig,
    stream: u64,
    label: &str,
    orders: std::ops::RangeInclusive<usize>,
) -> Vec<Instance> {
    if orders.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for &seed in &config.seeds {
        let mut rng = corpus_rng(seed);
        rng.set_stream(stream);
        for k in 0..config.random_connected {
            let n = rng.random_range(orders.clone());
            let p = rng.random_range(0.1..0.7);
            out.push(Instance {
                descriptor: format!("{label}:{seed}:{k}"),
                graph: random_connected(&mut rng, n, p),
            });
        }
    }
    out
}

/// Family instances plus seeded random connected graphs, all of order at
/// most `max_order`.
pub fn connected_corpus(config: &CorpusConfig, max_order: usize) -> Vec<Instance> {
    let mut out = family_instances(&config.families, max_order);
    out.extend(random_connected_instances(
        config,
        CONNECTED_STREAM,
        "random-connected",
        2..=max_order,
    ));
    out
}

/// Connected graphs of order `4..=max_order` for the comparison claims.
pub fn monotone_corpus(config: &CorpusConfig, max_order: usize) -> Vec<Instance> {
    let mut out: Vec<Instance> = family_instances(&config.families, max_order)
        .into_iter()
        .filter(|i| i.graph.order() >= 4)
        .collect();
    out.extend(random_connected_instances(
        config,
        MONOTONE_STREAM,
        "random-monotone",
        4..=max_order,
    ));
    out
}

/// Pairs `(G, G')` with `G'` a random spanning subgraph of `G` missing at
/// least one edge; `G` ranges over the random part of the monotone corpus.
pub fn subgraph_pairs(config: &CorpusConfig, max_order: usize) -> Vec<(Instance, Graph)> {
    let graphs =
        random_connected_instances(config, MONOTONE_STREAM, "random-monotone", 4..=max_order);
    let mut out = Vec::new();
    for &seed in &config.seeds {
        let mut rng = corpus_rng(seed);
        rng.set_stream(SUBGRAPH_STREAM);
        let prefix = format!("random-monotone:{seed}:");
        for inst in graphs.iter().filter(|i| i.descriptor.starts_with(&prefix)) {
            if let Some(sub) = random_spanning_subgraph(&mut rng, &inst.graph) {
                out.push((inst.clone(), sub));
            }
        }
    }
    out
}

/// All bipartite graphs on sides `{0..a}` and `{a..n}` with `a ≤ n − a`,
/// connected ones only. Every connected bipartite graph of order `n` is
/// isomorphic to at least one of them.
pub fn connected_bipartite_graphs(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for a in 1..=n / 2 {
        let cross: Vec<(usize, usize)> = (0..a).cartesian_product(a..n).collect();
        for mask in 0u64..(1u64 << cross.len()) {
            let edges = cross
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::new(n, edges).expect("cross pairs are valid edges");
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

fn edge_mask(g: &Graph, relabel: &[usize]) -> u64 {
    let n = g.order();
    g.edges().iter().fold(0u64, |mask, &(u, v)| {
        let (a, b) = (relabel[u].min(relabel[v]), relabel[u].max(relabel[v]));
        mask | 1 << (a * n + b)
    })
}

/// Isomorphism-invariant key for graphs of order at most 8: the least edge
/// mask over relabelings that order vertices by degree, trying every
/// permutation within each degree class.
pub fn canonical_key(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= 8, "canonical_key supports order ≤ 8");
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| g.neighbors(v).len());
    let classes: Vec<Vec<usize>> = by_degree
        .iter()
        .copied()
        .chunk_by(|&v| g.neighbors(v).len())
        .into_iter()
        .map(|(_, group)| group.collect())
        .collect();
    let mut best = u64::MAX;
    let mut relabel = vec![0usize; n];
    for choice in classes
        .iter()
        .map(|class| class.iter().copied().permutations(class.len()))
        .multi_cartesian_product()
    {
        for (position, v) in choice.iter().flatten().enumerate() {
            relabel[*v] = position;
        }
        best = best.min(edge_mask(g, &relabel));
    }
    best
}
