//! Benchmark fixtures: named graphs that stress the coloring search, the
//! extrema scan and the stability search.

use czi_core::graph::generate;
use czi_core::graph::random::{corpus_rng, random_connected};
use czi_core::{FamilySpec, Graph};

pub fn named(spec: &str) -> Graph {
    generate(&spec.parse::<FamilySpec>().expect("valid spec")).expect("valid family")
}

/// Specs for the extrema benchmarks, smallest first.
pub const EXTREMA_SPECS: [&str; 6] = [
    "cycle:9",
    "thorn(complete:3;2)",
    "caterpillar:2,1,2,1",
    "complete-multipartite:2,3,3",
    "thorn(path:4;2)",
    "complete:9",
];

/// Seeded random connected graphs of order `n`.
pub fn random_graphs(n: usize, count: usize) -> Vec<Graph> {
    let mut rng = corpus_rng(7);
    (0..count)
        .map(|_| random_connected(&mut rng, n, 0.35))
        .collect()
}
