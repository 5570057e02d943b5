//! Seeded random graphs for verification corpora.
//!
//! All randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`, so a seed fully determines every generated graph.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Graph;

pub type CorpusRng = ChaCha8Rng;

pub fn corpus_rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random labeled tree on `n` vertices, decoded from a random
/// Prüfer sequence.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    assert!(n >= 1, "tree order must be positive");
    if n <= 2 {
        return Graph::new(n, (1..n).map(|i| (0, i))).expect("valid tree");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    Graph::new(n, prufer_edges(n, &code)).expect("Prüfer decoding yields a tree")
}

fn prufer_edges(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        let leaf = (0..n)
            .find(|&u| degree[u] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Random connected graph: a random spanning tree plus every remaining pair
/// independently with probability `extra_edge_probability`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra_edge_probability: f64) -> Graph {
    let tree = random_tree(rng, n);
    let extra: Vec<(usize, usize)> = tree
        .non_edges()
        .into_iter()
        .filter(|_| rng.random_bool(extra_edge_probability))
        .collect();
    tree.with_edges(&extra).expect("non-edges are new edges")
}

/// Random spanning subgraph: one uniformly chosen edge is always removed
/// and every other edge independently with probability 1/2. `None` for
/// edgeless graphs.
pub fn random_spanning_subgraph<R: Rng>(rng: &mut R, g: &Graph) -> Option<Graph> {
    if g.size() == 0 {
        return None;
    }
    let forced = rng.random_range(0..g.size());
    let removed: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| rng.random_bool(0.5) || i == forced)
        .map(|(_, &e)| e)
        .collect();
    Some(g.without_edges(&removed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_are_trees() {
        let mut rng = corpus_rng(7);
        for n in 1..12 {
            let t = random_tree(&mut rng, n);
            assert_eq!(t.order(), n);
            assert!(t.is_tree());
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a: Vec<Graph> = {
            let mut rng = corpus_rng(0);
            (0..5).map(|_| random_connected(&mut rng, 7, 0.4)).collect()
        };
        let b: Vec<Graph> = {
            let mut rng = corpus_rng(0);
            (0..5).map(|_| random_connected(&mut rng, 7, 0.4)).collect()
        };
        assert_eq!(a, b);
        assert!(a.iter().all(Graph::is_connected));
    }

    #[test]
    fn spanning_subgraphs_drop_edges() {
        let mut rng = corpus_rng(3);
        let g = random_connected(&mut rng, 7, 0.7);
        for _ in 0..20 {
            let sub = random_spanning_subgraph(&mut rng, &g).unwrap();
            assert_eq!(sub.order(), g.order());
            assert!(sub.size() < g.size());
            assert!(sub.edges().iter().all(|&(u, v)| g.has_edge(u, v)));
        }
        assert!(random_spanning_subgraph(&mut rng, &Graph::empty(3).unwrap()).is_none());
    }
}
