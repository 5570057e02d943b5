//! Immutable simple undirected graphs.
//!
//! Vertices are dense `0..order` indices. A [`Graph`] is never mutated after
//! construction; helpers such as [`Graph::with_edges`] return new values.

mod dimacs;
mod edge_list;
mod family;
mod graph6;
pub mod random;

use std::collections::VecDeque;

use thiserror::Error;

pub use dimacs::parse_dimacs;
pub use edge_list::{parse_edge_list, to_edge_list};
pub use family::{generate, FamilySpec, Pendants};
pub use graph6::{parse_graph6, to_graph6};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("invalid family: {0}")]
    InvalidFamily(String),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("graph6: {message} at byte {offset}")]
    Graph6 { offset: usize, message: String },
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("input declares no vertices")]
    Empty,
}

/// A finite simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    neighbors: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph on `order` vertices. Edges are unordered; listing the
    /// same pair twice (in either orientation) is an error.
    pub fn new<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if order == 0 {
            return Err(GraphError::Empty);
        }
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= order {
                    return Err(GraphError::VertexOutOfRange { vertex, order });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut neighbors = vec![Vec::new(); order];
        for &(u, v) in &normalized {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Graph {
            neighbors,
            edges: normalized,
        })
    }

    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        Self::new(order, std::iter::empty())
    }

    pub fn order(&self) -> usize {
        self.neighbors.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.neighbors
            .get(v)
            .map(Vec::len)
            .ok_or(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.neighbors[u].binary_search(&v).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size() == n * (n - 1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.components() == 1
    }

    /// Number of connected components.
    pub fn components(&self) -> usize {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.neighbors[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.order() && self.is_connected()
    }

    /// Proper 2-coloring with sides `0`/`1`, the lowest vertex of every
    /// component on side `0`; `None` if the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.order();
        let mut side = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.neighbors[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Vertex pairs `(u, v)`, `u < v`, that are not edges, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::with_capacity(n * (n - 1) / 2 - self.size());
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// A new graph with `extra` edges added.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Graph::new(
            self.order(),
            self.edges.iter().copied().chain(extra.iter().copied()),
        )
    }

    /// A new graph on the same vertex set with the listed edges removed.
    /// Pairs that are not edges are ignored.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Graph {
        let removed: Vec<(usize, usize)> =
            removed.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let kept = self.edges.iter().copied().filter(|e| !removed.contains(e));
        Graph::new(self.order(), kept).expect("subset of a valid edge set")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn rejects_invalid_edges() {
        assert_eq!(Graph::new(0, []), Err(GraphError::Empty));
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 2,
                order: 2
            })
        );
    }

    #[test]
    fn degrees() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        for v in 0..4 {
            assert_eq!(k4.degree(v), Ok(3));
        }
        let star = Graph::new(5, (1..5).map(|i| (0, i))).unwrap();
        assert_eq!(star.degree(0), Ok(4));
        assert_eq!(path(3).degree(1), Ok(2));
        assert!(path(3).degree(3).is_err());
    }

    #[test]
    fn size_is_half_of_degree_sum() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
        assert_eq!(g.components(), 3);
        assert!(!g.is_connected());
    }

    #[test]
    fn bipartition_and_non_edges() {
        let p4 = path(4);
        assert_eq!(p4.bipartition(), Some(vec![0, 1, 0, 1]));
        assert_eq!(p4.non_edges(), vec![(0, 2), (0, 3), (1, 3)]);
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.bipartition(), None);
        assert!(k3.is_complete());
        assert!(p4.is_tree());
    }

    #[test]
    fn edge_addition_and_removal() {
        let p4 = path(4);
        let c4 = p4.with_edges(&[(3, 0)]).unwrap();
        assert_eq!(c4.size(), 4);
        assert!(c4.has_edge(0, 3));
        assert!(p4.with_edges(&[(1, 0)]).is_err());
        assert_eq!(c4.without_edges(&[(3, 0)]), p4);
    }
}
