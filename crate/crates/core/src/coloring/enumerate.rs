use std::ops::RangeInclusive;

use itertools::{Itertools, Permutations};

use super::{chromatic_number, Coloring, Semantics};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Depth-first enumeration of proper surjective assignments
/// `V -> {1..=k}`, vertices in index order and colors ascending, so leaves
/// arrive in lexicographic order of the assignment sequence.
///
/// The three chromatic index sums are maintained incrementally per depth.
/// In `restricted` mode a vertex may only open the next unused color, which
/// yields each partition into `k` color classes exactly once.
#[derive(Clone, Debug)]
pub(crate) struct ColoringSearch {
    lower: Vec<Vec<usize>>,
    k: u32,
    restricted: bool,
    colors: Vec<u32>,
    used: Vec<u32>,
    distinct: u32,
    sums: Vec<[u64; 3]>,
    state: State,
}

impl ColoringSearch {
    pub(crate) fn new(g: &Graph, k: u32, restricted: bool) -> Self {
        let n = g.order();
        let lower = (0..n)
            .map(|v| g.neighbors(v).iter().copied().filter(|&u| u < v).collect())
            .collect();
        ColoringSearch {
            lower,
            k,
            restricted,
            colors: vec![0; n],
            used: vec![0; k as usize + 1],
            distinct: 0,
            sums: vec![[0; 3]; n + 1],
            state: State::Fresh,
        }
    }

    /// Advances to the next complete coloring; returns the assignment and
    /// its `[cm1, cm2, cm3]` sums.
    pub(crate) fn next_leaf(&mut self) -> Option<(&[u32], [u64; 3])> {
        let n = self.colors.len();
        let mut d = match self.state {
            State::Fresh => {
                self.state = State::Running;
                0
            }
            State::Running => n - 1,
            State::Done => return None,
        };
        loop {
            if self.advance(d) {
                if d + 1 == n {
                    return Some((&self.colors, self.sums[n]));
                }
                d += 1;
            } else {
                if d == 0 {
                    self.state = State::Done;
                    return None;
                }
                d -= 1;
            }
        }
    }

    /// Moves vertex `d` to its next feasible color above the current one.
    fn advance(&mut self, d: usize) -> bool {
        let current = self.colors[d];
        if current > 0 {
            let slot = &mut self.used[current as usize];
            *slot -= 1;
            if *slot == 0 {
                self.distinct -= 1;
            }
            self.colors[d] = 0;
        }
        let limit = if self.restricted {
            self.k.min(self.distinct + 1)
        } else {
            self.k
        };
        let remaining = (self.colors.len() - d - 1) as u64;
        for c in current + 1..=limit {
            if self.lower[d].iter().any(|&u| self.colors[u] == c) {
                continue;
            }
            let opens = u32::from(self.used[c as usize] == 0);
            if remaining < u64::from(self.k - self.distinct - opens) {
                continue;
            }
            self.colors[d] = c;
            self.used[c as usize] += 1;
            self.distinct += opens;
            let mut s = self.sums[d];
            let c64 = u64::from(c);
            s[0] += c64 * c64;
            for &u in &self.lower[d] {
                let other = u64::from(self.colors[u]);
                s[1] += c64 * other;
                s[2] += c64.abs_diff(other);
            }
            self.sums[d + 1] = s;
            return true;
        }
        false
    }
}

/// Canonical χ-partition: color classes as sorted vertex lists, classes
/// ordered by least vertex, lexicographically least among all proper
/// χ-partitions.
pub fn canonical_partition(g: &Graph) -> Vec<Vec<usize>> {
    canonical_partition_within(g, chromatic_number(g), u64::MAX)
        .expect("unbounded search completes")
}

/// Same as [`canonical_partition`] with a cap on the number of partitions
/// examined; `None` once the cap is exceeded.
pub(crate) fn canonical_partition_within(
    g: &Graph,
    chi: u32,
    max_partitions: u64,
) -> Option<Vec<Vec<usize>>> {
    let mut search = ColoringSearch::new(g, chi, true);
    let mut best: Option<Vec<Vec<usize>>> = None;
    let mut seen = 0u64;
    while let Some((colors, _)) = search.next_leaf() {
        seen += 1;
        if seen > max_partitions {
            return None;
        }
        let candidate = blocks_of(colors, chi);
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    best
}

/// Color classes of an assignment whose labels appear in first-occurrence
/// order, so class `i` holds label `i + 1`.
pub(crate) fn blocks_of(colors: &[u32], palette: u32) -> Vec<Vec<usize>> {
    let mut blocks = vec![Vec::new(); palette as usize];
    for (v, &c) in colors.iter().enumerate() {
        blocks[c as usize - 1].push(v);
    }
    blocks
}

/// Lazy stream of minimum colorings (`ℓ = χ(G)`), in lexicographic order
/// of the assignment sequence.
pub struct MinColorings {
    chi: u32,
    inner: Inner,
}

enum Inner {
    All(ColoringSearch),
    Permutation {
        block_of: Vec<usize>,
        labels: Permutations<RangeInclusive<u32>>,
    },
}

impl MinColorings {
    pub fn chi(&self) -> u32 {
        self.chi
    }
}

impl Iterator for MinColorings {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        match &mut self.inner {
            Inner::All(search) => search
                .next_leaf()
                .map(|(colors, _)| Coloring::from_parts_unchecked(colors.to_vec(), self.chi)),
            // Classes are ordered by least vertex, so lexicographic label
            // permutations give lexicographic assignments.
            Inner::Permutation { block_of, labels } => labels.next().map(|perm| {
                let colors = block_of.iter().map(|&b| perm[b]).collect();
                Coloring::from_parts_unchecked(colors, self.chi)
            }),
        }
    }
}

/// Every minimum coloring of `g` under the chosen semantics.
pub fn enumerate_min_colorings(g: &Graph, semantics: Semantics) -> MinColorings {
    let chi = chromatic_number(g);
    let inner = match semantics {
        Semantics::All => Inner::All(ColoringSearch::new(g, chi, false)),
        Semantics::Permutation => {
            let blocks = canonical_partition_within(g, chi, u64::MAX).expect("unbounded");
            permutation_stream(g.order(), &blocks)
        }
    };
    MinColorings { chi, inner }
}

fn permutation_stream(order: usize, blocks: &[Vec<usize>]) -> Inner {
    let mut block_of = vec![0; order];
    for (b, block) in blocks.iter().enumerate() {
        for &v in block {
            block_of[v] = b;
        }
    }
    let k = blocks.len() as u32;
    Inner::Permutation {
        block_of,
        labels: (1..=k).permutations(k as usize),
    }
}
