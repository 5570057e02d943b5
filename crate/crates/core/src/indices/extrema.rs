//! Exact minimum and maximum chromatic indices over minimum colorings.
//!
//! Within budget, every coloring admitted by the chosen semantics is
//! evaluated. Past the budget the search falls back to the label
//! permutations of one χ-partition (the one found by the chromatic number
//! search) and reports [`ExtremaStatus::BoundsOnly`]: the values are then
//! achievable, i.e. an upper bound on the true minimum and a lower bound on
//! the true maximum.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::ZagrebIndex;
use crate::coloring::{
    blocks_of, canonical_partition_within, chromatic_coloring, Coloring, ColoringSearch, Semantics,
};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest order enumerated exhaustively.
    pub max_order: usize,
    /// Largest number of colorings (or partitions) examined.
    pub max_colorings: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_order: 16,
            max_colorings: 10_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExtremaOptions {
    pub semantics: Semantics,
    pub budget: Budget,
    /// Report 0 for the second and 1 for the third index of edgeless graphs.
    pub paper_compat: bool,
}

impl ExtremaOptions {
    pub fn new(semantics: Semantics) -> Self {
        ExtremaOptions {
            semantics,
            ..Default::default()
        }
    }

    pub fn with_compat(mut self, paper_compat: bool) -> Self {
        self.paper_compat = paper_compat;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremaStatus {
    Exact,
    BoundsOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extrema {
    pub index: ZagrebIndex,
    pub min: u64,
    pub min_witness: Coloring,
    pub max: u64,
    pub max_witness: Coloring,
    pub status: ExtremaStatus,
    pub compat_applied: bool,
}

/// Extrema of all three indices from a single pass over the colorings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremaSet {
    pub chi: u32,
    pub semantics: Semantics,
    pub status: ExtremaStatus,
    pub colorings_examined: u64,
    pub compat_applied: bool,
    pub min: [u64; 3],
    pub max: [u64; 3],
    pub min_witness: [Coloring; 3],
    pub max_witness: [Coloring; 3],
}

impl ExtremaSet {
    pub fn get(&self, index: ZagrebIndex) -> Extrema {
        let i = index.slot();
        Extrema {
            index,
            min: self.min[i],
            min_witness: self.min_witness[i].clone(),
            max: self.max[i],
            max_witness: self.max_witness[i].clone(),
            status: self.status,
            compat_applied: self.compat_applied,
        }
    }
}

/// Running min/max per index with lexicographically least witnesses.
struct Tracker {
    min: [u64; 3],
    max: [u64; 3],
    min_witness: [Vec<u32>; 3],
    max_witness: [Vec<u32>; 3],
}

impl Tracker {
    fn new() -> Self {
        Tracker {
            min: [u64::MAX; 3],
            max: [0; 3],
            min_witness: Default::default(),
            max_witness: Default::default(),
        }
    }

    fn offer(&mut self, sums: [u64; 3], colors: &[u32]) {
        for (i, value) in sums.into_iter().enumerate() {
            if value < self.min[i]
                || (value == self.min[i] && colors < self.min_witness[i].as_slice())
            {
                self.min[i] = value;
                self.min_witness[i].clear();
                self.min_witness[i].extend_from_slice(colors);
            }
            if value > self.max[i]
                || (value == self.max[i]
                    && (self.max_witness[i].is_empty() || colors < self.max_witness[i].as_slice()))
            {
                self.max[i] = value;
                self.max_witness[i].clear();
                self.max_witness[i].extend_from_slice(colors);
            }
        }
    }

    /// Whether `sums` could replace any current extremum.
    fn interested(&self, sums: [u64; 3]) -> bool {
        (0..3).any(|i| sums[i] <= self.min[i] || sums[i] >= self.max[i])
    }
}

fn factorial_capped(k: u32, cap: u64) -> Option<u64> {
    (1..=u64::from(k)).try_fold(1u64, |acc, x| acc.checked_mul(x).filter(|&v| v <= cap))
}

/// Evaluates label permutations of a fixed partition through its quotient:
/// class sizes and edge counts between classes.
fn scan_permutations(
    g: &Graph,
    blocks: &[Vec<usize>],
    exhaustive: bool,
    tracker: &mut Tracker,
) -> u64 {
    let k = blocks.len();
    let mut block_of = vec![0usize; g.order()];
    for (b, block) in blocks.iter().enumerate() {
        for &v in block {
            block_of[v] = b;
        }
    }
    let theta: Vec<u64> = blocks.iter().map(|b| b.len() as u64).collect();
    let mut between = vec![vec![0u64; k]; k];
    for &(u, v) in g.edges() {
        let (a, b) = (block_of[u], block_of[v]);
        between[a.min(b)][a.max(b)] += 1;
    }
    let pairs: Vec<(usize, usize, u64)> = (0..k)
        .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
        .filter_map(|(a, b)| (between[a][b] > 0).then_some((a, b, between[a][b])))
        .collect();

    let evaluate = |perm: &[u32], tracker: &mut Tracker| {
        let label = |b: usize| u64::from(perm[b]);
        let m1 = (0..k).map(|b| theta[b] * label(b) * label(b)).sum::<u64>();
        let m2 = pairs
            .iter()
            .map(|&(a, b, w)| w * label(a) * label(b))
            .sum::<u64>();
        let m3 = pairs
            .iter()
            .map(|&(a, b, w)| w * label(a).abs_diff(label(b)))
            .sum::<u64>();
        let sums = [m1, m2, m3];
        if tracker.interested(sums) {
            let colors: Vec<u32> = block_of.iter().map(|&b| perm[b]).collect();
            tracker.offer(sums, &colors);
        }
    };

    let k32 = k as u32;
    if exhaustive {
        let mut count = 0;
        for perm in (1..=k32).permutations(k) {
            evaluate(&perm, tracker);
            count += 1;
        }
        count
    } else {
        let identity: Vec<u32> = (1..=k32).collect();
        let reversed: Vec<u32> = (1..=k32).rev().collect();
        evaluate(&identity, tracker);
        evaluate(&reversed, tracker);
        2
    }
}

/// Computes the extrema of all three chromatic indices.
pub fn extrema_set(g: &Graph, options: &ExtremaOptions) -> ExtremaSet {
    let witness = chromatic_coloring(g);
    let chi = witness.palette_size();
    let budget = options.budget;
    let mut tracker = Tracker::new();
    let mut examined = 0u64;
    let mut exact = false;

    if g.order() <= budget.max_order {
        match options.semantics {
            Semantics::All => {
                let mut search = ColoringSearch::new(g, chi, false);
                exact = true;
                while let Some((colors, sums)) = search.next_leaf() {
                    if examined == budget.max_colorings {
                        exact = false;
                        break;
                    }
                    examined += 1;
                    tracker.offer(sums, colors);
                }
            }
            Semantics::Permutation => {
                if let Some(blocks) = canonical_partition_within(g, chi, budget.max_colorings) {
                    let perms = factorial_capped(chi, budget.max_colorings);
                    examined += scan_permutations(g, &blocks, perms.is_some(), &mut tracker);
                    exact = perms.is_some();
                }
            }
        }
    }
    if !exact {
        let blocks = blocks_of(witness.assignment(), chi);
        let exhaustive = factorial_capped(chi, budget.max_colorings).is_some();
        examined += scan_permutations(g, &blocks, exhaustive, &mut tracker);
    }

    let compat_applied = options.paper_compat && g.size() == 0;
    if compat_applied {
        tracker.min[1] = 0;
        tracker.max[1] = 0;
        tracker.min[2] = 1;
        tracker.max[2] = 1;
    }

    let wrap = |colors: &Vec<u32>| Coloring::from_parts_unchecked(colors.clone(), chi);
    ExtremaSet {
        chi,
        semantics: options.semantics,
        status: if exact {
            ExtremaStatus::Exact
        } else {
            ExtremaStatus::BoundsOnly
        },
        colorings_examined: examined,
        compat_applied,
        min: tracker.min,
        max: tracker.max,
        min_witness: tracker.min_witness.each_ref().map(wrap),
        max_witness: tracker.max_witness.each_ref().map(wrap),
    }
}

/// Minimum and maximum of one chromatic index, with witnesses.
pub fn chromatic_extrema(g: &Graph, index: ZagrebIndex, options: &ExtremaOptions) -> Extrema {
    extrema_set(g, options).get(index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::enumerate_min_colorings;
    use crate::graph::{generate, FamilySpec};
    use crate::indices::chromatic_indices;

    fn family(text: &str) -> Graph {
        generate(&text.parse::<FamilySpec>().unwrap()).unwrap()
    }

    fn all(text: &str) -> ExtremaSet {
        extrema_set(&family(text), &ExtremaOptions::new(Semantics::All))
    }

    #[test]
    fn star_and_cycle_values() {
        let star = all("star:5");
        assert_eq!((star.min[0], star.max[0]), (8, 17));
        // Brute force over the 30 proper 3-colorings of C5.
        let c5 = all("cycle:5");
        assert_eq!((c5.min[0], c5.max[0]), (19, 27));
        assert_eq!(c5.colorings_examined, 30);
        assert_eq!(c5.status, ExtremaStatus::Exact);
    }

    #[test]
    fn trees_have_constant_edge_indices() {
        for text in ["path:4", "star:6", "caterpillar:2,0,1,3"] {
            let g = family(text);
            let set = all(text);
            let n = g.order() as u64;
            assert_eq!((set.min[1], set.max[1]), (2 * (n - 1), 2 * (n - 1)));
            assert_eq!((set.min[2], set.max[2]), (n - 1, n - 1));
        }
    }

    #[test]
    fn witnesses_are_lexicographically_least() {
        let p3 = all("path:3");
        assert_eq!(p3.min_witness[0].assignment(), &[1, 2, 1]);
        assert_eq!(p3.max_witness[0].assignment(), &[2, 1, 2]);
        // Every coloring ties on the third index; the first one wins.
        assert_eq!(p3.min_witness[2].assignment(), &[1, 2, 1]);
        assert_eq!(p3.max_witness[2].assignment(), &[1, 2, 1]);
    }

    #[test]
    fn witnesses_evaluate_to_their_values() {
        for text in [
            "cycle:5",
            "thorn(complete:3;1)",
            "complete-multipartite:1,2,2",
        ] {
            let g = family(text);
            for semantics in [Semantics::All, Semantics::Permutation] {
                let set = extrema_set(&g, &ExtremaOptions::new(semantics));
                for i in 0..3 {
                    assert_eq!(
                        chromatic_indices(&g, &set.min_witness[i]).unwrap()[i],
                        set.min[i]
                    );
                    assert_eq!(
                        chromatic_indices(&g, &set.max_witness[i]).unwrap()[i],
                        set.max[i]
                    );
                    assert!(set.min[i] <= set.max[i]);
                }
            }
        }
    }

    #[test]
    fn permutation_semantics_matches_its_stream() {
        let g = family("cycle:7");
        let set = extrema_set(&g, &ExtremaOptions::new(Semantics::Permutation));
        let values: Vec<[u64; 3]> = enumerate_min_colorings(&g, Semantics::Permutation)
            .map(|c| chromatic_indices(&g, &c).unwrap())
            .collect();
        assert_eq!(values.len(), 6);
        for i in 0..3 {
            assert_eq!(set.min[i], values.iter().map(|v| v[i]).min().unwrap());
            assert_eq!(set.max[i], values.iter().map(|v| v[i]).max().unwrap());
        }
        let full = all("cycle:7");
        assert!(full.min[0] <= set.min[0] && set.max[0] <= full.max[0]);
    }

    #[test]
    fn compat_defaults_for_edgeless_graphs() {
        let k1 = family("path:1");
        let raw = extrema_set(&k1, &ExtremaOptions::default());
        assert_eq!((raw.min, raw.max), ([1, 0, 0], [1, 0, 0]));
        assert!(!raw.compat_applied);
        let compat = extrema_set(&k1, &ExtremaOptions::default().with_compat(true));
        assert_eq!((compat.min, compat.max), ([1, 0, 1], [1, 0, 1]));
        assert!(compat.compat_applied);
        let k2 = extrema_set(
            &family("path:2"),
            &ExtremaOptions::default().with_compat(true),
        );
        assert!(!k2.compat_applied);
    }

    #[test]
    fn over_budget_falls_back_to_bounds() {
        let g = family("cycle:9");
        let exact = extrema_set(&g, &ExtremaOptions::default());
        let options = ExtremaOptions {
            budget: Budget {
                max_order: 16,
                max_colorings: 10,
            },
            ..Default::default()
        };
        let bounded = extrema_set(&g, &options);
        assert_eq!(bounded.status, ExtremaStatus::BoundsOnly);
        for i in 0..3 {
            assert!(exact.min[i] <= bounded.min[i]);
            assert!(bounded.max[i] <= exact.max[i]);
        }
        let small_order = ExtremaOptions {
            budget: Budget {
                max_order: 4,
                max_colorings: 10,
            },
            ..Default::default()
        };
        assert_eq!(
            extrema_set(&g, &small_order).status,
            ExtremaStatus::BoundsOnly
        );
    }
}
