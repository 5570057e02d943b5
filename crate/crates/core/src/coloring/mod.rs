//! Proper vertex colorings with integer color labels `1..=ℓ`.

mod chromatic;
mod enumerate;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

pub use chromatic::{
    chromatic_coloring, chromatic_number, greedy_clique, greedy_coloring, is_k_colorable,
};
pub(crate) use enumerate::{blocks_of, canonical_partition_within, ColoringSearch};
pub use enumerate::{canonical_partition, enumerate_min_colorings, MinColorings};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring has no vertices")]
    Empty,
    #[error("vertex {0} has color 0; colors are 1-based")]
    ZeroColor(usize),
    #[error("color {0} is unused; labels must be exactly 1..=ℓ")]
    UnusedColor(u32),
    #[error("coloring covers {got} vertices, graph has {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("edge {0} {1} is monochromatic")]
    Improper(usize, usize),
}

/// Which minimum colorings compete for the index extrema.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Semantics {
    /// Every proper surjective assignment `V -> {1..χ}`.
    #[default]
    All,
    /// The ℓ! relabelings of one canonical χ-partition.
    Permutation,
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Semantics::All => "all",
            Semantics::Permutation => "permutation",
        })
    }
}

impl std::str::FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Semantics::All),
            "permutation" => Ok(Semantics::Permutation),
            other => Err(format!("unknown semantics {other:?}")),
        }
    }
}

/// A vertex coloring using every label in `1..=palette_size`.
///
/// Serializes as a JSON array of 1-based colors indexed by vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Coloring {
    assignment: Vec<u32>,
    palette_size: u32,
}

impl Coloring {
    pub fn new(assignment: Vec<u32>) -> Result<Self, ColoringError> {
        if assignment.is_empty() {
            return Err(ColoringError::Empty);
        }
        if let Some(v) = assignment.iter().position(|&c| c == 0) {
            return Err(ColoringError::ZeroColor(v));
        }
        let palette_size = *assignment.iter().max().expect("non-empty");
        let mut used = vec![false; palette_size as usize];
        for &c in &assignment {
            used[c as usize - 1] = true;
        }
        if let Some(missing) = used.iter().position(|&u| !u) {
            return Err(ColoringError::UnusedColor(missing as u32 + 1));
        }
        Ok(Coloring {
            assignment,
            palette_size,
        })
    }

    pub(crate) fn from_parts_unchecked(assignment: Vec<u32>, palette_size: u32) -> Self {
        debug_assert_eq!(
            Coloring::new(assignment.clone()).map(|c| c.palette_size),
            Ok(palette_size)
        );
        Coloring {
            assignment,
            palette_size,
        }
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    pub fn color(&self, v: usize) -> u32 {
        self.assignment[v]
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Number of distinct colors, ℓ.
    pub fn palette_size(&self) -> u32 {
        self.palette_size
    }

    pub fn strengths(&self) -> StrengthVector {
        let mut theta = vec![0usize; self.palette_size as usize];
        for &c in &self.assignment {
            theta[c as usize - 1] += 1;
        }
        StrengthVector(theta)
    }

    /// Applies `c ↦ ℓ + 1 − c`.
    pub fn reversed(&self) -> Coloring {
        let top = self.palette_size + 1;
        Coloring {
            assignment: self.assignment.iter().map(|&c| top - c).collect(),
            palette_size: self.palette_size,
        }
    }
}

impl TryFrom<Vec<u32>> for Coloring {
    type Error = ColoringError;

    fn try_from(value: Vec<u32>) -> Result<Self, Self::Error> {
        Coloring::new(value)
    }
}

impl From<Coloring> for Vec<u32> {
    fn from(c: Coloring) -> Self {
        c.assignment
    }
}

/// Color-class sizes: `theta[j]` counts the vertices with color `j + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StrengthVector(pub Vec<usize>);

impl StrengthVector {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_non_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

pub fn strengths(c: &Coloring) -> StrengthVector {
    c.strengths()
}

/// True iff no edge of `g` is monochromatic under `c`.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    Ok(first_conflict(g, c)?.is_none())
}

/// Returns the first monochromatic edge, if any.
pub fn first_conflict(g: &Graph, c: &Coloring) -> Result<Option<(usize, usize)>, ColoringError> {
    if c.len() != g.order() {
        return Err(ColoringError::LengthMismatch {
            expected: g.order(),
            got: c.len(),
        });
    }
    Ok(g.edges()
        .iter()
        .copied()
        .find(|&(u, v)| c.color(u) == c.color(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coloring(colors: &[u32]) -> Coloring {
        Coloring::new(colors.to_vec()).unwrap()
    }

    #[test]
    fn validates_labels() {
        assert_eq!(Coloring::new(vec![]), Err(ColoringError::Empty));
        assert_eq!(Coloring::new(vec![1, 0]), Err(ColoringError::ZeroColor(1)));
        assert_eq!(
            Coloring::new(vec![1, 3]),
            Err(ColoringError::UnusedColor(2))
        );
        assert_eq!(coloring(&[2, 1, 2]).palette_size(), 2);
    }

    #[test]
    fn properness() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(is_proper(&k2, &coloring(&[1, 1])), Ok(false));
        assert_eq!(is_proper(&k2, &coloring(&[1, 2])), Ok(true));
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(is_proper(&c4, &coloring(&[1, 2, 1, 2])), Ok(true));
        assert!(matches!(
            is_proper(&c4, &coloring(&[1, 2])),
            Err(ColoringError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn strength_vectors() {
        assert_eq!(coloring(&[1, 2, 1]).strengths().0, vec![2, 1]);
        assert_eq!(coloring(&[2, 1, 2]).strengths().0, vec![1, 2]);
        assert_eq!(coloring(&[3, 1, 2]).strengths().0, vec![1, 1, 1]);
        assert!(StrengthVector(vec![3, 2, 2]).is_non_increasing());
        assert!(!StrengthVector(vec![2, 3]).is_non_increasing());
    }

    #[test]
    fn reversal_and_json() {
        let c = coloring(&[1, 2, 3, 1]);
        assert_eq!(c.reversed().assignment(), &[3, 2, 1, 3]);
        assert_eq!(serde_json::to_string(&c).unwrap(), "[1,2,3,1]");
        let back: Coloring = serde_json::from_str("[1,2,3,1]").unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<Coloring>("[1,3]").is_err());
    }
}
