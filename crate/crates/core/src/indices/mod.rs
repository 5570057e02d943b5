//! Classical Zagreb indices (degree based) and their chromatic analogues
//! (color-label based).

mod extrema;
mod report;
mod thorn;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{first_conflict, Coloring, ColoringError};
use crate::graph::Graph;

pub use extrema::{
    chromatic_extrema, extrema_set, Budget, Extrema, ExtremaOptions, ExtremaSet, ExtremaStatus,
};
pub use report::{full_report, IndexReport, Witnesses};
pub use thorn::{thorn_inputs, ThornInputError};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum IndexError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("witness for {name} evaluates to {evaluated}, report says {reported}")]
    WitnessMismatch {
        name: &'static str,
        evaluated: u64,
        reported: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum ZagrebIndex {
    /// Sum of squared vertex weights.
    First,
    /// Sum over edges of the endpoint product.
    Second,
    /// Sum over edges of the endpoint difference.
    Third,
}

impl ZagrebIndex {
    pub const ALL: [ZagrebIndex; 3] = [ZagrebIndex::First, ZagrebIndex::Second, ZagrebIndex::Third];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub(crate) fn slot(self) -> usize {
        self as usize
    }
}

impl From<ZagrebIndex> for u8 {
    fn from(index: ZagrebIndex) -> u8 {
        index.number()
    }
}

impl TryFrom<u8> for ZagrebIndex {
    type Error = String;

    fn try_from(value: u8) -> Result<Self, Self::Error> {
        match value {
            1 => Ok(ZagrebIndex::First),
            2 => Ok(ZagrebIndex::Second),
            3 => Ok(ZagrebIndex::Third),
            other => Err(format!("index must be 1, 2 or 3, got {other}")),
        }
    }
}

impl fmt::Display for ZagrebIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

fn weighted_sums(g: &Graph, weight: impl Fn(usize) -> u64) -> [u64; 3] {
    let overflow = "index value overflows u64";
    let m1 = (0..g.order()).try_fold(0u64, |acc, v| {
        let w = weight(v);
        acc.checked_add(w.checked_mul(w)?)
    });
    let mut m2 = Some(0u64);
    let mut m3 = Some(0u64);
    for &(u, v) in g.edges() {
        let (a, b) = (weight(u), weight(v));
        m2 = m2.and_then(|s| s.checked_add(a.checked_mul(b)?));
        m3 = m3.and_then(|s| s.checked_add(a.abs_diff(b)));
    }
    [
        m1.expect(overflow),
        m2.expect(overflow),
        m3.expect(overflow),
    ]
}

/// Classical `[M1, M2, M3]`.
pub fn classical_indices(g: &Graph) -> [u64; 3] {
    weighted_sums(g, |v| g.neighbors(v).len() as u64)
}

/// `Σ d(v)²`.
pub fn classical_m1(g: &Graph) -> u64 {
    classical_indices(g)[0]
}

/// `Σ_{uv ∈ E} d(u)·d(v)`.
pub fn classical_m2(g: &Graph) -> u64 {
    classical_indices(g)[1]
}

/// `Σ_{uv ∈ E} |d(u) − d(v)|`.
pub fn classical_m3(g: &Graph) -> u64 {
    classical_indices(g)[2]
}

/// Chromatic `[M1, M2, M3]` for one proper coloring.
pub fn chromatic_indices(g: &Graph, c: &Coloring) -> Result<[u64; 3], IndexError> {
    if let Some((u, v)) = first_conflict(g, c)? {
        return Err(ColoringError::Improper(u, v).into());
    }
    Ok(weighted_sums(g, |v| u64::from(c.color(v))))
}

pub fn chromatic_index(g: &Graph, c: &Coloring, index: ZagrebIndex) -> Result<u64, IndexError> {
    Ok(chromatic_indices(g, c)?[index.slot()])
}

/// `Σ_j θ(c_j)·j²`.
pub fn chromatic_m1(g: &Graph, c: &Coloring) -> Result<u64, IndexError> {
    chromatic_index(g, c, ZagrebIndex::First)
}

/// `Σ_{uv ∈ E} c(u)·c(v)`.
pub fn chromatic_m2(g: &Graph, c: &Coloring) -> Result<u64, IndexError> {
    chromatic_index(g, c, ZagrebIndex::Second)
}

/// `Σ_{uv ∈ E} |c(u) − c(v)|`.
pub fn chromatic_m3(g: &Graph, c: &Coloring) -> Result<u64, IndexError> {
    chromatic_index(g, c, ZagrebIndex::Third)
}
