use thiserror::Error;

use super::{chromatic_indices, extrema_set, Budget, ExtremaOptions, ExtremaStatus};
use crate::coloring::{enumerate_min_colorings, Semantics, StrengthVector};
use crate::families::ThornInputs;
use crate::graph::Graph;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ThornInputError {
    #[error("base graph extrema exceed the enumeration budget")]
    OverBudget,
    #[error("no coloring attaining the base minimum of index {0} has non-increasing class sizes")]
    NoDescendingColoring(u8),
}

/// Class sizes of the lexicographically first minimum coloring attaining
/// `target` for `slot` whose class sizes are non-increasing.
fn descending_strengths(g: &Graph, slot: usize, target: u64) -> Option<StrengthVector> {
    enumerate_min_colorings(g, Semantics::All)
        .filter(|c| chromatic_indices(g, c).expect("proper")[slot] == target)
        .map(|c| c.strengths())
        .find(StrengthVector::is_non_increasing)
}

/// Thorn-formula inputs for `base` with `m` pendants per vertex, taken from
/// exact extrema and minimizing colorings of the base graph.
pub fn thorn_inputs(
    base: &Graph,
    m: usize,
    budget: Budget,
) -> Result<ThornInputs, ThornInputError> {
    let options = ExtremaOptions {
        budget,
        ..Default::default()
    };
    let set = extrema_set(base, &options);
    if set.status != ExtremaStatus::Exact {
        return Err(ThornInputError::OverBudget);
    }
    let mut thetas = (0..3).map(|slot| {
        descending_strengths(base, slot, set.min[slot])
            .ok_or(ThornInputError::NoDescendingColoring(slot as u8 + 1))
    });
    let (theta, theta2, theta3) = (
        thetas.next().expect("three")?,
        thetas.next().expect("three")?,
        thetas.next().expect("three")?,
    );
    Ok(ThornInputs {
        n: base.order(),
        m,
        ell: set.chi as usize,
        base_min: set.min,
        base_max: set.max,
        theta,
        theta2,
        theta3,
    })
}
