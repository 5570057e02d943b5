//! Classical and chromatic Zagreb indices of simple graphs: exact extrema
//! over minimum colorings, closed forms for named families, chromatic
//! stability, and a claim-verification harness.

pub mod coloring;
pub mod families;
pub mod graph;
pub mod indices;
pub mod stability;
pub mod verify;

pub use coloring::{Coloring, Semantics, StrengthVector};
pub use graph::{FamilySpec, Graph};
pub use indices::{
    chromatic_extrema, extrema_set, full_report, Budget, ExtremaOptions, ExtremaSet, ExtremaStatus,
    IndexReport, ZagrebIndex,
};
pub use stability::{stability_report, StabilityBudget, StabilityReport};
pub use verify::{run_claims, select_claims, ClaimResult, CorpusConfig, Verdict, VerifyReport};
