use serde::{Deserialize, Serialize};

use super::{
    chromatic_indices, classical_indices, extrema_set, ExtremaOptions, ExtremaStatus, IndexError,
};
use crate::coloring::{Coloring, Semantics};
use crate::graph::Graph;

/// Witness colorings, one per reported extremum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub cm1_min: Coloring,
    pub cm1_max: Coloring,
    pub cm2_min: Coloring,
    pub cm2_max: Coloring,
    pub cm3_min: Coloring,
    pub cm3_max: Coloring,
}

impl Witnesses {
    fn slots(&self) -> [(&'static str, &Coloring); 6] {
        [
            ("cm1_min", &self.cm1_min),
            ("cm1_max", &self.cm1_max),
            ("cm2_min", &self.cm2_min),
            ("cm2_max", &self.cm2_max),
            ("cm3_min", &self.cm3_min),
            ("cm3_max", &self.cm3_max),
        ]
    }
}

/// Classical and chromatic indices of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub order: usize,
    pub size: usize,
    pub connected: bool,
    pub chi: u32,
    pub m1: u64,
    pub m2: u64,
    pub m3: u64,
    pub cm1_min: u64,
    pub cm1_max: u64,
    pub cm2_min: u64,
    pub cm2_max: u64,
    pub cm3_min: u64,
    pub cm3_max: u64,
    pub semantics_used: Semantics,
    pub paper_compat_defaults_applied: bool,
    pub status: ExtremaStatus,
    pub colorings_examined: u64,
    pub witnesses: Witnesses,
}

impl IndexReport {
    pub const CSV_HEADER: [&'static str; 17] = [
        "order",
        "size",
        "connected",
        "chi",
        "m1",
        "m2",
        "m3",
        "cm1_min",
        "cm1_max",
        "cm2_min",
        "cm2_max",
        "cm3_min",
        "cm3_max",
        "semantics_used",
        "paper_compat_defaults_applied",
        "status",
        "colorings_examined",
    ];

    /// CSV fields matching [`IndexReport::CSV_HEADER`]; witnesses are not
    /// part of the row.
    pub fn csv_row(&self) -> Vec<String> {
        let status = match self.status {
            ExtremaStatus::Exact => "exact",
            ExtremaStatus::BoundsOnly => "bounds_only",
        };
        vec![
            self.order.to_string(),
            self.size.to_string(),
            self.connected.to_string(),
            self.chi.to_string(),
            self.m1.to_string(),
            self.m2.to_string(),
            self.m3.to_string(),
            self.cm1_min.to_string(),
            self.cm1_max.to_string(),
            self.cm2_min.to_string(),
            self.cm2_max.to_string(),
            self.cm3_min.to_string(),
            self.cm3_max.to_string(),
            self.semantics_used.to_string(),
            self.paper_compat_defaults_applied.to_string(),
            status.to_string(),
            self.colorings_examined.to_string(),
        ]
    }

    pub fn values(&self) -> [(&'static str, u64); 6] {
        [
            ("cm1_min", self.cm1_min),
            ("cm1_max", self.cm1_max),
            ("cm2_min", self.cm2_min),
            ("cm2_max", self.cm2_max),
            ("cm3_min", self.cm3_min),
            ("cm3_max", self.cm3_max),
        ]
    }
}

/// Computes every index of `g` and re-evaluates each witness before
/// returning. Under paper-compat defaults the edge indices of an edgeless
/// graph are not sums of their witness, so only the first index is checked
/// there.
pub fn full_report(g: &Graph, options: &ExtremaOptions) -> Result<IndexReport, IndexError> {
    let set = extrema_set(g, options);
    let [m1, m2, m3] = classical_indices(g);
    let witnesses = Witnesses {
        cm1_min: set.min_witness[0].clone(),
        cm1_max: set.max_witness[0].clone(),
        cm2_min: set.min_witness[1].clone(),
        cm2_max: set.max_witness[1].clone(),
        cm3_min: set.min_witness[2].clone(),
        cm3_max: set.max_witness[2].clone(),
    };
    let report = IndexReport {
        order: g.order(),
        size: g.size(),
        connected: g.is_connected(),
        chi: set.chi,
        m1,
        m2,
        m3,
        cm1_min: set.min[0],
        cm1_max: set.max[0],
        cm2_min: set.min[1],
        cm2_max: set.max[1],
        cm3_min: set.min[2],
        cm3_max: set.max[2],
        semantics_used: set.semantics,
        paper_compat_defaults_applied: set.compat_applied,
        status: set.status,
        colorings_examined: set.colorings_examined,
        witnesses,
    };
    let checked = if report.paper_compat_defaults_applied {
        2
    } else {
        6
    };
    for (slot, ((name, witness), (_, reported))) in report
        .witnesses
        .slots()
        .into_iter()
        .zip(report.values())
        .enumerate()
        .take(checked)
    {
        let evaluated = chromatic_indices(g, witness)?[slot / 2];
        if witness.palette_size() != report.chi || evaluated != reported {
            return Err(IndexError::WitnessMismatch {
                name,
                evaluated,
                reported,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn report(text: &str, compat: bool) -> IndexReport {
        let g = generate(&text.parse::<FamilySpec>().unwrap()).unwrap();
        full_report(&g, &ExtremaOptions::default().with_compat(compat)).unwrap()
    }

    #[test]
    fn golden_reports() {
        let k1 = report("path:1", true);
        assert_eq!((k1.m1, k1.cm3_min, k1.cm3_max), (0, 1, 1));
        assert!(k1.paper_compat_defaults_applied);
        let k2 = report("complete:2", false);
        assert_eq!((k2.cm1_min, k2.cm1_max), (5, 5));
        let p4 = report("path:4", false);
        assert_eq!((p4.cm1_min, p4.cm1_max), (10, 10));
        let k4 = report("complete:4", false);
        assert_eq!((k4.cm2_min, k4.cm2_max, k4.m2), (35, 35, 54));
    }

    #[test]
    fn json_field_names_are_stable() {
        let value = serde_json::to_value(report("path:3", false)).unwrap();
        for key in IndexReport::CSV_HEADER {
            assert!(value.get(key).is_some(), "missing {key}");
        }
        assert_eq!(value["semantics_used"], "all");
        assert_eq!(value["status"], "exact");
        assert_eq!(value["witnesses"]["cm1_max"], serde_json::json!([2, 1, 2]));
    }

    #[test]
    fn csv_row_matches_header() {
        let r = report("cycle:5", false);
        let row = r.csv_row();
        assert_eq!(row.len(), IndexReport::CSV_HEADER.len());
        assert_eq!(row[7], "19");
        assert_eq!(row[15], "exact");
    }
}
