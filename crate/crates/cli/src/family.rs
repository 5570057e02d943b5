use czi_core::families::{
    complete_graph_forms, equal_multipartite_forms, multipartite_forms, thorn_forms, tree_forms,
    Variant,
};
use czi_core::graph::{generate, Pendants};
use czi_core::indices::thorn_inputs;
use czi_core::{full_report, Budget, ExtremaOptions, ExtremaStatus, FamilySpec};
use serde::Serialize;

use crate::input::parse_family;
use crate::CliError;

/// One column of the family table: a closed-form variant or the oracle.
#[derive(Clone, Debug, Default, Serialize)]
pub struct FamilyRow {
    pub formula_variant: String,
    pub order: usize,
    pub size: Option<usize>,
    pub chi: Option<u32>,
    pub m1: Option<u64>,
    pub m2: Option<u64>,
    pub m3: Option<u64>,
    pub cm1_min: Option<u64>,
    pub cm1_max: Option<u64>,
    pub cm2_min: Option<u64>,
    pub cm2_max: Option<u64>,
    pub cm3_min: Option<u64>,
    pub cm3_max: Option<u64>,
}

impl FamilyRow {
    const FIELDS: [&'static str; 9] = [
        "m1", "m2", "m3", "cm1_min", "cm1_max", "cm2_min", "cm2_max", "cm3_min", "cm3_max",
    ];

    fn values(&self) -> [Option<u64>; 9] {
        [
            self.m1,
            self.m2,
            self.m3,
            self.cm1_min,
            self.cm1_max,
            self.cm2_min,
            self.cm2_max,
            self.cm3_min,
            self.cm3_max,
        ]
    }

    fn chromatic(variant: &str, order: usize, v: [u64; 6]) -> FamilyRow {
        FamilyRow {
            formula_variant: variant.to_string(),
            order,
            cm1_min: Some(v[0]),
            cm1_max: Some(v[1]),
            cm2_min: Some(v[2]),
            cm2_max: Some(v[3]),
            cm3_min: Some(v[4]),
            cm3_max: Some(v[5]),
            ..Default::default()
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub order: usize,
    /// `bounds` when the first-index entries are a lower and an upper bound
    /// (trees), `exact` otherwise.
    pub relation: String,
    pub rows: Vec<FamilyRow>,
}

pub struct FamilyOptions {
    pub variants: Vec<Variant>,
    pub oracle_max_order: usize,
    pub budget: Budget,
}

fn invalid(e: impl ToString) -> CliError {
    CliError::Parse(e.to_string())
}

fn closed_forms(
    spec: &FamilySpec,
    text: &str,
    options: &FamilyOptions,
) -> Result<(String, Vec<FamilyRow>), CliError> {
    let n = spec.order();
    let mut rows = Vec::new();
    let mut relation = "exact";
    match spec {
        FamilySpec::Complete(k) => {
            let f = complete_graph_forms(*k).map_err(invalid)?;
            for variant in &options.variants {
                let mut row = FamilyRow::chromatic(
                    &variant.to_string(),
                    n,
                    [f.cm1, f.cm1, f.cm2, f.cm2, f.cm3, f.cm3],
                );
                (row.m1, row.m2, row.m3) = (Some(f.m1), Some(f.m2), Some(f.m3));
                rows.push(row);
            }
        }
        FamilySpec::CompleteMultipartite(sizes) if text.starts_with("equal-multipartite") => {
            let f = equal_multipartite_forms(sizes[0], sizes.len()).map_err(invalid)?;
            for variant in &options.variants {
                let cm3 = match variant {
                    Variant::AsPrinted => f.cm3_printed,
                    Variant::Corrected => f.cm3_pairsum,
                };
                rows.push(FamilyRow::chromatic(
                    &variant.to_string(),
                    n,
                    [f.cm1, f.cm1, f.cm2, f.cm2, cm3, cm3],
                ));
            }
        }
        FamilySpec::CompleteMultipartite(sizes) => {
            for variant in &options.variants {
                let f = multipartite_forms(sizes, *variant).map_err(invalid)?;
                rows.push(FamilyRow::chromatic(
                    &variant.to_string(),
                    n,
                    [f.cm1_min, f.cm1_max, f.cm2_min, f.cm2_max, f.cm3, f.cm3],
                ));
            }
        }
        FamilySpec::Path(_) | FamilySpec::Star(_) | FamilySpec::Caterpillar(_) => {
            let f = tree_forms(n).map_err(invalid)?;
            relation = "bounds";
            if options.variants.contains(&Variant::AsPrinted) {
                rows.push(FamilyRow::chromatic(
                    "as_printed",
                    n,
                    [f.cm1_lo, f.cm1_hi, f.cm2, f.cm2, f.cm3, f.cm3],
                ));
            }
        }
        FamilySpec::Thorn {
            base,
            pendants: Pendants::Uniform(m),
        } => {
            let base_graph = generate(base).map_err(invalid)?;
            let inputs = thorn_inputs(&base_graph, *m, options.budget).map_err(invalid)?;
            let f = thorn_forms(&inputs).map_err(invalid)?;
            if options.variants.contains(&Variant::AsPrinted) {
                rows.push(FamilyRow::chromatic("as_printed", n, f.values()));
            }
        }
        _ => {
            return Err(CliError::Usage(format!(
                "no closed form for {text}; supported: complete, tree, path, star, caterpillar, \
                 multipartite, complete-bipartite, equal-multipartite, thorn(base;m)"
            )))
        }
    }
    Ok((relation.to_string(), rows))
}

pub fn family_report(text: &str, options: &FamilyOptions) -> Result<FamilyReport, CliError> {
    if let Some(n) = text.strip_prefix("tree:") {
        let n: usize = n
            .parse()
            .map_err(|_| CliError::Parse(format!("tree order {n:?}")))?;
        let f = tree_forms(n).map_err(invalid)?;
        let rows = if options.variants.contains(&Variant::AsPrinted) {
            vec![FamilyRow::chromatic(
                "as_printed",
                n,
                [f.cm1_lo, f.cm1_hi, f.cm2, f.cm2, f.cm3, f.cm3],
            )]
        } else {
            Vec::new()
        };
        return Ok(FamilyReport {
            family: text.to_string(),
            order: n,
            relation: "bounds".to_string(),
            rows,
        });
    }
    let spec = parse_family(text)?;
    let (relation, mut rows) = closed_forms(&spec, text, options)?;
    let order = spec.order();
    if order <= options.oracle_max_order {
        let g = generate(&spec).map_err(invalid)?;
        let report = full_report(
            &g,
            &ExtremaOptions {
                budget: options.budget,
                ..Default::default()
            },
        )
        .map_err(invalid)?;
        if report.status == ExtremaStatus::Exact {
            rows.push(FamilyRow {
                formula_variant: "oracle".to_string(),
                order,
                size: Some(report.size),
                chi: Some(report.chi),
                m1: Some(report.m1),
                m2: Some(report.m2),
                m3: Some(report.m3),
                cm1_min: Some(report.cm1_min),
                cm1_max: Some(report.cm1_max),
                cm2_min: Some(report.cm2_min),
                cm2_max: Some(report.cm2_max),
                cm3_min: Some(report.cm3_min),
                cm3_max: Some(report.cm3_max),
            });
        }
    }
    Ok(FamilyReport {
        family: text.to_string(),
        order,
        relation,
        rows,
    })
}

impl FamilyReport {
    pub fn csv_header() -> Vec<&'static str> {
        let mut header = vec!["family", "formula_variant", "order", "size", "chi"];
        header.extend(FamilyRow::FIELDS);
        header
    }

    pub fn csv_rows(&self) -> Vec<Vec<String>> {
        let show = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        self.rows
            .iter()
            .map(|row| {
                let mut out = vec![
                    self.family.clone(),
                    row.formula_variant.clone(),
                    row.order.to_string(),
                    row.size.map(|s| s.to_string()).unwrap_or_default(),
                    row.chi.map(|c| c.to_string()).unwrap_or_default(),
                ];
                out.extend(row.values().into_iter().map(show));
                out
            })
            .collect()
    }

    /// Quantities down, variants across; blank where a variant has no value.
    pub fn table(&self) -> String {
        let mut lines = vec![format!(
            "{} (order {}{})",
            self.family,
            self.order,
            if self.relation == "bounds" {
                "; cm1_min and cm1_max are bounds for every tree"
            } else {
                ""
            }
        )];
        let mut header = format!("{:<10}", "quantity");
        for row in &self.rows {
            header.push_str(&format!(" {:>12}", row.formula_variant));
        }
        lines.push(header);
        for (i, name) in FamilyRow::FIELDS.iter().enumerate() {
            if self.rows.iter().all(|r| r.values()[i].is_none()) {
                continue;
            }
            let mut line = format!("{name:<10}");
            for row in &self.rows {
                let cell = row.values()[i].map(|v| v.to_string()).unwrap_or_default();
                line.push_str(&format!(" {cell:>12}"));
            }
            lines.push(line);
        }
        lines.join("\n") + "\n"
    }
}
