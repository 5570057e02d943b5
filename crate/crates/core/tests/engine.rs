use czi_core::families::{equal_multipartite_forms, multipartite_forms, tree_forms, Variant};
use czi_core::graph::{generate, parse_dimacs, parse_graph6};
use czi_core::stability::{stability_number_bruteforce, RhoOutcome};
use czi_core::{
    full_report, stability_report, ExtremaOptions, FamilySpec, Graph, Semantics, StabilityBudget,
};

fn family(text: &str) -> Graph {
    generate(&text.parse::<FamilySpec>().unwrap()).unwrap()
}

#[test]
fn complete_four() {
    let r = full_report(&family("complete:4"), &ExtremaOptions::default()).unwrap();
    assert_eq!((r.cm2_min, r.cm2_max), (35, 35));
    assert_eq!(r.m2, 54);
    assert_eq!(r.chi, 4);
}

#[test]
fn star_five() {
    let r = full_report(&family("star:5"), &ExtremaOptions::default()).unwrap();
    assert_eq!((r.cm1_min, r.cm1_max), (8, 17));
    assert_eq!((r.cm2_min, r.cm2_max, r.cm3_min, r.cm3_max), (8, 8, 4, 4));
}

#[test]
fn single_vertex_defaults() {
    let g = family("path:1");
    let plain = full_report(&g, &ExtremaOptions::default()).unwrap();
    assert_eq!(
        (plain.cm3_min, plain.paper_compat_defaults_applied),
        (0, false)
    );
    let compat = full_report(&g, &ExtremaOptions::default().with_compat(true)).unwrap();
    assert_eq!((compat.cm1_min, compat.cm2_min, compat.cm3_min), (1, 0, 1));
    assert!(compat.paper_compat_defaults_applied);
}

#[test]
fn permutation_semantics_on_a_cycle() {
    let c5 = family("cycle:5");
    let all = full_report(&c5, &ExtremaOptions::default()).unwrap();
    let perm = full_report(&c5, &ExtremaOptions::new(Semantics::Permutation)).unwrap();
    assert_eq!(perm.colorings_examined, 6);
    assert!(all.colorings_examined > perm.colorings_examined);
    assert!(all.cm1_min <= perm.cm1_min && perm.cm1_max <= all.cm1_max);
}

#[test]
fn family_tables() {
    let t = tree_forms(10).unwrap();
    assert_eq!((t.cm1_lo, t.cm1_hi, t.cm2, t.cm3), (13, 37, 18, 9));
    let k3 = equal_multipartite_forms(1, 3).unwrap();
    assert_eq!((k3.cm3_printed, k3.cm3_pairsum), (6, 4));
    let printed = multipartite_forms(&[1, 1, 1], Variant::AsPrinted).unwrap();
    let corrected = multipartite_forms(&[1, 1, 1], Variant::Corrected).unwrap();
    assert_eq!((printed.cm3, corrected.cm3), (4, 4));
    let k22 = multipartite_forms(&[2, 2], Variant::AsPrinted).unwrap();
    assert_eq!(k22.cm2_min, 0);
    let r = full_report(
        &family("complete-multipartite:2,2"),
        &ExtremaOptions::default(),
    )
    .unwrap();
    assert_eq!(r.cm2_min, 8);
    assert_eq!(
        multipartite_forms(&[2, 2], Variant::Corrected)
            .unwrap()
            .cm2_min,
        8
    );
}

#[test]
fn stability_examples() {
    let budget = StabilityBudget::default();
    assert!(!stability_report(&family("complete-bipartite:2,3"), &budget).stable);
    let p4 = stability_report(&family("path:4"), &budget);
    assert_eq!((p4.stable, p4.rho), (true, Some(1)));
    let k5 = stability_report(&family("complete:5"), &budget);
    assert!(k5.perfectly_stable && !k5.stable);
    assert_eq!(
        stability_number_bruteforce(&family("cycle:6"), &budget).unwrap(),
        RhoOutcome::Found {
            rho: 3,
            edges: vec![(0, 3), (1, 4), (2, 5)]
        }
    );
}

#[test]
fn input_formats_agree() {
    let from_dimacs = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
    let from_graph6 = parse_graph6("Bw").unwrap();
    assert_eq!(from_dimacs, family("complete:3"));
    assert_eq!(from_graph6, family("complete:3"));
}

#[test]
fn report_serializes_with_stable_names() {
    let r = full_report(&family("path:3"), &ExtremaOptions::default()).unwrap();
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["cm1_min"], 6);
    assert_eq!(json["cm1_max"], 9);
    assert_eq!(json["semantics_used"], "all");
    assert_eq!(json["witnesses"]["cm1_max"], serde_json::json!([2, 1, 2]));
    let row = r.csv_row();
    assert_eq!(row.len(), czi_core::IndexReport::CSV_HEADER.len());
}
