use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use czi_core::verify::registry;
use serde_json::Value;

fn czi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_czi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn json(output: &Output) -> Value {
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).unwrap()
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../schema")
        .join(name);
    let text = std::fs::read_to_string(path).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_valid(validator: &jsonschema::Validator, value: &Value) {
    let errors: Vec<String> = validator
        .iter_errors(value)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{errors:?}");
}

#[test]
fn compute_examples() {
    let k4 = json(&czi(&["compute", "--family", "complete:4"]));
    assert_eq!(
        (k4["cm2_min"].as_u64(), k4["cm2_max"].as_u64()),
        (Some(35), Some(35))
    );
    assert!(k4.get("witnesses").is_none());
    let star = json(&czi(&["compute", "--family", "star:5"]));
    assert_eq!(
        (star["cm1_min"].as_u64(), star["cm1_max"].as_u64()),
        (Some(8), Some(17))
    );
    let k1 = json(&czi(&[
        "compute",
        "--family",
        "path:1",
        "--paper-compat",
        "on",
    ]));
    assert_eq!(k1["cm3_min"], 1);
    let plain = json(&czi(&["compute", "--family", "path:1"]));
    assert_eq!(plain["cm3_min"], 0);
}

#[test]
fn compute_output_matches_schema() {
    let validator = schema("index_report.schema.json");
    for args in [
        vec!["compute", "--family", "cycle:5", "--witness"],
        vec![
            "compute",
            "--family",
            "thorn(complete:3;1)",
            "--semantics",
            "permutation",
        ],
        vec![
            "compute",
            "--family",
            "complete:12",
            "--max-colorings",
            "1000",
        ],
    ] {
        assert_valid(&validator, &json(&czi(&args)));
    }
    let witnessed = json(&czi(&["compute", "--family", "path:3", "--witness"]));
    assert_eq!(
        witnessed["witnesses"]["cm1_max"],
        serde_json::json!([2, 1, 2])
    );
}

#[test]
fn compute_reads_every_file_format() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| -> PathBuf {
        let path = dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        path
    };
    let g6 = write("two.g6", "Bw\nCr\n");
    let col = write("k3.col", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    let txt = write("p3.txt", "0 1\n1 2\n");
    let both = json(&czi(&["compute", "--input", g6.to_str().unwrap()]));
    assert_eq!(both.as_array().map(Vec::len), Some(2));
    assert_valid(&schema("index_report.schema.json"), &both);
    assert_eq!(
        json(&czi(&["compute", "--input", col.to_str().unwrap()]))["cm1_min"],
        14
    );
    assert_eq!(
        json(&czi(&["compute", "--input", txt.to_str().unwrap()]))["cm1_max"],
        9
    );
    let csv = czi(&[
        "compute",
        "--input",
        g6.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&csv).lines().count(), 3);

    let bad = write("bad.g6", "B\u{7f}\n");
    assert_eq!(
        czi(&["compute", "--input", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let unknown = write("graph.dat", "0 1\n");
    assert_eq!(
        czi(&["compute", "--input", unknown.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(
        czi(&["compute", "--family", "path:3", "--input", "x.g6"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(czi(&["compute"]).status.code(), Some(1));
    assert_eq!(
        czi(&["compute", "--input", "/nonexistent/graph.g6"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        czi(&["compute", "--family", "wheel:5"]).status.code(),
        Some(2)
    );
    assert_eq!(czi(&["family", "cycle:5"]).status.code(), Some(1));
    assert_eq!(czi(&["family", "tree:3"]).status.code(), Some(2));
    let unknown = czi(&["verify", "--claims", "nonsense"]);
    assert_ne!(unknown.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&unknown.stderr).contains("unknown claim id"));
}

#[test]
fn strict_budget_exit() {
    let tight = [
        "compute",
        "--family",
        "complete:12",
        "--max-colorings",
        "1000",
    ];
    assert_eq!(czi(&tight).status.code(), Some(0));
    let mut strict = tight.to_vec();
    strict.push("--strict");
    assert_eq!(czi(&strict).status.code(), Some(4));
    let stability = [
        "stability",
        "--family",
        "cycle:7",
        "--max-order",
        "4",
        "--strict",
    ];
    assert_eq!(czi(&stability).status.code(), Some(4));
}

#[test]
fn family_examples() {
    let out = czi(&[
        "family",
        "multipartite:1,1,1",
        "--variant",
        "both",
        "--format",
        "json",
    ]);
    let report = json(&out);
    assert_valid(&schema("family_report.schema.json"), &report);
    let rows = report["rows"].as_array().unwrap();
    let variants: Vec<&str> = rows
        .iter()
        .map(|r| r["formula_variant"].as_str().unwrap())
        .collect();
    assert_eq!(variants, ["as_printed", "corrected", "oracle"]);
    assert!(rows.iter().all(|r| r["cm3_min"] == 4));

    let tree = json(&czi(&["family", "tree:10", "--format", "json"]));
    let row = &tree["rows"][0];
    let values: Vec<u64> = ["cm1_min", "cm1_max", "cm2_min", "cm3_min"]
        .iter()
        .map(|k| row[k].as_u64().unwrap())
        .collect();
    assert_eq!(values, [13, 37, 18, 9]);
    assert_eq!(tree["relation"], "bounds");

    let k3 = json(&czi(&[
        "family",
        "equal-multipartite:1,3",
        "--format",
        "json",
    ]));
    let cm3: Vec<u64> = k3["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["cm3_min"].as_u64().unwrap())
        .collect();
    assert_eq!(cm3, [6, 4, 4]);

    let table = stdout(&czi(&["family", "thorn(path:4;1)"]));
    assert!(table
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["cm1_min", "20", "20"]));
    let csv = stdout(&czi(&["family", "complete:4", "--format", "csv"]));
    assert!(csv.starts_with("family,formula_variant,order"));
    assert!(csv.lines().nth(1).unwrap().contains(",54,"));
}

#[test]
fn stability_examples() {
    let validator = schema("stability_report.schema.json");
    let k23 = json(&czi(&[
        "stability",
        "--family",
        "complete-bipartite:2,3",
        "--format",
        "json",
    ]));
    assert_valid(&validator, &k23);
    assert_eq!(k23["stable"], false);
    let p4 = json(&czi(&[
        "stability",
        "--family",
        "path:4",
        "--format",
        "json",
    ]));
    assert_eq!(
        (p4["stable"].as_bool(), p4["rho"].as_u64()),
        (Some(true), Some(1))
    );
    let k5 = json(&czi(&[
        "stability",
        "--family",
        "complete:5",
        "--format",
        "json",
    ]));
    assert_eq!(k5["perfectly_stable"], true);
    let c5 = json(&czi(&[
        "stability",
        "--family",
        "cycle:5",
        "--format",
        "json",
    ]));
    assert_valid(&validator, &c5);
    assert_eq!(c5["method"], "brute_force");
    assert_eq!(
        stdout(&czi(&["stability", "--family", "path:4"])),
        "chi=2 stable, rho=1\n"
    );
}

#[test]
fn verify_observations() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("obs.json");
    let run = czi(&[
        "verify",
        "--claims",
        "obs-i..obs-xii",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(run.status.code(), Some(0));
    assert!(stdout(&run).contains("verified=12 counterexample=0"));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_valid(&schema("verify_report.schema.json"), &report);
    assert_eq!(report["config"]["seeds"], serde_json::json!([0]));
}

#[test]
fn verify_multipartite_variants() {
    let run = czi(&[
        "verify",
        "--claims",
        "lem-3.2",
        "--max-order",
        "6",
        "--out",
        "-",
    ]);
    assert_eq!(run.status.code(), Some(0));
    let report = json(&run);
    assert_valid(&schema("verify_report.schema.json"), &report);
    let listed = String::from_utf8_lossy(&run.stderr).to_string();
    assert!(listed.contains("counterexample lem-3.2-ii-printed complete-multipartite:2,2"));
    let claims = report["claims"].as_array().unwrap();
    let corrected = claims
        .iter()
        .find(|c| c["id"] == "lem-3.2-ii-corrected")
        .unwrap();
    assert_eq!(corrected["counts"]["counterexample"], 0);
    assert_eq!(corrected["counts"]["verified"], 31);
}

#[test]
fn verify_is_byte_identical_across_runs_and_job_counts() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<PathBuf> = (0..3)
        .map(|i| dir.path().join(format!("r{i}.json")))
        .collect();
    let claims = "thm-2.2,cor-2.3,thm-3.1,thm-4.2,oracle-extrema,prop-4.6";
    for (i, path) in paths.iter().enumerate() {
        let jobs = ["1", "4", "2"][i];
        let run = Command::new(env!("CARGO_BIN_EXE_czi"))
            .args([
                "verify",
                "--seed",
                "0",
                "--claims",
                claims,
                "--out",
                path.to_str().unwrap(),
            ])
            .env("CZI_JOBS", jobs)
            .output()
            .unwrap();
        assert_eq!(run.status.code(), Some(0));
    }
    let bytes: Vec<Vec<u8>> = paths.iter().map(|p| std::fs::read(p).unwrap()).collect();
    assert_eq!(bytes[0], bytes[1]);
    assert_eq!(bytes[0], bytes[2]);
}

#[test]
fn verify_csv_report() {
    let run = czi(&["verify", "--claims", "obs", "--format", "csv", "--out", "-"]);
    let text = stdout(&run);
    assert!(text.starts_with("claim_id,must_hold,instance,graph6,expected,actual,verdict,witness"));
    assert_eq!(text.lines().count(), 1 + 12 + 12);
}

#[test]
fn help_lists_every_claim() {
    for args in [vec!["--help"], vec!["verify", "--help"]] {
        let help = stdout(&czi(&args));
        for claim in registry() {
            assert!(
                help.contains(claim.id),
                "{} missing from {args:?}",
                claim.id
            );
        }
    }
}
