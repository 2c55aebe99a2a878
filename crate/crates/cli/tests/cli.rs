use std::collections::{BTreeMap, BTreeSet};
use std::process::{Command, Output};

use canonical_symbols::{canonical_vector_of, monomial_oracle, Bipartition, Laurent};
use serde_json::Value;

fn cansym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cansym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = cansym(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_of(args)).unwrap()
}

const BLOCK_LATEX: &str = r"\begin{array}{l|ccccc}
 & ((0,0,0),(3,3)) & ((0,0,1),(2,3)) & ((0,0,2),(2,2)) & ((0,1,1),(1,3)) & ((0,1,2),(1,2)) \\
\hline
((0,0,0),(3,3)) & 1 & \cdot & \cdot & \cdot & \cdot \\
((0,0,1),(2,3)) & v & 1 & \cdot & \cdot & \cdot \\
((0,0,2),(2,2)) & \cdot & v & 1 & \cdot & \cdot \\
((0,1,1),(1,3)) & \cdot & v & \cdot & 1 & \cdot \\
((0,1,2),(1,2)) & v & v^{2} & v & v & 1 \\
((1,1,1),(0,3)) & \cdot & \cdot & \cdot & v & \cdot \\
((0,2,2),(1,1)) & v^{2} & \cdot & \cdot & \cdot & v \\
((1,1,2),(0,2)) & \cdot & \cdot & \cdot & v^{2} & v \\
((1,2,2),(0,1)) & \cdot & \cdot & v & \cdot & v^{2} \\
((2,2,2),(0,0)) & \cdot & \cdot & v^{2} & \cdot & \cdot \\
\end{array}
";

#[test]
fn latex_weight_block() {
    let out = stdout_of(&[
        "canonical",
        "--m",
        "6",
        "--r",
        "1",
        "--weight-of",
        "((0,1,2),(1,2))",
        "--format",
        "latex",
    ]);
    assert_eq!(out, BLOCK_LATEX);
}

#[test]
fn weight_raw_selects_the_same_block() {
    // contents of ((1,2),(1,2)) with charges (1, 0): {1,2,0} and {0,1,-1}
    let of = stdout_of(&[
        "canonical",
        "--m",
        "6",
        "--r",
        "1",
        "--weight-of",
        "((0,1,2),(1,2))",
    ]);
    let raw = stdout_of(&[
        "canonical",
        "--m",
        "6",
        "--r",
        "1",
        "--weight-raw",
        "-1:1,0:2,1:2,2:1",
    ]);
    assert_eq!(of, raw);
}

#[test]
fn degree_zero_json() {
    let doc = json_of(&["canonical", "--m", "0", "--r", "2", "--format", "json"]);
    assert_eq!(doc["rows"], serde_json::json!(["((0,0),())"]));
    assert_eq!(doc["entries"], serde_json::json!([[[[0, 1]]]]));
}

#[test]
fn csv_matrix_matches_oracle() {
    let out = stdout_of(&["canonical", "--m", "3", "--r", "0", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    let columns: Vec<Bipartition> = header[1..]
        .iter()
        .map(|l| Bipartition::parse_label(l, 0, 0).unwrap())
        .collect();
    let mut cells: BTreeMap<(Bipartition, usize), String> = BTreeMap::new();
    let mut rows = 0;
    for rec in reader.records() {
        let rec = rec.unwrap();
        let row = Bipartition::parse_label(&rec[0], 0, 0).unwrap();
        for c in 0..columns.len() {
            cells.insert((row.clone(), c), rec[c + 1].to_string());
        }
        rows += 1;
    }
    assert_eq!(rows, 10);
    for (c, col) in columns.iter().enumerate() {
        let (oracle, _) = monomial_oracle::<i64>(&col.to_symbol_default()).unwrap();
        for ((row, cc), text) in &cells {
            if *cc == c {
                assert_eq!(
                    text,
                    &oracle.coeff(row).to_string(),
                    "row {row}, column {col}"
                );
            }
        }
    }
}

#[test]
fn json_entries_round_trip() {
    let doc = json_of(&["canonical", "--m", "4", "--r", "1"]);
    let columns: Vec<Bipartition> = doc["columns"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| Bipartition::parse_label(l.as_str().unwrap(), 0, 1).unwrap())
        .collect();
    let rows: Vec<Bipartition> = doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| Bipartition::parse_label(l.as_str().unwrap(), 0, 1).unwrap())
        .collect();
    let entries: Vec<Vec<Laurent>> = serde_json::from_value(doc["entries"].clone()).unwrap();
    for (c, col) in columns.iter().enumerate() {
        let v = canonical_vector_of::<i64>(col).unwrap();
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(entries[r][c], v.coeff(row));
        }
    }
}

#[test]
fn words_are_listed_per_column() {
    let doc = json_of(&["canonical", "--m", "2", "--r", "1", "--show-word"]);
    let words = doc["words"].as_array().unwrap();
    assert_eq!(words.len(), doc["columns"].as_array().unwrap().len());
    assert!(words.iter().all(|w| w.as_str().unwrap().starts_with("f_")));
}

fn supports(doc: &Value) -> Vec<BTreeMap<String, (i64, i64)>> {
    doc.as_array()
        .unwrap()
        .iter()
        .map(|c| {
            c["terms"]
                .as_array()
                .unwrap()
                .iter()
                .map(|t| {
                    let label = t["label"].as_str().unwrap().to_string();
                    let tag = t["tag"].as_str().map_or(String::new(), |s| format!(" {s}"));
                    (
                        label + &tag,
                        (
                            t["coeff"][0].as_i64().unwrap(),
                            t["coeff"][1].as_i64().unwrap(),
                        ),
                    )
                })
                .collect()
        })
        .collect()
}

#[test]
fn type_b_records_specialize_canonical_vectors() {
    let doc = json_of(&["constructible", "--type", "B", "--m", "2", "--r", "1"]);
    let records = doc.as_array().unwrap();
    assert_eq!(records.len(), 4);
    for rec in records {
        assert_eq!(rec["type"], "B");
        let s = Bipartition::parse_label(rec["symbol"].as_str().unwrap(), 0, 1).unwrap();
        let v = canonical_vector_of::<i64>(&s).unwrap();
        let expected: BTreeMap<String, (i64, i64)> = v
            .specialize()
            .unwrap()
            .into_iter()
            .map(|(bp, c)| (bp.to_string(), (c, 1)))
            .collect();
        assert_eq!(supports(&Value::Array(vec![rec.clone()]))[0], expected);
    }
}

#[test]
fn type_d_degree_zero() {
    let doc = json_of(&["constructible", "--type", "D", "--m", "0"]);
    let tags: Vec<&str> = doc
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["terms"][0]["tag"].as_str().unwrap())
        .collect();
    assert_eq!(tags, vec!["I", "II"]);
}

#[test]
fn type_b_supports_fall_into_families() {
    let doc = json_of(&["constructible", "--type", "B", "--m", "4", "--r", "0"]);
    let fams = json_of(&["families", "--d", "2", "--charges", "0,0", "--m", "4"]);
    let block_of: BTreeMap<String, usize> = fams
        .as_array()
        .unwrap()
        .iter()
        .enumerate()
        .flat_map(|(i, f)| {
            f["members"]
                .as_array()
                .unwrap()
                .iter()
                .map(move |m| (m.as_str().unwrap().to_string(), i))
        })
        .collect();
    let mut covered = BTreeSet::new();
    for support in supports(&doc) {
        let blocks: BTreeSet<usize> = support
            .keys()
            .map(|l| {
                let bp = Bipartition::parse_label(l, 0, 0).unwrap();
                block_of[&bp.to_dpartition().to_string()]
            })
            .collect();
        assert_eq!(blocks.len(), 1);
        covered.extend(support.into_keys());
    }
    assert_eq!(covered.len(), 20);
}

#[test]
fn literal_type_d_has_halves() {
    let doc = json_of(&["constructible", "--type", "D", "--m", "2", "--literal"]);
    let halves = supports(&doc)
        .into_iter()
        .flat_map(|s| s.into_values())
        .filter(|&q| q == (1, 2))
        .count();
    assert!(halves > 0);
    let out = cansym(&["constructible", "--type", "B", "--m", "2", "--literal"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn type_d_rejects_nonzero_r() {
    let out = cansym(&["constructible", "--type", "D", "--m", "2", "--r", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("flag conflict"));
}

#[test]
fn families_examples() {
    let doc = json_of(&["families", "--d", "2", "--charges", "1,0", "--m", "2"]);
    let sizes: Vec<usize> = doc
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["members"].as_array().unwrap().len())
        .collect();
    assert_eq!(sizes, vec![3, 1, 1]);
    let doc = json_of(&["families", "--d", "1", "--charges", "0", "--m", "3"]);
    assert!(doc
        .as_array()
        .unwrap()
        .iter()
        .all(|f| f["members"].as_array().unwrap().len() == 1));
    assert_eq!(doc.as_array().unwrap().len(), 3);
    let doc = json_of(&["families", "--d", "3", "--charges", "0,0,0", "--m", "0"]);
    assert_eq!(doc.as_array().unwrap().len(), 1);
}

#[test]
fn families_negative_charges() {
    let doc = json_of(&["families", "--d", "2", "--charges", "-1,-2", "--m", "1"]);
    assert_eq!(doc.as_array().unwrap().len(), 2);
}

#[test]
fn arity_mismatch() {
    let out = cansym(&["families", "--d", "2", "--charges", "1", "--m", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("arity"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(cansym(&["canonical"]).status.code(), Some(1));
    assert_eq!(
        cansym(&["canonical", "--m", "2", "--format", "xml"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        cansym(&["canonical", "--m", "2", "--weight-of", "((1),"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(cansym(&["bogus"]).status.code(), Some(1));
}

#[test]
fn verify_reports() {
    let out = stdout_of(&["verify", "--max-m", "0", "--max-r", "0"]);
    assert!(out.contains("all checks passed"));
    let out = stdout_of(&["verify", "--max-m", "5", "--max-r", "3"]);
    assert!(!out.contains("FAIL"));
    assert!(!out.contains("weight block of degree 6"));
    let out = stdout_of(&["verify", "--max-m", "6", "--max-r", "1"]);
    assert!(out.contains("PASS weight block of degree 6"));
    let doc = json_of(&["verify", "--max-m", "2", "--max-r", "1", "--json"]);
    assert!(doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["failures"] == 0));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["canonical", "--m", "5", "--r", "2", "--format", "csv"][..],
        &["constructible", "--type", "D", "--m", "4"][..],
        &[
            "families",
            "--d",
            "3",
            "--charges",
            "2,1,0",
            "--m",
            "3",
            "--format",
            "latex",
        ][..],
    ] {
        assert_eq!(stdout_of(args), stdout_of(args));
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("block.tex");
    let out = stdout_of(&[
        "canonical",
        "--m",
        "6",
        "--r",
        "1",
        "--weight-of",
        "((0,1,2),(1,2))",
        "--format",
        "latex",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), BLOCK_LATEX);
}
