//! Runs the `mps` binary against the golden files.

mod golden_cases;

use std::fs;
use std::process::Command;

use golden_cases::{check_case, golden_dir, CASES};

#[test]
fn golden_outputs() {
    let problems: Vec<String> = CASES.iter().flat_map(|(n, a)| check_case(n, a)).collect();
    assert!(problems.is_empty(), "{}", problems.join("\n"));
}

#[test]
fn every_golden_file_has_a_case() {
    for entry in fs::read_dir(golden_dir()).unwrap() {
        let path = entry.unwrap().path();
        let stem = path.file_stem().unwrap().to_str().unwrap().to_string();
        assert!(CASES.iter().any(|(n, _)| *n == stem), "orphan golden file {path:?}");
    }
}

#[test]
fn bench_csv_shape() {
    let out = Command::new(env!("CARGO_BIN_EXE_mps"))
        .args(["bench", "inverse", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    assert_eq!(reader.headers().unwrap(), vec!["case", "param", "seconds", "peak_terms"]);
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 9);
    let params: Vec<u32> = rows.iter().map(|r| r[1].parse().unwrap()).collect();
    assert!(params.windows(2).all(|w| w[0] <= w[1]));
    assert!(rows.iter().all(|r| r[2].parse::<f64>().unwrap() >= 0.0));
}

#[test]
fn bench_parameter_limit() {
    let out = Command::new(env!("CARGO_BIN_EXE_mps"))
        .args(["bench", "hensel", "13"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
