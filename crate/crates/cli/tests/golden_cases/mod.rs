//! Shared table of CLI golden cases, stored under `tests/golden/<name>.{out,err,code}`.
//! A missing `.err` file means standard error must be empty.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

pub const CASES: &[(&str, &[&str])] = &[
    ("invert_geometric", &["invert", "--vars", "x,y", "--degree", "2", "1 - x - y"]),
    ("multiply_conjugates", &["multiply", "--vars", "x", "--degree", "3", "1+x", "1-x"]),
    ("invert_not_unit", &["invert", "--vars", "x", "x + x^2"]),
    ("weierstrass_catalan", &["weierstrass", "--vars", "X1", "--main", "X2", "--degree", "4", "X2^2 + X2 + X1"]),
    ("weierstrass_unit", &["weierstrass", "--vars", "X1", "--main", "X2", "--degree", "3", "X2^2 + X1*X2 + 1 + X1"]),
    ("weierstrass_not_prepared", &["weierstrass", "--vars", "X1", "--main", "X2", "X1*X2^2 + X1"]),
    (
        "hensel_cubic",
        &["hensel", "--vars", "X1", "--main", "X2", "--degree", "3", "(X2-1)*(X2-2)*(X2-3) + X1*(X2^2 + X2)"],
    ),
    ("hensel_irrational", &["hensel", "--main", "X2", "X2^2 + 1"]),
    ("hensel_not_unit", &["hensel", "--vars", "X1", "--main", "X2", "X1*X2^2 + X2 + 1"]),
    ("bench_unknown", &["bench", "bogus", "5"]),
    ("truncate_json", &["truncate", "--vars", "x,y", "--degree", "2", "--format", "json", "(1+x+y)^3"]),
    ("truncate_text", &["truncate", "--vars", "x,y", "--degree", "2", "(1+x+y)^3"]),
    ("hpart", &["hpart", "--vars", "x,y", "--degree", "2", "(x+y)^2 + x^3 + 1"]),
    ("power_negative", &["power", "--vars", "x", "--degree", "4", "1+x", "-2"]),
    ("taylor_shift", &["taylor-shift", "--vars", "X1", "--main", "X2", "--degree", "3", "X2^2 + X1", "1"]),
    (
        "taylor_shift_fraction",
        &["taylor-shift", "--vars", "X1", "--main", "X2", "--degree", "2", "X2^2 + X1*X2", "-1/2"],
    ),
    (
        "evaluate_at_origin",
        &["evaluate-at-origin", "--vars", "X1", "--main", "X2", "(X2-1)*(X2-2)*(X2-3) + X1*(X2^2 + X2)"],
    ),
    ("coefficient", &["coefficient", "--vars", "x,y", "x*y + 3", "x*y"]),
    ("add_three", &["add", "--vars", "x,y", "--degree", "2", "1 + x", "y", "-1"]),
    ("negate", &["negate", "--vars", "x,y", "--degree", "1", "1 + 2*x - y"]),
    ("negate_leading_minus", &["negate", "--vars", "x", "--degree", "2", "-x^2 - 1"]),
    ("divide_f3", &["divide", "--vars", "X1,X2", "--degree", "2", "1", "2 + 1/3*(X1 + X2)"]),
    ("syntax_error", &["invert", "--vars", "x", "1 +"]),
    ("unknown_variable", &["invert", "--vars", "x,y", "1 + z"]),
    ("max_terms", &["invert", "--vars", "x,y", "--degree", "4", "--max-terms", "4", "1 - x - y"]),
    ("invert_trailing_flag", &["invert", "1 - x", "--vars", "x", "--degree", "3"]),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Runs one case; returns a description of every mismatch.
pub fn check_case(name: &str, args: &[&str]) -> Vec<String> {
    let dir = golden_dir();
    let read = |ext: &str| fs::read_to_string(dir.join(format!("{name}.{ext}"))).ok();
    let out = Command::new(env!("CARGO_BIN_EXE_mps"))
        .args(args)
        .output()
        .expect("mps binary runs");
    let mut problems = Vec::new();
    let code = out.status.code().unwrap_or(-1);
    let want_code: i32 = read("code").expect("code file").trim().parse().expect("integer");
    if code != want_code {
        problems.push(format!("{name}: exit {code}, expected {want_code}"));
    }
    let stdout = String::from_utf8_lossy(&out.stdout);
    if stdout != read("out").unwrap_or_default() {
        problems.push(format!("{name}: stdout {stdout:?}"));
    }
    let stderr = String::from_utf8_lossy(&out.stderr);
    if stderr != read("err").unwrap_or_default() {
        problems.push(format!("{name}: stderr {stderr:?}"));
    }
    problems
}
