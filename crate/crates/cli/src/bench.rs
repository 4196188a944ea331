//! Desk-scale timings of the experiment families.
//!
//! Each suite produces one [`BenchRecord`] per (case, parameter), ordered by
//! parameter first. Every point is computed from freshly built series so
//! no cache is shared between points.

use std::str::FromStr;
use std::time::Instant;

use mps::parser::parse_poly;
use mps::{rat, MultiPoly, QUpops, Series, VarSet};
use serde::Serialize;

use crate::CliError;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Suite {
    /// `1/f` and `f * 1/f` through degree `param` for three small units.
    Inverse,
    /// Weierstrass preparation of two degree-`k` families, `k = 3..=6`,
    /// through precision `param`.
    Weierstrass,
    /// Hensel factorization of the cubic and quartic split families through
    /// precision `param`.
    Hensel,
    /// Shift by one of the split families through precision `param`.
    Taylor,
    /// Sum of `param` geometric series, m-ary against a chain of binary sums.
    Nary,
}

impl Suite {
    /// Largest accepted parameter.
    pub fn max_param(self) -> u32 {
        match self {
            Suite::Inverse => 100,
            Suite::Weierstrass => 20,
            Suite::Hensel => 12,
            Suite::Taylor => 30,
            Suite::Nary => 64,
        }
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "inverse" => Suite::Inverse,
            "weierstrass" => Suite::Weierstrass,
            "hensel" => Suite::Hensel,
            "taylor" => Suite::Taylor,
            "nary" => Suite::Nary,
            _ => {
                return Err(CliError::usage(format!(
                    "unknown suite `{s}` (expected inverse, weierstrass, hensel, taylor or nary)"
                )))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRecord {
    pub case: String,
    pub param: u32,
    pub seconds: f64,
    /// Most terms in a single computed homogeneous part of the result.
    pub peak_terms: usize,
}

/// Degree of the summed series in the `nary` suite.
pub const NARY_DEGREE: u32 = 20;

fn vars(names: &[&str]) -> VarSet {
    VarSet::new(names.iter().copied()).expect("distinct names")
}

fn poly(text: &str, v: &VarSet) -> MultiPoly {
    parse_poly(text, v).expect("built-in expression")
}

fn peak(fs: &[&Series], d: u32) -> mps::Result<usize> {
    let mut best = 0;
    for f in fs {
        for k in 0..=d {
            best = best.max(f.homogeneous_part(k)?.num_terms());
        }
    }
    Ok(best)
}

fn peak_upops(fs: &[&QUpops], d: u32) -> mps::Result<usize> {
    let coeffs: Vec<&Series> = fs.iter().flat_map(|f| f.coefficients()).collect();
    peak(&coeffs, d)
}

/// `prod_{i=1..k} (X2 - i) + X1 (X2^(k-1) + X2)`.
pub fn split_family(k: u32) -> QUpops {
    let v = vars(&["X1", "X2"]);
    let roots: Vec<String> = (1..=k).map(|i| format!("(X2 - {i})")).collect();
    let text = format!("{} + X1*(X2^{} + X2)", roots.join("*"), k - 1);
    QUpops::from_polynomial(&poly(&text, &v), "X2").expect("X2 is the main variable")
}

/// Degree-`k` input with coefficients `X1, X2, 1, ..., 1, 1/(1 + X1 + X2)`
/// (`first = true`) or `X1, 1, ..., 1, X2, 1/(1 + X1 + X2)`.
pub fn weierstrass_family(k: u32, first: bool) -> QUpops {
    assert!(k >= 3);
    let v = vars(&["X1", "X2"]);
    let p = |t: &str| Series::from_polynomial(poly(t, &v));
    let mut coeffs = vec![p("X1")];
    for i in 1..k {
        let c = match (first, i) {
            (true, 1) => "X2",
            (false, i) if i == k - 1 => "X2",
            _ => "1",
        };
        coeffs.push(p(c));
    }
    coeffs.push(p("1 + X1 + X2").inverse().expect("unit"));
    QUpops::from_coefficients("X3", &v, coeffs).expect("X3 is not a coefficient variable")
}

fn timed<T>(f: impl FnOnce() -> mps::Result<T>) -> mps::Result<(T, f64)> {
    let start = Instant::now();
    let out = f()?;
    Ok((out, start.elapsed().as_secs_f64()))
}

fn inverse_point(name: &str, text: &str, names: &[&str], d: u32) -> mps::Result<BenchRecord> {
    let v = vars(names);
    let (inv, seconds) = timed(|| {
        let f = Series::from_polynomial(poly(text, &v));
        let inv = f.inverse()?;
        let prod = inv.mul(&f)?;
        prod.update_precision(d)?;
        Ok(inv)
    })?;
    Ok(BenchRecord {
        case: name.into(),
        param: d,
        seconds,
        peak_terms: peak(&[&inv], d)?,
    })
}

fn nary_point(k: u32, mary: bool) -> mps::Result<BenchRecord> {
    let v = vars(&["x", "y"]);
    let (sum, seconds) = timed(|| {
        let base = Series::from_polynomial(poly("1 - x - y", &v));
        let terms = (0..k).map(|_| base.inverse()).collect::<mps::Result<Vec<_>>>()?;
        let sum = if mary {
            Series::add_many(&terms, None)?
        } else {
            let mut acc = terms[0].clone();
            for t in &terms[1..] {
                acc = acc.add(t)?;
            }
            acc
        };
        sum.update_precision(NARY_DEGREE)?;
        Ok(sum)
    })?;
    Ok(BenchRecord {
        case: if mary { "m-ary" } else { "binary" }.into(),
        param: k,
        seconds,
        peak_terms: peak(&[&sum], NARY_DEGREE)?,
    })
}

fn weierstrass_point(k: u32, first: bool, r: u32) -> mps::Result<BenchRecord> {
    let (w, seconds) = timed(|| {
        let w = weierstrass_family(k, first).weierstrass_preparation()?;
        w.p.update_precision(r)?;
        w.alpha.update_precision(r)?;
        Ok(w)
    })?;
    Ok(BenchRecord {
        case: format!("wp{}_k{k}", if first { 1 } else { 2 }),
        param: r,
        seconds,
        peak_terms: peak_upops(&[&w.p, &w.alpha], r)?,
    })
}

fn hensel_point(k: u32, r: u32) -> mps::Result<BenchRecord> {
    let (res, seconds) = timed(|| {
        let res = split_family(k).hensel_factorize()?;
        for h in &res.factors {
            h.factor.update_precision(r)?;
        }
        Ok(res)
    })?;
    let factors: Vec<&QUpops> = res.factors.iter().map(|h| &h.factor).collect();
    Ok(BenchRecord {
        case: format!("hensel_k{k}"),
        param: r,
        seconds,
        peak_terms: peak_upops(&factors, r)?,
    })
}

fn taylor_point(k: u32, r: u32) -> mps::Result<BenchRecord> {
    let (g, seconds) = timed(|| {
        let g = split_family(k).taylor_shift(&rat(1))?;
        g.update_precision(r)?;
        Ok(g)
    })?;
    Ok(BenchRecord {
        case: format!("taylor_k{k}"),
        param: r,
        seconds,
        peak_terms: peak_upops(&[&g], r)?,
    })
}

/// Runs `suite` for parameters `1..=max`.
pub fn run(suite: Suite, max: u32) -> Result<Vec<BenchRecord>, CliError> {
    if max > suite.max_param() {
        return Err(CliError::usage(format!(
            "parameter {max} exceeds the limit {} for this suite",
            suite.max_param()
        )));
    }
    let mut out = Vec::new();
    for param in 1..=max {
        match suite {
            Suite::Inverse => {
                out.push(inverse_point("f1", "1 + X1 + X2", &["X1", "X2"], param)?);
                out.push(inverse_point("f2", "1 + X1 + X2 + X3", &["X1", "X2", "X3"], param)?);
                out.push(inverse_point("f3", "2 + 1/3*(X1 + X2)", &["X1", "X2"], param)?);
            }
            Suite::Nary => {
                out.push(nary_point(param, true)?);
                out.push(nary_point(param, false)?);
            }
            Suite::Weierstrass => {
                for first in [true, false] {
                    for k in 3..=6 {
                        out.push(weierstrass_point(k, first, param)?);
                    }
                }
            }
            Suite::Hensel => {
                for k in [3, 4] {
                    out.push(hensel_point(k, param)?);
                }
            }
            Suite::Taylor => {
                for k in [3, 4] {
                    out.push(taylor_point(k, param)?);
                }
            }
        }
    }
    Ok(out)
}

/// CSV with header `case,param,seconds,peak_terms`, without a final newline.
pub fn to_csv(records: &[BenchRecord]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(r).map_err(|e| CliError::usage(e.to_string()))?;
    }
    if records.is_empty() {
        w.write_record(["case", "param", "seconds", "peak_terms"])
            .map_err(|e| CliError::usage(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::usage(e.to_string()))?;
    let text = String::from_utf8(bytes).expect("csv output is UTF-8");
    Ok(text.trim_end().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts_and_order() {
        let rows = run(Suite::Inverse, 4).unwrap();
        assert_eq!(rows.len(), 12);
        assert!(rows.windows(2).all(|w| w[0].param <= w[1].param));
        let csv = to_csv(&rows).unwrap();
        assert!(csv.starts_with("case,param,seconds,peak_terms\nf1,1,"));
    }

    #[test]
    fn peaks_follow_part_sizes() {
        let rows = run(Suite::Inverse, 3).unwrap();
        let f2 = rows.iter().filter(|r| r.case == "f2").map(|r| r.peak_terms).collect::<Vec<_>>();
        // terms of degree d in three variables
        assert_eq!(f2, [3, 6, 10]);
        let nary = run(Suite::Nary, 2).unwrap();
        assert!(nary.iter().all(|r| r.peak_terms == NARY_DEGREE as usize + 1));
    }

    #[test]
    fn families() {
        let f = split_family(3);
        assert_eq!(f.evaluate_at_origin().unwrap().to_string(), "X2^3 - 6*X2^2 + 11*X2 - 6");
        let w1 = weierstrass_family(4, true);
        assert_eq!(w1.truncate(0).unwrap().to_string(), "X3^4 + X3^3 + X3^2");
        let w = w1.weierstrass_preparation().unwrap();
        assert_eq!((w.d, w.m), (2, 2));
        let w2 = weierstrass_family(4, false).weierstrass_preparation().unwrap();
        assert_eq!((w2.d, w2.m), (1, 3));
    }

    #[test]
    fn limits() {
        assert_eq!("bogus".parse::<Suite>().unwrap_err().code, CliError::USAGE);
        assert_eq!(run(Suite::Hensel, 13).unwrap_err().code, CliError::USAGE);
    }
}
