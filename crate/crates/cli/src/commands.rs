use std::fmt::Write;

use mps::parser::parse_poly;
use mps::{DisplayStyle, MultiPoly, QUpops, Rational, Series, VarSet};
use serde::Serialize;

use crate::{bench, Cli, CliError, Command, Format, SeriesOpts, UpopsOpts};

type Result<T> = std::result::Result<T, CliError>;

#[derive(Serialize)]
struct Part {
    degree: u32,
    poly: String,
}

#[derive(Serialize)]
struct Parts {
    parts: Vec<Part>,
}

fn var_set(names: &[String]) -> Result<VarSet> {
    Ok(VarSet::new(names.iter().filter(|s| !s.is_empty()))?)
}

fn series(text: &str, vars: &VarSet) -> Result<Series> {
    Ok(Series::from_polynomial(parse_poly(text, vars)?))
}

fn style(max_terms: usize, degree: u32) -> DisplayStyle {
    DisplayStyle {
        max_terms,
        max_degree_shown: degree,
        show_label: false,
    }
}

fn json(parts: Vec<Part>) -> String {
    serde_json::to_string(&Parts { parts }).expect("plain strings and integers")
}

fn parts_json(f: &Series, degrees: impl Iterator<Item = u32>) -> Result<String> {
    let parts = degrees
        .map(|d| {
            Ok(Part {
                degree: d,
                poly: f.homogeneous_part(d)?.to_string(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(json(parts))
}

fn show(f: &Series, opts: &SeriesOpts) -> Result<String> {
    match opts.format {
        Format::Text => Ok(f.render(&style(opts.max_terms, opts.degree))?),
        Format::Json => parts_json(f, 0..=opts.degree),
    }
}

fn upops(text: &str, opts: &UpopsOpts) -> Result<QUpops> {
    let coeff_vars = var_set(&opts.vars)?;
    let all = coeff_vars.with_appended(&opts.main)?;
    Ok(QUpops::from_polynomial(&parse_poly(text, &all)?, &opts.main)?)
}

fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || CliError::usage(format!("not a rational number: {text}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num = num.parse().map_err(|_| bad())?;
    let den: num_bigint::BigInt = den.parse().map_err(|_| bad())?;
    if num_traits::Zero::is_zero(&den) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

fn monomial(text: &str, vars: &VarSet) -> Result<mps::Monomial> {
    let p: MultiPoly = parse_poly(text, vars)?;
    let first = p.terms().next().map(|(m, c)| (m.clone(), c.clone()));
    match first {
        Some((m, c)) if p.num_terms() == 1 && num_traits::One::is_one(&c) => Ok(m),
        _ => Err(CliError::usage(format!("not a monomial: {text}"))),
    }
}

/// Runs one parsed command and returns what it prints on success.
pub fn execute(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Truncate { opts, expr } => {
            let f = series(&expr, &var_set(&opts.vars)?)?;
            match opts.format {
                Format::Text => Ok(f.truncate(opts.degree)?.to_string()),
                Format::Json => parts_json(&f, 0..=opts.degree),
            }
        }
        Command::Hpart { opts, expr } => {
            let f = series(&expr, &var_set(&opts.vars)?)?;
            match opts.format {
                Format::Text => Ok(f.homogeneous_part(opts.degree)?.to_string()),
                Format::Json => parts_json(&f, std::iter::once(opts.degree)),
            }
        }
        Command::Invert { opts, expr } => {
            let f = series(&expr, &var_set(&opts.vars)?)?;
            show(&f.inverse()?, &opts)
        }
        Command::Divide {
            opts,
            numerator,
            denominator,
        } => {
            let vars = var_set(&opts.vars)?;
            let q = Series::divide(&series(&numerator, &vars)?, &series(&denominator, &vars)?)?;
            show(&q, &opts)
        }
        Command::Multiply { opts, exprs } => {
            let vars = var_set(&opts.vars)?;
            let fs = exprs.iter().map(|e| series(e, &vars)).collect::<Result<Vec<_>>>()?;
            show(&Series::mul_many(&fs)?, &opts)
        }
        Command::Add { opts, exprs } => {
            let vars = var_set(&opts.vars)?;
            let fs = exprs.iter().map(|e| series(e, &vars)).collect::<Result<Vec<_>>>()?;
            show(&Series::add_many(&fs, None)?, &opts)
        }
        Command::Negate { opts, expr } => {
            let f = series(&expr, &var_set(&opts.vars)?)?;
            show(&f.negate(), &opts)
        }
        Command::Power { opts, expr, exponent } => {
            let f = series(&expr, &var_set(&opts.vars)?)?;
            show(&f.exponentiate(exponent)?, &opts)
        }
        Command::Coefficient { opts, expr, monomial: m } => {
            let vars = var_set(&opts.vars)?;
            let f = series(&expr, &vars)?;
            Ok(f.get_coefficient(&monomial(&m, &vars)?)?.to_string())
        }
        Command::TaylorShift { opts, expr, shift } => {
            let f = upops(&expr, &opts)?;
            let g = f.taylor_shift(&parse_rational(&shift)?)?;
            Ok(g.render(&style(opts.max_terms, opts.degree))?)
        }
        Command::EvaluateAtOrigin { opts, expr } => Ok(upops(&expr, &opts)?.evaluate_at_origin()?.to_string()),
        Command::Weierstrass { opts, expr } => {
            let w = upops(&expr, &opts)?.weierstrass_preparation()?;
            let st = style(opts.max_terms, opts.degree);
            Ok(format!("p = {}\nalpha = {}", w.p.render(&st)?, w.alpha.render(&st)?))
        }
        Command::Hensel { opts, expr } => {
            let res = upops(&expr, &opts)?.hensel_factorize()?;
            let st = style(opts.max_terms, opts.degree);
            let mut out = format!("leading = {}", res.leading_unit.render(&st)?);
            for (i, h) in res.factors.iter().enumerate() {
                write!(
                    out,
                    "\nfactor {} (root {}, multiplicity {}): {}",
                    i + 1,
                    h.root,
                    h.multiplicity,
                    h.factor.render(&st)?
                )
                .expect("writing to a String");
            }
            Ok(out)
        }
        Command::Bench { suite, max } => {
            let suite: bench::Suite = suite.parse()?;
            let records = bench::run(suite, max)?;
            bench::to_csv(&records)
        }
    }
}
