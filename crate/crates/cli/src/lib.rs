//! Command-line front end for `mps`.
//!
//! [`Cli`] is the argument grammar, [`execute`] runs one command and returns
//! its standard output, and [`bench`] holds the timing harness.

pub mod bench;
mod commands;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::execute;

/// Exit status for a failed command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub const USAGE: i32 = 2;
    pub const NOT_INVERTIBLE: i32 = 3;
    pub const NOT_PREPARED: i32 = 4;
    pub const ROOTS_NOT_RATIONAL: i32 = 5;

    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: Self::USAGE,
            message: message.into(),
        }
    }
}

impl From<mps::Error> for CliError {
    fn from(e: mps::Error) -> Self {
        let code = match e {
            mps::Error::NotInvertible => Self::NOT_INVERTIBLE,
            mps::Error::NotPrepared => Self::NOT_PREPARED,
            mps::Error::RootsNotRational { .. } => Self::ROOTS_NOT_RATIONAL,
            _ => Self::USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "mps", version, about = "Lazy multivariate power series")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct SeriesOpts {
    /// Comma-separated series variables, in term order.
    #[arg(long, value_delimiter = ',', default_value = "")]
    pub vars: Vec<String>,
    /// Highest degree to compute and show.
    #[arg(long, default_value_t = 5)]
    pub degree: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Maximum number of terms in text output.
    #[arg(long, default_value_t = 64)]
    pub max_terms: usize,
}

#[derive(Args, Debug, Clone)]
pub struct UpopsOpts {
    /// Comma-separated coefficient variables.
    #[arg(long, value_delimiter = ',', default_value = "")]
    pub vars: Vec<String>,
    /// The polynomial variable.
    #[arg(long, default_value = "Y")]
    pub main: String,
    /// Highest coefficient degree to compute and show.
    #[arg(long, default_value_t = 5)]
    pub degree: u32,
    #[arg(long, default_value_t = 64)]
    pub max_terms: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Polynomial part through --degree.
    Truncate {
        #[command(flatten)]
        opts: SeriesOpts,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Homogeneous part of degree --degree.
    Hpart {
        #[command(flatten)]
        opts: SeriesOpts,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// 1/f.
    Invert {
        #[command(flatten)]
        opts: SeriesOpts,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// f/g.
    Divide {
        #[command(flatten)]
        opts: SeriesOpts,
        #[arg(allow_hyphen_values = true)]
        numerator: String,
        #[arg(allow_hyphen_values = true)]
        denominator: String,
    },
    /// Product of all arguments.
    Multiply {
        #[command(flatten)]
        opts: SeriesOpts,
        #[arg(required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Sum of all arguments.
    Add {
        #[command(flatten)]
        opts: SeriesOpts,
        #[arg(required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    Negate {
        #[command(flatten)]
        opts: SeriesOpts,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// f^n; negative n needs a unit.
    Power {
        #[command(flatten)]
        opts: SeriesOpts,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_negative_numbers = true)]
        exponent: i64,
    },
    /// Coefficient of one monomial, e.g. `x*y^2`.
    Coefficient {
        #[command(flatten)]
        opts: SeriesOpts,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_hyphen_values = true)]
        monomial: String,
    },
    /// f(Y + c) for a polynomial in the coefficient variables and --main.
    TaylorShift {
        #[command(flatten)]
        opts: UpopsOpts,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Integer or fraction `a/b`.
        #[arg(allow_hyphen_values = true)]
        shift: String,
    },
    /// f(0, ..., 0, Y).
    EvaluateAtOrigin {
        #[command(flatten)]
        opts: UpopsOpts,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// f = p * alpha with p monic and alpha a unit.
    Weierstrass {
        #[command(flatten)]
        opts: UpopsOpts,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// f = leading unit * product of factors, one per rational root.
    Hensel {
        #[command(flatten)]
        opts: UpopsOpts,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Time a benchmark family; CSV on standard output.
    Bench {
        /// inverse, weierstrass, hensel, taylor or nary.
        suite: String,
        /// Largest parameter (degree, precision or summand count).
        max: u32,
    },
}
