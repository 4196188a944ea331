use thiserror::Error;

/// Errors raised by polynomial, series, and UPoPS operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands are defined over different variable sets")]
    VarSetMismatch,
    #[error("duplicate variable `{0}` in variable set")]
    DuplicateVariable(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("generator returned a part that is not homogeneous of degree {expected}")]
    GeneratorDegreeMismatch { expected: u32 },
    #[error("variable set must not be empty")]
    EmptyVarSet,
    #[error("expected {expected} coefficients, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("operand list must not be empty")]
    EmptyList,
    #[error("invalid input: not invertible")]
    NotInvertible,
    #[error("main variable `{0}` clashes with a coefficient variable")]
    VariableClash(String),
    #[error("coefficient index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: i64 },
    #[error("no coefficient is a unit; Weierstrass preparation does not apply")]
    NotPrepared,
    #[error("leading coefficient must be a unit")]
    LeadingCoefficientNotUnit,
    #[error("polynomial at the origin does not split over the rationals; residual factor {residual}")]
    RootsNotRational { residual: String },
    #[error("root {root} was given multiplicity {expected} but has multiplicity {found}")]
    MultiplicityMismatch { root: String, expected: u32, found: u32 },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
