use thiserror::Error;

use crate::germ::GermRank;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands belong to different variable contexts")]
    ContextMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric")]
    Asymmetric,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division leaves a nonzero remainder")]
    NonExactDivision,
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GermError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("malformed germ: {0}")]
    Malformed(String),
    #[error("germ is not of corank one at the origin ({0:?})")]
    NotCorank1(GermRank),
    #[error("parameters without values: {}", .0.join(", "))]
    UnboundParameters(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error(transparent)]
    Germ(#[from] GermError),
    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },
    #[error("point has {got} coordinates, germ has {expected} source variables")]
    PointDimension { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}
