use thiserror::Error;

use crate::varset::VarSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("operands live in different polynomial rings")]
    RingMismatch,

    #[error("exponent vector has length {got}, ring has {expected} variables")]
    Arity { expected: usize, got: usize },

    #[error("exponent {0} exceeds the ceiling of {ceiling}", ceiling = crate::EXPONENT_CEILING)]
    ExponentOverflow(u64),

    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { dividend: String, divisor: String },

    #[error("bracket power exponent must be positive")]
    ZeroPower,

    #[error("colon by the zero ideal is undefined")]
    ColonByZero,

    #[error("ideal {0} is not squarefree")]
    NotSquarefree(String),

    #[error("the unit ideal is not a valid input here")]
    UnitIdeal,

    #[error("vertex {0} is outside the vertex range")]
    VertexOutOfRange(usize),

    #[error("{0} is not a face of the complex")]
    NotAFace(VarSet),

    #[error("complex on {complex} vertices used with a ring of {ring} variables")]
    VertexCountMismatch { complex: usize, ring: usize },

    #[error("bad oracle parameters: {0}")]
    OracleParams(String),

    #[error("Frobenius degree must be at least 2 (got {0})")]
    DegreeTooSmall(u32),

    #[error("ideal {0} is not a nearly complete intersection")]
    NotNci(String),

    #[error("algebraic and combinatorial loci disagree: {algebraic:?} vs {combinatorial:?}")]
    MethodDisagreement {
        algebraic: Vec<VarSet>,
        combinatorial: Vec<VarSet>,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
