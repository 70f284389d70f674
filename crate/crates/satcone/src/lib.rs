//! Exact-arithmetic computation of saturated tensor cones for simple Lie
//! types A, C, D: inequality generation via Schubert structure constants,
//! extremal rays, Hilbert bases at desk scale, and tensor-product invariant
//! dimensions for saturation checks.

pub mod cone;
pub mod matrix;
pub mod polyhedral;
pub mod rays;
pub mod rootsys;
pub mod schubert;
pub mod tensor;
pub mod weyl;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Arbitrary-precision integer used throughout the core.
pub type Int = BigInt;
/// Arbitrary-precision rational used throughout the core.
pub type Rat = BigRational;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root system: type {0} rank {1}")]
    UnsupportedType(char, usize),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("Weyl group order {0} exceeds cap {1}")]
    GroupOrderCap(usize, usize),
    #[error("value table size {0} exceeds cap {1}; raise the cap or shard the run")]
    TableCap(usize, usize),
    #[error("evaluation point is not regular: {0} vanishes on it")]
    NonRegularPoint(String),
    #[error("degree bound violated: total length {0} exceeds l(w0) = {1}")]
    DegreeBound(usize, usize),
    #[error("non-integer structure constant {0}; value-table convention is inconsistent")]
    NonIntegerConstant(String),
    #[error("point violates inequality {0:?}")]
    Infeasible(Vec<i64>),
    #[error("point does not lie on the requested facet")]
    NotOnFacet,
    #[error("{0} exceeds desk-scale cap ({1}); export to Normaliz instead")]
    DeskScaleCap(String, usize),
    #[error("dimension cap exceeded: {0}")]
    DimensionCap(String),
    #[error("non-dominant weight {0:?}")]
    NonDominant(Vec<Int>),
    #[error("malformed file at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
