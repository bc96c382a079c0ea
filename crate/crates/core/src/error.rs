//! Error type shared by every module.
//!
//! Operations are total over valid inputs; anything else surfaces as a
//! variant here, never as a panic. Variants that witness a broken axiom
//! carry enough context to reproduce the failure by hand.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multiplication is not associative: ({a} * {b}) * {c} != {a} * ({b} * {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("multiplication table is not a Latin square at row/column {index}")]
    NotLatinSquare { index: usize },
    #[error("multiplication table has no two-sided identity")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("group order {requested} exceeds the cap {cap}")]
    OrderLimitExceeded { requested: usize, cap: usize },
    #[error("map is not an automorphism: {reason}")]
    NotAnAutomorphism { reason: String },
    #[error("maps do not form a group action: {reason}")]
    NotAnAction { reason: String },
    #[error("subgroup has index {actual}, expected index 2")]
    NotIndexTwo { actual: usize },
    #[error("given elements do not generate a subgroup compatible with the table")]
    NotASubgroup,
    #[error("parity map is not a homomorphism onto {{+1,-1}}")]
    NotAGrading,
    #[error("element {element} is not in the even subgroup")]
    NotEven { element: usize },
    #[error("element {element} is not odd")]
    NotOdd { element: usize },
    #[error("hypothesis fails at class {class}: {reason}")]
    HypothesisFailed { class: usize, reason: String },
    #[error("{k} is not coprime to the order {order}")]
    NotCoprime { k: i64, order: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not rational (order {order} after reduction)")]
    NotRational { order: u64 },
    #[error("value is not a rational integer: {value}")]
    NotAnInteger { value: String },
    #[error("class functions belong to different groups")]
    GroupMismatch,
    #[error("internal verification failed: {reason}")]
    InternalVerificationFailed { reason: String },
    #[error("indicator pair (fs_complex, fs_real) = ({fs_complex}, {fs_real}) matches no type")]
    ImpossiblePair { fs_complex: i64, fs_real: i64 },
    #[error("covering characters disagree on the block field: {reason}")]
    BlockInconsistency { reason: String },
    #[error("A-character row count {rows} differs from Real class count {real_classes}")]
    SquareTheoremViolation { rows: usize, real_classes: usize },
    #[error("consistency failure: {reason}")]
    ConsistencyFailure { reason: String },
    #[error("brute-force oracle disagrees: {reason}")]
    OracleMismatch { reason: String },
    #[error("theorem check failed: {reason}")]
    TheoremViolation { reason: String },
    #[error("operation not applicable: {reason}")]
    NotApplicable { reason: String },
    #[error("self-inverse criteria disagree on {cycle_type}")]
    CriteriaMismatch { cycle_type: String },
    #[error("permutation is odd: {perm}")]
    OddPermutation { perm: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no witness of type {dyson_type} up to order {max_order}")]
    SearchExhausted { dyson_type: String, max_order: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
