use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series constant term must be 1, got {0}")]
    NonUnitConstantTerm(String),
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("coefficient t^{requested} lies beyond truncation order {order}")]
    BeyondTruncation { requested: usize, order: usize },
    #[error("variable mismatch: ({0}) vs ({1})")]
    VariableMismatch(String, String),
    #[error("Faulhaber closed forms disagree for exponent {m}")]
    FaulhaberMismatch { m: usize },
    #[error("invalid level p = {0}: must be odd and at least 3")]
    InvalidLevel(u64),
    #[error("genus must be at least {min}, got {genus}")]
    InvalidGenus { genus: u32, min: u32 },
    #[error("color {color} out of range 0..={max}")]
    ColorOutOfRange { color: u64, max: u64 },
    #[error("index s = {s} out of range 1..={d}")]
    IndexOutOfRange { s: u64, d: u64 },
    #[error("vanishing denominator at summation index {index} (color {color} too large for p = {p})")]
    VanishingDenominator { index: u64, color: u64, p: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("structure violation at p^{j}: {detail}")]
    StructureViolation { j: u32, detail: String },
    #[error("parity violation at monomial {monomial}: {detail}")]
    ParityViolation { monomial: String, detail: String },
    #[error("evaluation is not an integer: {0}")]
    NonIntegral(String),
    #[error("matrix needs at least {needed} columns, got {given}")]
    TooFewColumns { needed: usize, given: usize },
    #[error("elements belong to different cyclotomic fields (p = {0} vs p = {1})")]
    FieldMismatch(u64, u64),
}
