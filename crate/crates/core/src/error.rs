use thiserror::Error;

/// Errors raised by field construction, code design, verification and I/O.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("field order {p}^{s} exceeds the supported range (< 2^32)")]
    FieldTooLarge { p: u64, s: u32 },

    #[error("characteristic divides length: gcd({p}, {n}) != 1")]
    CharacteristicDividesLength { p: u64, n: u64 },

    #[error("no element of order {n} in GF({q})")]
    NoElementOfOrder { n: u64, q: u64 },

    #[error("inversion of zero")]
    InversionOfZero,

    #[error("arithmetic step {step} is not coprime to length {n}")]
    StepNotCoprime { step: usize, n: usize },

    #[error("dimension {r} out of range for length {n}")]
    DimensionOutOfRange { r: usize, n: usize },

    #[error("construction requires rate above one half (r = {r}, n = {n})")]
    RateNotAboveHalf { r: usize, n: usize },

    #[error("hermitian self-alignment fails: {l} is not 1 mod {n}")]
    HermitianMisaligned { l: u64, n: usize },

    #[error("field GF({p}^{s}) has odd extension degree; hermitian codes need GF(l^2)")]
    NotQuadraticExtension { p: u64, s: u32 },

    #[error("pair count {pairs} too large for length {n}")]
    PairCountTooLarge { pairs: usize, n: usize },

    #[error("unsatisfiable request: {0}")]
    Unsatisfiable(String),

    #[error("dual containment of the source code is not certified")]
    UncertifiedDualContainment,

    #[error("construction requires characteristic 2, field has characteristic {0}")]
    NotCharacteristicTwo(u64),

    #[error("invalid row-assignment plan: {0}")]
    InvalidPlan(String),

    #[error("code has no control matrix")]
    MissingControlMatrix,

    #[error("enumeration of {needed} words exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("element {0} is not in the field")]
    InvalidElement(String),

    #[error("decoding failure: {0}")]
    DecodingFailure(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
