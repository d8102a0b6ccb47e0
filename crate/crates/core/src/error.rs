use num_bigint::BigInt;
use thiserror::Error;

/// Errors surfaced by the exact-arithmetic and experiment layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("discriminant {0} is a perfect square; the value is rational")]
    SquareDiscriminant(BigInt),

    #[error("zero denominator in quadratic surd")]
    ZeroDenominator,

    #[error("denominator {q} does not divide {d} - {p}^2; normalize the surd first")]
    NonNormalizedSurd { p: BigInt, q: BigInt, d: BigInt },

    #[error("requested depth {requested} exceeds the {available} available quotients")]
    DepthExceeded { requested: usize, available: usize },

    #[error("rule depth cap {cap} reached while generating quotients")]
    DepthCapReached { cap: usize },

    #[error("denominator bit budget exhausted at index {index} ({bits} bits)")]
    BitBudgetExhausted { index: usize, bits: u64 },

    #[error("orbit error budget {budget} unattainable within expansion depth {depth}")]
    PrecisionUnattainable { budget: String, depth: usize },

    #[error("no admissible block modulus beyond n = {reached}")]
    NoAdmissibleBlock { reached: usize },

    #[error("sparse index sequence violates the growth inequality at step {step}")]
    InadmissibleIndexSequence { step: usize },

    #[error("index {0} outside the sequence domain")]
    IndexOutOfDomain(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
