use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing positive integers, got {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("parts must be strictly decreasing positive integers, got {0:?}")]
    NotStrict(Vec<usize>),

    #[error("cannot parse partition literal {0:?}")]
    Parse(String),

    #[error("Frobenius symbol needs equally many legs and arms, got {legs} legs and {arms} arms")]
    FrobeniusArity { legs: usize, arms: usize },

    #[error("Frobenius coordinates must be distinct, got {0:?}")]
    FrobeniusRepeat(Vec<usize>),

    #[error("modulus must be an odd integer >= 3, got {0}")]
    InvalidModulus(usize),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("Jacobi symbol needs an odd positive modulus, got {0}")]
    InvalidJacobiModulus(u64),

    #[error("{s} is not a unit modulo {p}")]
    NotAUnit { s: u64, p: u64 },

    #[error("({partition}) is not a {t}-bar core")]
    NotABarCore { partition: String, t: usize },

    #[error("({partition}) is not a {t}-core")]
    NotACore { partition: String, t: usize },

    #[error("({partition}) is not a self-conjugate {t}-core")]
    NotASelfConjugateCore { partition: String, t: usize },

    #[error("quotient must have {expected} components, got {got}")]
    QuotientArity { expected: usize, got: usize },

    #[error("({partition}) has a non-empty {t}-core, expected a cocore")]
    NotACocore { partition: String, t: usize },

    #[error("({0}) is not self-conjugate")]
    NotSelfConjugate(String),

    #[error("spin labels need a bar-partition, got ({0})")]
    SpinNeedsStrict(String),

    #[error("label ({0}) does not belong to the block")]
    NotInBlock(String),

    #[error("oracle bound exceeded: {0}")]
    OracleBound(String),

    #[error("block has no members")]
    EmptyBlock,

    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),

    #[error("no bijection between these blocks: {0}")]
    UnsupportedBlockMap(String),

    #[error("bound must be at least 1")]
    ZeroBound,
}

pub type Result<T> = std::result::Result<T, Error>;
