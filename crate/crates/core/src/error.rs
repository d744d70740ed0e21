use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be at least 2, got {0}")]
    AlphabetTooSmall(u32),
    #[error("alphabet size {k} does not fit the symbol type (max {max})")]
    AlphabetTooLarge { k: u32, max: u32 },
    #[error("symbol {symbol} at position {position} is outside 0..{k}")]
    SymbolOutOfRange { symbol: u32, position: usize, k: u32 },
    #[error("words must be non-empty")]
    EmptyWord,
    #[error("cannot parse word from {0:?}")]
    Parse(String),
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(u32, u32),
    #[error("{op} requires {requirement}")]
    Precondition {
        op: &'static str,
        requirement: &'static str,
    },
    #[error("unsupported parameters n={n}, k={k}: {reason}")]
    Unsupported { n: usize, k: u32, reason: &'static str },
    #[error("window {0} is not on the cycle")]
    OffCycle(String),
    #[error("arithmetic overflow computing {what} for n={n}, k={k}")]
    Overflow { what: &'static str, n: usize, k: u32 },
    #[error("brute-force search of {size} strings exceeds the limit of {limit}")]
    BruteForceLimit { size: u128, limit: u128 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
