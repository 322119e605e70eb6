use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not an odd prime below 2^62")]
    InvalidModulus(u64),
    #[error("variable count mismatch: {0} vs {1}")]
    VariableCount(usize, usize),
    #[error("odd characteristic {0:#04x} where an even one is required")]
    OddCharacteristic(u8),
    #[error("subset of odd cardinality: {0:?}")]
    OddSubset(Vec<u8>),
    #[error("invalid pair ({0}, {1})")]
    InvalidPair(u8, u8),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("asset {name}: {reason}")]
    Asset { name: String, reason: String },
    #[error("linear system has no solution")]
    Inconsistent,
    #[error("denominator of a rational series must have constant term 1 or -1")]
    NonUnitDenominator,
    #[error("group closure exceeded the cap of {0} elements")]
    ClosureCap(usize),
    #[error("numerical tolerance exceeded: {0}")]
    Tolerance(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
