use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty or contains 0")]
    EmptyOrZero,
    #[error("generators have gcd {0}, not a numerical semigroup")]
    NotNumerical(u64),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("{0} is not an element of the semigroup")]
    NotMember(i64),
    #[error("not a characteristic sequence: {0}")]
    NotCharacteristic(String),
    #[error("gluing factor d = {0} must be at least 2")]
    BadFactor(u64),
    #[error("not a GSI gluing: {0}")]
    NotGsi(String),
    #[error("no numerical semigroup has Frobenius number {0}")]
    BadFrobenius(i64),
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("arithmetic overflow")]
    Overflow,
    #[error("sieve bound {0} exceeds the supported limit")]
    TooLarge(u128),
    #[error("cannot parse generators: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
