use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division left a nonzero remainder.
    #[error("division is not exact")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    /// A rational function has a genuine pole at `q = 1`.
    #[error("pole of order {0} at q = 1")]
    PoleAtOne(usize),
    #[error("constant term of the series is not a unit")]
    NonUnitConstant,
    #[error("series must have zero constant term")]
    NonzeroConstant,
    #[error("series must have constant term 1")]
    ConstantNotOne,
    #[error("non-integral coefficient in {0}")]
    NotIntegral(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    /// An identity that must hold exactly was found to fail.
    #[error("identity check failed: {0}")]
    IdentityFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
