use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operand (or the product `a·m`) is zero.
    #[error("zero operand")]
    ZeroOperand,
    #[error("operands are not coprime")]
    NotCoprime,
    /// Inputs fall outside the hypotheses of the requested identity.
    #[error("domain error: {0}")]
    Domain(&'static str),
    /// Two routes that must agree produced different values.
    #[error("identity violated: {0}")]
    IdentityViolated(&'static str),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI's JSON output.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::ZeroOperand => "ZeroOperand",
            Error::NotCoprime => "NotCoprime",
            Error::Domain(_) => "DomainError",
            Error::IdentityViolated(_) => "IdentityViolated",
        }
    }

    /// True for the two failures that mean "the inverse is undefined".
    pub fn is_undefined(&self) -> bool {
        matches!(self, Error::ZeroOperand | Error::NotCoprime)
    }
}
