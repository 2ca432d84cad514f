use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("division by zero")]
    DivisionByZero,

    /// A residue shares a factor with the modulus of a quotient ring.
    #[error("zero divisor: the modulus has the nontrivial factor {factor}")]
    ZeroDivisor { factor: String },

    #[error("{0} is not invertible")]
    NotInvertible(String),

    #[error("inexact division in {0}")]
    InexactDivision(String),

    #[error("invalid modulus: {0}")]
    InvalidModulus(String),

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("singular Möbius matrix (ad - bc = 0)")]
    SingularMatrix,

    #[error("shared branch point: the resultant of the two factors vanishes")]
    SharedBranchPoint,

    #[error("u1 = 0: use the shifted (blow-up) invariants")]
    BlowUpNeeded,

    #[error("not supported in characteristic {0}")]
    Characteristic(u64),

    #[error("group closure exceeds the bound {0}")]
    ClosureBound(usize),

    #[error("polynomial is not invariant under the group: {0}")]
    NotInvariant(String),

    #[error("excluded parameter value: the template degenerates to {0}")]
    ExcludedParameter(String),

    #[error("inconsistent classification input: {0}")]
    Inconsistent(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// Coarse grouping used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Domain declarations, validation, malformed requests.
    Validation,
    /// A mathematical precondition fails for otherwise valid input.
    Precondition,
    Parse,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse { .. } => ErrorClass::Parse,
            Error::DivisionByZero
            | Error::ZeroDivisor { .. }
            | Error::NotInvertible(_)
            | Error::SharedBranchPoint
            | Error::BlowUpNeeded
            | Error::NotInvariant(_)
            | Error::ExcludedParameter(_)
            | Error::ClosureBound(_)
            | Error::SingularMatrix => ErrorClass::Precondition,
            _ => ErrorClass::Validation,
        }
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DomainMismatch(_) => "domain-mismatch",
            Error::DivisionByZero => "division-by-zero",
            Error::ZeroDivisor { .. } => "zero-divisor",
            Error::NotInvertible(_) => "not-invertible",
            Error::InexactDivision(_) => "inexact-division",
            Error::InvalidModulus(_) => "invalid-modulus",
            Error::DegreeCap { .. } => "degree-cap",
            Error::Invalid(_) => "invalid",
            Error::SingularMatrix => "singular-matrix",
            Error::SharedBranchPoint => "shared-branch-point",
            Error::BlowUpNeeded => "blow-up-needed",
            Error::Characteristic(_) => "characteristic",
            Error::ClosureBound(_) => "closure-bound",
            Error::NotInvariant(_) => "not-invariant",
            Error::ExcludedParameter(_) => "excluded-parameter",
            Error::Inconsistent(_) => "inconsistent",
            Error::Parse { .. } => "parse",
            Error::Internal(_) => "internal",
        }
    }
}
