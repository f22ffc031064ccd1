use thiserror::Error;

use crate::report::Report;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("dimension {0} exceeds the cap of {cap}", cap = crate::MAX_DIM)]
    DimensionTooLarge(usize),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("{0} is not an admissible prime modulus")]
    BadPrime(u64),

    #[error("matrix is singular")]
    Singular,

    #[error("unknown variant {0:?}")]
    UnknownVariant(String),

    #[error("unknown tensor pattern {0:?}")]
    UnknownPattern(String),

    #[error("input is not an anti-dendriform algebra ({} failures)", .0.len())]
    NotAnAlgebra(Report),

    #[error("input is not an anti-dendriform bialgebra ({} failures)", .0.len())]
    NotABialgebra(Report),

    #[error("r-matrix is not factorizable")]
    NotFactorizable,

    #[error("input is not a quadratic Rota-Baxter algebra ({} failures)", .0.len())]
    NotQrb(Report),

    #[error("operator is not Rota-Baxter ({} failures)", .0.len())]
    NotRotaBaxter(Report),

    #[error("weight must be nonzero")]
    ZeroWeight,

    #[error("bilinear form is degenerate")]
    Degenerate,

    #[error("form is not a commutative Connes cocycle ({} failures)", .0.len())]
    NotACocycle(Report),

    #[error("search needs {needed} candidates but the budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown document kind {0:?}")]
    UnknownKind(String),
}

impl Error {
    /// A syntax error without source position (value-level problems).
    pub(crate) fn syntax(message: impl Into<String>) -> Error {
        Error::Syntax {
            line: 0,
            column: 0,
            message: message.into(),
        }
    }
}
