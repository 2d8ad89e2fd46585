use thiserror::Error;

pub type Result<T> = std::result::Result<T, SchurError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SchurError {
    #[error("degenerate denominator (|d| = {modulus:e})")]
    DegenerateDenominator { modulus: f64 },

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("quadrature did not converge within {max_depth} bisection levels (estimated error {error:e})")]
    QuadratureNonConvergence { max_depth: u32, error: f64 },

    #[error("logarithm argument {re}{im:+}i lies on the branch cut")]
    BranchCutHit { re: f64, im: f64 },

    #[error("sampled boundary is degenerate: {0}")]
    GeometryDegenerate(String),
}

impl SchurError {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        SchurError::ContractViolation(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        SchurError::InvalidInput(msg.into())
    }
}
