use thiserror::Error;

/// Errors raised while building or solving an inhomogeneity problem.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A physical parameter is outside its admissible range.
    #[error("invalid parameter `{field}`: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    /// A closed-form denominator vanished (or changed sign) for this
    /// parameter combination.
    #[error("degenerate parameters: {what} = {value:e}")]
    Degenerate { what: &'static str, value: f64 },

    /// The interface linear system is numerically singular.
    #[error("singular interface system (condition number {condition:e})")]
    SingularSystem { condition: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(field: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        field,
        reason: reason.into(),
    }
}
