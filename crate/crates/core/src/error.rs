use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation (element index,
    /// operation index, arity, table order).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// Input is well formed but violates a structural requirement.
    #[error("validation error: {0}")]
    Validation(String),

    /// A search or enumeration would exceed its configured size cap.
    #[error("capacity error: {what} is {actual}, cap is {cap}")]
    Capacity {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    /// One or more configuration problems, all reported together.
    #[error("invalid configuration: {}", .0.join("; "))]
    Config(Vec<String>),
}

pub type Result<T> = std::result::Result<T, Error>;
