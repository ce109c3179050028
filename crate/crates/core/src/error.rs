use thiserror::Error;

/// Errors raised across the library. Verification failures are not errors;
/// they are reported as data by the functions that look for them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("no subgroup of order {order} in a group of order {group_order}")]
    NoSuchSubgroup { order: usize, group_order: usize },

    #[error("incompatible cyclotomic fields Q(zeta_{left}) and Q(zeta_{right})")]
    IncompatibleField { left: usize, right: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid section map: {0}")]
    InvalidSection(String),

    #[error("search budget exceeded: {what} = {required} > limit {limit}")]
    Budget {
        what: &'static str,
        required: u128,
        limit: u128,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
