use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A numeric argument fell outside the domain of an operation.
    #[error("{what} = {value} is out of range (must be {bound})")]
    Domain {
        what: &'static str,
        value: u64,
        bound: String,
    },

    /// Binary labels only exist when every dimension holds a whole number of bits.
    #[error("arity k = {k} is not a power of two; inflate it to k = {suggested} first")]
    UnsupportedArity { k: u32, suggested: u32 },

    #[error("grid has {rows} rows but the cube has only k = {k} nodes per dimension ({} too many)", rows - k)]
    RowOverflow { rows: u32, k: u32 },

    #[error("grid has {cols} columns but the cube offers only k^(n-1) = {capacity} ({} too many)", cols - capacity)]
    ColOverflow { cols: u64, capacity: u64 },

    /// An embedding map failed well-formedness checks. Each entry names one offender.
    #[error("malformed embedding map: {}", .0.join("; "))]
    Validation(Vec<String>),
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: u64, bound: impl Into<String>) -> Self {
        Error::Domain {
            what,
            value,
            bound: bound.into(),
        }
    }
}
