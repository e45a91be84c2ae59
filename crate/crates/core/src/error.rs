use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain the operation is defined on.
    #[error("{op}: {detail}")]
    Domain { op: &'static str, detail: String },
    #[error("subset enumeration over {{0..{l}}} needs {needed} records, cap is {cap}")]
    SubsetCap { l: u32, needed: u128, cap: u128 },
}

pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        op,
        detail: detail.into(),
    }
}
