use thiserror::Error;

use crate::thresholds::Region;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("move set is empty")]
    EmptySet,
    #[error("move set contains non-positive value {0}")]
    NonPositiveValue(i64),
    #[error("move set contains {0} more than once")]
    DuplicateValue(i64),
    #[error("cannot remove {amount} from {state}")]
    IllegalMove { amount: u64, state: String },
    #[error("{n} stones exceeds the table bound of {bound}")]
    ResourceLimit { n: u64, bound: u64 },
    #[error("{what} is out of range (limit {limit})")]
    OutOfRange { what: String, limit: u64 },
    #[error("position is in region {0}, which this rule does not cover")]
    WrongRegion(Region),
    #[error("bad parameters: {0}")]
    BadParams(String),
}

impl Error {
    pub(crate) fn out_of_range(what: impl Into<String>, limit: u64) -> Self {
        Error::OutOfRange {
            what: what.into(),
            limit,
        }
    }
}
