use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term of the series must be 1")]
    NonUnitConstantTerm,

    #[error("coefficient {degree} is not an integer (inexact division)")]
    NonIntegralCoefficient { degree: usize },

    #[error("part set is empty")]
    EmptyPartSet,

    #[error("part set contains 0")]
    ZeroPart,

    #[error("recurrence step {n} produced a non-integral value")]
    NonIntegralRecurrenceStep { n: usize },

    #[error("{family}: instance too large ({detail})")]
    InstanceTooLarge { family: &'static str, detail: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },
}

impl Error {
    pub(crate) fn too_large(family: &'static str, detail: impl Into<String>) -> Self {
        Error::InstanceTooLarge { family, detail: detail.into() }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn parse(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Parse { what, detail: detail.into() }
    }
}
