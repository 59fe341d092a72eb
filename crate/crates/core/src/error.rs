use alloc::string::String;

/// Errors raised by the core algorithms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid group spec: factor {factor} at position {position} is below 2")]
    InvalidSpec { position: usize, factor: usize },

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("not a subgroup: {0}")]
    InvalidSubgroup(&'static str),

    #[error("invalid subgroup chain: {0}")]
    InvalidChain(&'static str),

    #[error("{what} of size {size} exceeds the configured limit {limit}")]
    ResourceLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid input: {0}")]
    InvalidInput(&'static str),

    #[error("a complete graph has no vertex cuts, hence no fragments")]
    NoFragments,

    #[error("precondition failed: {0}")]
    Precondition(&'static str),

    /// A structural statement about the formula failed. Never expected; the
    /// verification harness counts these as counterexamples.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
