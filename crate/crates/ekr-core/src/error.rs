use thiserror::Error;

/// Errors shared across the crate.
///
/// `EnumCapExceeded` and `SearchBudgetExhausted` are resource errors: they mean
/// "the instance is too big for the configured limits", never "the answer is X".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("capacity exceeded: {requested} vertices requested, capacity is {capacity}")]
    CapacityExceeded { requested: usize, capacity: usize },

    #[error("vertex {vertex} out of range for a graph on {num_vertices} vertices")]
    InvalidVertex { vertex: usize, num_vertices: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("graph has no root")]
    MissingRoot,

    #[error("vertices {u} and {v} are not connected")]
    Disconnected { u: usize, v: usize },

    #[error("enumeration cap of {cap} independent sets exceeded")]
    EnumCapExceeded { cap: usize },

    #[error("search budget of {budget} nodes exhausted")]
    SearchBudgetExhausted { budget: u64 },

    #[error("family of {size} sets exceeds the practical search limit of {limit}")]
    FamilyTooLarge { size: usize, limit: usize },

    #[error("graph is not an elongated claw: {0}")]
    NotElongatedClaw(&'static str),

    #[error("elongated claw has no short limb")]
    NoShortLimb,

    #[error("graph is not a forest")]
    NotAForest,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for the two resource-limit errors (mapped to exit code 2 by the CLI).
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::EnumCapExceeded { .. }
                | Error::SearchBudgetExhausted { .. }
                | Error::FamilyTooLarge { .. }
        )
    }
}
