use thiserror::Error;

/// Errors raised by the counting library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("universe of {0} elements exceeds the 64-element limit")]
    UniverseTooLarge(usize),
    #[error("element {element} is outside a universe of {n} elements")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("set of size {size} exceeds the lower-set bound {max}")]
    SetTooLarge { size: usize, max: usize },
    #[error("families live on different universes ({left} vs {right} elements)")]
    UniverseMismatch { left: usize, right: usize },
    #[error("path length k={k} must be smaller than the vertex count n={n}")]
    PathLengthOutOfRange { k: usize, n: usize },
    #[error("vertex {vertex} is outside a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("a {k}-packing of {m}-sets does not fit in a universe of {n} elements")]
    PackingTooLarge { k: usize, m: usize, n: usize },
    #[error("member {index} has {size} elements, expected {expected}")]
    NonUniformMember { index: usize, size: usize, expected: usize },
    #[error("member {index} duplicates an earlier member")]
    DuplicateMember { index: usize },
    #[error("matching counts need 2-element members, got {0}-element members")]
    NotPairs(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("brute-force guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("table of {required} entries exceeds the budget of {budget}")]
    OverBudget { required: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, CountError>;
