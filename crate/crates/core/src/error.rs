use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vector {0:?} is not a root of BC_n")]
    NotARoot(Vec<i64>),

    #[error("root set is not symmetric: {0} lacks its opposite")]
    NotSymmetric(String),

    #[error("node {node} out of range for a graph on {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("straight edge needs two distinct endpoints, got {0} twice")]
    DegenerateEdge(usize),

    #[error("palette violation: {0}")]
    Palette(String),

    #[error("hyperplane {0:?} is not of shape H^±_ij or H_i")]
    NotAHyperplane(Vec<i64>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("subgraph is not nested in the ambient graph")]
    NotNested,

    #[error("subgraph has a bipartite component; apply bipartite normalization first")]
    BipartiteSubgraph,

    #[error("n = {n} exceeds the configured limit {limit} for {what}")]
    LimitExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    /// A component of a (quasi-)crystallograph matched none of the model
    /// graphs. This contradicts the classification theorems.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("unmatched component: {0}")]
    UnmatchedComponent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
