use thiserror::Error;

/// Why an edge was rejected during graph construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeFault {
    SelfLoop,
    Duplicate,
}

impl std::fmt::Display for EdgeFault {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EdgeFault::SelfLoop => write!(f, "self-loop"),
            EdgeFault::Duplicate => write!(f, "duplicate"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge ({u}, {v}): {fault}")]
    InvalidEdge { u: u32, v: u32, fault: EdgeFault },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: u32, n: usize },

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph too large for brute-force search: n = {n} exceeds cap {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("ordering is not a LexBFS ordering of this graph")]
    NotLexBfs,

    #[error("graph is not connected")]
    NotConnected,

    #[error("vertex {center} does not center a wheel")]
    NotAWheel { center: u32 },

    #[error("theorem guarantee violated: {0}")]
    TheoremViolation(&'static str),

    #[error("lemma guarantee violated: {0}")]
    LemmaViolation(&'static str),

    #[error("rejection sampling exhausted after {attempts} attempts")]
    Exhausted { attempts: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
