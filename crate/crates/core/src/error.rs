use thiserror::Error;

pub type Result<T> = std::result::Result<T, OmegaError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OmegaError {
    #[error("ground set of size {n} exceeds the maximum of {max}")]
    GroundTooLarge { n: usize, max: usize },

    #[error("relations are on different ground sets (n = {left} vs n = {right})")]
    GroundMismatch { left: usize, right: usize },

    #[error("element {element} is outside the ground set {{0..{n}}}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("relation is not an order: {0}")]
    NotAnOrder(String),

    #[error("lower relation is not contained in the upper relation")]
    NotComparable,

    #[error("order lies outside the interval")]
    OutsideInterval,

    #[error("enumeration on n = {n} exceeds the cap of {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),

    #[error("cannot parse relation: {0}")]
    Parse(String),
}
