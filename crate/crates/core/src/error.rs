use thiserror::Error;

/// Errors raised by the divided-difference routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty node sequence")]
    EmptyNodes,

    #[error("non-finite {what}: {value}")]
    NonFinite { what: &'static str, value: f64 },

    #[error("tolerance must be nonnegative, got {0}")]
    NegativeTolerance(f64),

    #[error("nodes not clustered: repeated node {node} is not adjacent to its earlier copy")]
    NotClustered { node: f64 },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for sequence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("insufficient derivative order: need {needed}, function provides {available}")]
    InsufficientDerivatives { needed: usize, available: usize },

    #[error("index order is not a valid consecutive-prefix ordering at position {position}")]
    NotConsecutive { position: usize },

    #[error("index subsequence must be strictly increasing within 0..{len}")]
    InvalidSubsequence { len: usize },

    #[error("node sequences differ")]
    NodeMismatch,

    #[error("evaluation point {0} coincides with a node")]
    Pole(f64),

    #[error("node sequence contains zero")]
    ZeroNode,

    #[error("node {0} is repeated but distinct nodes are required")]
    RepeatedNode(f64),

    #[error("nodes must be strictly increasing within [-1, 1]")]
    NodesOutOfRange,

    #[error("degenerate span: first and last node coincide")]
    DegenerateSpan,

    #[error("truncated power has no derivative of order {order} at knot {knot}")]
    UndefinedDerivative { knot: f64, order: usize },

    #[error("node {node} is not strictly inside the contour circle")]
    NodeOutsideContour { node: f64 },

    #[error("contour integral has imaginary residual {imag} above tolerance")]
    ImaginaryResidual { imag: f64 },

    #[error("remainder order {order} exceeds the {available} available Newton coefficients")]
    RemainderOrder { order: usize, available: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
