//! Error types shared across the crate.

use alloc::string::String;

/// Reason a candidate diagram fails validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramDefect {
    /// The strand set is not a perfect matching of the boundary points.
    NotAMatching,
    /// Two strands cross in the cyclic boundary order.
    Crossing,
    /// The number of decorated strands is odd.
    OddDecorations,
    /// A decorated strand is not exposed to the left boundary.
    UnexposedDecoration,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operands live over different scalar rings")]
    RingMismatch,
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("boundary mismatch: expected {expected} points, found {found}")]
    BoundaryMismatch { expected: usize, found: usize },
    #[error("circle parameters differ between operands")]
    DeltaMismatch,
    #[error("operation requires circle parameter -2")]
    DeltaNotMinusTwo,
    #[error("index {index} out of range (valid 1..={max})")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("strand not present in diagram")]
    StrandNotInDiagram,
    #[error("invalid diagram: {0:?}")]
    InvalidDiagram(DiagramDefect),
    #[error("composition produced an invalid diagram: {0:?}")]
    CompositionClosure(DiagramDefect),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("target is outside the span of the basis images")]
    Inconsistent,
    #[error("basis images are linearly dependent; coefficients not unique")]
    NonUnique,
    #[error("unsupported scalar ring: {0}")]
    UnsupportedRing(&'static str),
    #[error("tensor with a decorated right factor requires delta = -2")]
    UnsupportedTensor,
    #[error("juxtaposition requires an undecorated right factor")]
    JuxtaposeDecorated,
    #[error("prime search exceeded 2^31")]
    PrimeSearchOverflow,
    #[error("high-precision value not within tolerance of an integer: {0}")]
    ToleranceBreach(String),
    #[error("projector cross-check failed: {0}")]
    SignConvention(String),
    #[error("ring has no square root of -1; degree {0} needs one for the tail projector")]
    MissingImaginaryUnit(u32),
}
