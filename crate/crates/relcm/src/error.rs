use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for ground set of size {size}")]
    VertexOutOfRange { index: usize, size: usize },

    #[error("ground set must have at least one vertex")]
    EmptyGround,

    #[error("ground set of size {size} exceeds the supported maximum of {max}")]
    GroundTooLarge { size: usize, max: usize },

    #[error("operation is undefined on the void complex")]
    VoidComplex,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("cannot parse field spec {0:?}: expected \"q\" or \"fp:<prime>\"")]
    BadFieldSpec(String),

    #[error("degree vector has length {got}, expected {expected}")]
    DegreeLengthMismatch { expected: usize, got: usize },

    #[error("degree vector lies outside the required sign cone: {0}")]
    DegreeOutsideCone(&'static str),

    #[error("generator is not squarefree")]
    NonSquarefree,

    #[error("classical Reisner criterion requires m = 0, got m = {m}")]
    XVerticesPresent { m: usize },

    #[error("operation is undefined on the unit ideal (zero ring)")]
    UnitIdeal,

    #[error("complex is not relative Cohen-Macaulay with respect to Q")]
    NotRelativeCm,

    #[error("the zero form does not define a hypersurface ring")]
    ZeroForm,

    #[error("term exponents do not match the declared bidegree ({0}, {1})")]
    BidegreeMismatch(u32, u32),

    #[error("two terms share the same exponent pair")]
    DuplicateTerm,

    #[error("content ideal has non-monomial coefficients; predicate not supported")]
    UnsupportedContent,

    #[error("internal cross-check failed: {0}")]
    CrossCheckFailed(String),

    #[error("invalid input document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
