use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("negative exponent at byte {0}")]
    NegativeExponent(usize),
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous of the declared degree: {0}")]
    DegreeMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("duplicate index {0}")]
    DuplicateIndex(usize),
    #[error("malformed surface: {0}")]
    MalformedSurface(String),
    #[error("malformed index set: {0}")]
    MalformedIndexSet(String),
    #[error("homogenization target {target} below polynomial degree {degree}")]
    HomogenizeTarget { target: u32, degree: u32 },
    #[error("degree bound exceeded: interpolation residual nonzero on held-out point")]
    DegreeBoundExceeded,
    #[error("no nonsingular column selection exists: {0}")]
    NoValidIndexSet(String),
    #[error("the kernel map is not injective; the complex is degenerate")]
    SingularComplex,
    #[error("all Macaulay denominator minors vanish")]
    MacaulayDegenerate,
    #[error("moving quadric hypothesis fails: {0}")]
    SingularQuadricMatrix(String),
    #[error("base points detected: the specialized resultant vanishes identically")]
    BasePoints,
    #[error("exact identity check failed: {0}")]
    Identity(String),
    #[error("input error: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
