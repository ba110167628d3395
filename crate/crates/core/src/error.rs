use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Ways a list of 0/1 matrices can fail to be an association scheme.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomError {
    #[error("no relations given")]
    Empty,
    #[error("relation {relation} has order {found}, expected {expected}")]
    OrderMismatch {
        relation: usize,
        expected: usize,
        found: usize,
    },
    #[error("first relation is not the identity")]
    IdentityMissing,
    #[error("cell ({row}, {col}) is covered {count} times")]
    CellCoverage { row: usize, col: usize, count: usize },
    #[error("relation {relation} is empty")]
    EmptyRelation { relation: usize },
    #[error("transpose of relation {relation} is not a relation")]
    TransposeMissing { relation: usize },
    #[error("product of relations {i} and {j} is not constant on relation {k}")]
    ProductNotConstant { i: usize, j: usize, k: usize },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix order {order} is outside 1..={max}")]
    OrderOutOfRange { order: usize, max: usize },
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("matrix is not skew-Hadamard")]
    NotSkewHadamard,
    #[error("skew-Hadamard matrix is not normalized")]
    NotNormalized,
    #[error("{q} is not a prime congruent to 3 mod 4")]
    InvalidPaleyPrime { q: u64 },
    #[error("skew-Hadamard matrix of order {0} is too small to carry a class-2 scheme")]
    HadamardTooSmall(usize),
    #[error("invalid association scheme: {0}")]
    Axiom(#[from] AxiomError),
    #[error("scheme must be non-symmetric of class 2")]
    NotNonSymmetricClass2,
    #[error("class-2 non-symmetric scheme needs order = 3 mod 4, got {0}")]
    OrderResidue(usize),
    #[error("point {point} out of range 1..={order}")]
    PointOutOfRange { point: usize, order: usize },
    #[error("points must be distinct and strictly increasing")]
    PointsNotIncreasing,
    #[error("scheme of order {order} is not a doubled scheme with n >= 8")]
    NotDoubledScale { order: usize },
    #[error("extremal triple characterization failed: {0}")]
    ExtremalTriplesViolated(String),
    #[error("degree {degree} exceeds the automorphism search cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("permutation degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("group is not transitive")]
    IntransitiveGroup,
    #[error("second scheme is not the doubling of the first")]
    NotDoubling,
    #[error("scheme order {0} < 7: the order-7 doubling is the schurian Fano exception")]
    TheoremOrderTooSmall(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
