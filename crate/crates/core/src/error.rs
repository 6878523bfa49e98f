use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system {letter}{rank}")]
    UnsupportedType { letter: String, rank: usize },
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("simple reflection index {index} out of range 0..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("coweight {0:?} is not in the coroot lattice")]
    NotInCorootLattice(Vec<i64>),
    #[error("matrix does not permute the root system")]
    NotRootPermuting,
    #[error("facet {0:?} is not a proper subset of the affine nodes")]
    ImproperFacet(Vec<usize>),
    #[error("facet {sub:?} is not contained in {sup:?}")]
    NotSubfacet { sub: Vec<usize>, sup: Vec<usize> },
    #[error("coweight {0:?} is not antidominant")]
    NotAntidominant(Vec<i64>),
    #[error("element is not of minimal length in its coset modulo the facet {0:?}")]
    NotRightMinimal(Vec<usize>),
    #[error("Schubert variety is a point / stabilizer not proper")]
    StabilizerNotProper,
    #[error("{0:?} is not an automorphism of the affine Coxeter diagram")]
    InvalidDiagramAutomorphism(Vec<usize>),
    #[error("operation requires an element with trivial length-zero label")]
    NontrivialLabel,
    #[error("ball of radius {radius} exceeds the configured limit of {limit} elements")]
    BallTooLarge { radius: usize, limit: usize },
    #[error("element lies outside the ball of radius {radius}")]
    OutsideBall { radius: usize },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
