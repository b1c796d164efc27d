use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank {rank} out of bounds for a forest of size {size}")]
    RankOutOfBounds { rank: usize, size: usize },

    #[error("cover ({child}, {parent}) does not respect the total order")]
    CoverOrderViolation { child: usize, parent: usize },

    #[error("cover ({child}, {parent}) is implied by the other covers")]
    RedundantCover { child: usize, parent: usize },

    #[error("lower set of {witness} is not an interval of the total order")]
    IntervalViolation { witness: usize },

    #[error("the empty forest has no boundary")]
    EmptyForest,

    #[error("boundary mismatch: domain [{dom}] against codomain [{cod}]")]
    BoundaryMismatch { dom: usize, cod: usize },

    #[error("not a boundary-compatible cocone: {0}")]
    NotACocone(String),

    #[error("vertex {vertex} is not a unary internal vertex")]
    NotUnary { vertex: usize },

    #[error("contracting vertex {vertex} broke the interval condition at {witness}")]
    IntervalViolationAfterContraction { vertex: usize, witness: usize },

    #[error("index mismatch: {0}")]
    IndexMismatch(String),

    #[error("invalid surjection: {0}")]
    InvalidSurjection(String),

    #[error("invalid injection: {0}")]
    InvalidInjection(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("differentials compose to a nonzero map at degree {degree}")]
    NotAComplex { degree: usize },

    #[error("not a chain map at degree {degree}")]
    NotChainMap { degree: usize },

    #[error("simplicial identity d_{i} d_{j} = d_{jm1} d_{i} fails on degree {n}", jm1 = .j - 1)]
    SimplicialIdentityViolation { n: usize, i: usize, j: usize },

    #[error("augmentation does not coequalize d_0 and d_1")]
    AugmentationViolation,

    #[error("functor law violated: {0}")]
    FunctorLawViolation(String),

    #[error("map is not natural: {0}")]
    NotNatural(String),

    #[error("unit component at degree {degree} is not a cone")]
    NotACone { degree: usize },

    #[error("truncation {0} is too small for this operation")]
    TruncationTooSmall(usize),

    #[error("malformed input: {0}")]
    MalformedInput(String),
}

impl Error {
    /// The variant name, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::RankOutOfBounds { .. } => "RankOutOfBounds",
            Error::CoverOrderViolation { .. } => "CoverOrderViolation",
            Error::RedundantCover { .. } => "RedundantCover",
            Error::IntervalViolation { .. } => "IntervalViolation",
            Error::EmptyForest => "EmptyForest",
            Error::BoundaryMismatch { .. } => "BoundaryMismatch",
            Error::NotACocone(_) => "NotACocone",
            Error::NotUnary { .. } => "NotUnary",
            Error::IntervalViolationAfterContraction { .. } => "IntervalViolationAfterContraction",
            Error::IndexMismatch(_) => "IndexMismatch",
            Error::InvalidSurjection(_) => "InvalidSurjection",
            Error::InvalidInjection(_) => "InvalidInjection",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotAComplex { .. } => "NotAComplex",
            Error::NotChainMap { .. } => "NotChainMap",
            Error::SimplicialIdentityViolation { .. } => "SimplicialIdentityViolation",
            Error::AugmentationViolation => "AugmentationViolation",
            Error::FunctorLawViolation(_) => "FunctorLawViolation",
            Error::NotNatural(_) => "NotNatural",
            Error::NotACone { .. } => "NotACone",
            Error::TruncationTooSmall(_) => "TruncationTooSmall",
            Error::MalformedInput(_) => "MalformedInput",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::MalformedInput(format!("line {} column {}: {e}", e.line(), e.column()))
    }
}
