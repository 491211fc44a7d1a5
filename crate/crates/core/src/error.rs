use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("unknown field specification `{0}` (expected F<p> or Q)")]
    BadField(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("quiver has an oriented cycle through vertex `{0}`")]
    CyclicQuiver(String),
    #[error("quiver is not connected: vertex `{0}` is unreachable")]
    Disconnected(String),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("dimension vector is zero")]
    ZeroVector,
    #[error("dimension vector has negative entries")]
    NegativeVector,

    #[error("modules live over different quivers")]
    QuiverMismatch,
    #[error("modules live over different fields")]
    FieldMismatch,
    #[error("blocks do not commute with the structure map `{0}`")]
    NotAMorphism(String),
    #[error("module is projective")]
    IsProjective,
    #[error("module is injective")]
    IsInjective,
    #[error("module is not indecomposable")]
    NotIndecomposable,
    #[error("quiver `{0}` is not of finite representation type")]
    NotRepresentationFinite(String),

    #[error("epsilon does not square to zero at vertex `{0}`")]
    EpsNotSquareZero(String),
    #[error("epsilon does not commute with arrow `{0}`")]
    EpsNotCommuting(String),
    #[error("module is not perfect")]
    NotPerfect,
    #[error("map is not a ghost map")]
    NotGhost,
    #[error("factorization through ghost generators failed: {0}")]
    FactorizationFailed(String),
    #[error("modules are not isomorphic")]
    NotIsomorphic,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
