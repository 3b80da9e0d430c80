use thiserror::Error;

/// Errors shared by all engine layers.
///
/// Domain errors describe invalid inputs or structural failures detected by
/// exact checks; `Internal` flags a verification failure that indicates a bug
/// rather than bad input.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("zero vector has no primitive representative")]
    ZeroVector,
    #[error("vectors are linearly dependent")]
    DependentVectors,
    #[error("kernel dimension is {0}, expected 1")]
    NotCircuitLike(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cone contains a line")]
    NotStrictlyConvex,
    #[error("cone is not simplicial")]
    NotSimplicial,
    #[error("determinant {0} exceeds the enumeration cap {1}")]
    DetTooLarge(String, u64),
    #[error("cones intersect in a non-face: {0}")]
    NotAFan(String),
    #[error("cone is not a face of the fan")]
    NotAFace,
    #[error("ray is not in the support of the fan")]
    RayNotInSupport,
    #[error("ray already spans a ray of the fan")]
    RayOnExistingRay,
    #[error("fan supports differ")]
    SupportMismatch,
    #[error("spans do not form a direct sum of lattices")]
    NotDirectSum,
    #[error("cone is not covered by the fan")]
    NotCovered,
    #[error("point is not in the support of the fan")]
    NotInSupport,
    #[error("point is not in the cone")]
    NotInCone,
    #[error("step limit of {0} exceeded")]
    StepLimitExceeded(u64),
    #[error("projected cone contains a line: {0}")]
    ImageNotStrictlyConvex(String),
    #[error("boundary {0} is not a fan")]
    BoundaryNotFan(String),
    #[error("cone is not dependent")]
    NotDependent,
    #[error("cone is dependent")]
    NotIndependent,
    #[error("circuit is degenerate (a ray projects to zero)")]
    DegenerateCircuit,
    #[error("vector is not in the projection of the cone")]
    NotInProjection,
    #[error("center matches neither update case")]
    CaseNotApplicable,
    #[error("cobordism is not collapsible")]
    NotCollapsible,
    #[error("cobordism is not pi-nonsingular")]
    NotPiNonsingular,
    #[error("elementary move is not applicable: {0}")]
    NotApplicable(String),
    #[error("factorization step is not a regular star subdivision: {0}")]
    NotRegularStep(String),
    #[error("marker is not a generator of the ideal")]
    MarkerNotGenerator,
    #[error("generator is not nonnegative on the cone")]
    GeneratorOutsideDual,
    #[error("empty generating set")]
    EmptyIdeal,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal verification failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
